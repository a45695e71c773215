#include "cccmap/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cccmap/errors.hpp"

namespace cccmap {

namespace {

struct Tracker {
  OracleReport report;
  bool empty = true;

  void offer(double value, const Sequence& witness) {
    ++report.trials;
    if (empty || value > report.best_value) {
      report.best_value = value;
      report.witness_best = witness;
    }
    if (empty || value < report.worst_value) {
      report.worst_value = value;
      report.witness_worst = witness;
    }
    empty = false;
  }
};

Sequence apply_errors(SequenceView gold, SequenceView d, double sign) {
  Sequence p(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) p[i] = gold[i] + sign * d[i];
  return p;
}

void rescale(Sequence& d, double norm, double target) {
  const double f = target / norm;
  for (double& v : d) v *= f;
}

}  // namespace

OracleReport permutation_oracle(SequenceView gold, const ErrorSet& errors, Convention convention) {
  require_valid(gold, "gold standard");
  require_same_length(gold, errors.values());
  if (gold.size() > kPermutationOracleMaxN) {
    throw TooLarge("permutation_oracle: N = " + std::to_string(gold.size()) + " exceeds 9");
  }
  const double sign = convention == Convention::PredictionMinusGold ? 1.0 : -1.0;
  Tracker t;
  // Canonical storage is sorted ascending, the starting point next_permutation expects.
  Sequence perm = errors.values();
  do {
    t.offer(ccc(gold, apply_errors(gold, perm, sign)), perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t.report;
}

void for_each_lk_sample(std::size_t n, double k, double lk, std::uint64_t trials,
                        std::uint64_t seed, const std::function<void(const Sequence&)>& visit) {
  if (!(lk > 0.0)) throw InvalidInput("sphere oracle: radius must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Sequence d(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (double& v : d) v = normal(rng);
    const double norm = lp_norm(d, k);
    if (norm == 0.0) continue;
    rescale(d, norm, lk);
    visit(d);
  }
}

OracleReport mse_sphere_oracle(SequenceView gold, double mse, std::uint64_t trials,
                               std::uint64_t seed, const std::vector<Sequence>& extra) {
  require_valid(gold, "gold standard");
  if (population_variance(gold) == 0.0) throw DegenerateVariance("gold standard is constant");
  if (!(mse > 0.0)) throw InvalidInput("mse_sphere_oracle: mse must be positive");
  const double radius = std::sqrt(static_cast<double>(gold.size()) * mse);
  Tracker t;
  t.report.seed = seed;
  for (Sequence d : extra) {
    require_same_length(gold, d);
    const double norm = lp_norm(d, 2.0);
    if (norm == 0.0) continue;
    rescale(d, norm, radius);
    t.offer(ccc(gold, apply_errors(gold, d, 1.0)), d);
  }
  for_each_lk_sample(gold.size(), 2.0, radius, trials, seed, [&](const Sequence& d) {
    t.offer(ccc(gold, apply_errors(gold, d, 1.0)), d);
  });
  t.report.seed = seed;
  return t.report;
}

OracleReport lk_sphere_oracle(SequenceView gold, double k, double lk, std::uint64_t trials,
                              std::uint64_t seed) {
  require_valid(gold, "gold standard");
  if (population_variance(gold) == 0.0) throw DegenerateVariance("gold standard is constant");
  Tracker t;
  for_each_lk_sample(gold.size(), k, lk, trials, seed, [&](const Sequence& d) {
    t.offer(ccc(gold, apply_errors(gold, d, 1.0)), d);
  });
  t.report.seed = seed;
  return t.report;
}

Sequence finite_difference(const std::function<double(SequenceView)>& f, SequenceView at, double h) {
  if (!(h > 0.0)) throw InvalidInput("finite_difference: h must be positive");
  Sequence x(at.begin(), at.end());
  Sequence g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double orig = x[i];
    x[i] = orig + h;
    const double up = f(x);
    x[i] = orig - h;
    const double down = f(x);
    x[i] = orig;
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

}  // namespace cccmap
