// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cccmap/ccc_mse_map.hpp"
#include "cccmap/errors.hpp"
#include "cccmap/even_p.hpp"
#include "cccmap/loss.hpp"
#include "cccmap/lp_bounds.hpp"
#include "cccmap/oracles.hpp"
#include "cccmap/permutation.hpp"
#include "cccmap/stats.hpp"
#include "cccmap/tolerances.hpp"
#include "support.hpp"

#ifndef CCCMAP_CLI_PATH
#error "CCCMAP_CLI_PATH must name the cccmap executable"
#endif

using namespace cccmap;
using testing::Gen;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel_diff(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double max_abs(const Sequence& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double cosine(const Sequence& a, const Sequence& b) {
  double ab = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

// ---------------------------------------------------------------------------

Verdict mapping_identity() {
  const auto t0 = Clock::now();
  Gen gen(101);
  double worst_rel = 0.0, worst_resid = 0.0;
  int skipped = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 200));
    const auto x = gen.uniform_vec(n, -10, 10);
    const auto y = gen.uniform_vec(n, -10, 10);
    const double direct = ccc(x, y);
    const double mapped = ccc_from_mse_cov(mse(x, y), covariance(x, y));
    // independent long-double reference keeps the two library routes honest
    if (rel_diff(direct, testing::ref_ccc(x, y)) > 1e-9) ++skipped;
    worst_rel = std::max(worst_rel, rel_diff(direct, mapped));
    worst_resid = std::max(worst_resid, std::abs(variance_identity_residual(x, y)));
  }
  const double secs = seconds_since(t0);
  return {worst_rel <= 1e-12 && worst_resid <= 1e-12 && skipped == 0 && secs < 5.0,
          fmt("10000 pairs, max rel diff %.2e, max residual %.2e, reference mismatches %d, %.2f s",
              worst_rel, worst_resid, skipped, secs)};
}

Verdict envelope_anchors() {
  struct Anchor {
    const char* name;
    double got, want;
  };
  const Anchor anchors[] = {
      {"Psi(1)", psi_upper(1.0), 0.8}, {"Psi(2)", psi_upper(2.0), 0.6}, {"psi(1)", psi_lower(1.0), 0.0},
      {"psi(2)", psi_lower(2.0), -1.0}, {"Psi(0)", psi_upper(0.0), 1.0}, {"psi(0)", psi_lower(0.0), 1.0},
  };
  double worst = 0.0;
  std::string bad;
  for (const auto& a : anchors) {
    const double d = std::abs(a.got - a.want);
    worst = std::max(worst, d);
    if (d > 1e-15) bad += std::string(" ") + a.name;
  }
  return {bad.empty(), fmt("6 anchors, max abs error %.2e%s", worst, bad.c_str())};
}

Verdict mse_attainment() {
  const auto t0 = Clock::now();
  Gen gen(202);
  double worst_attain = 0.0;
  std::uint64_t samples = 0, violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 60));
    auto gold = gen.uniform_vec(n, -5, 5);
    if (population_variance(gold) == 0.0) gold[0] += 1.0;
    const CenteredGold g(gold);
    const double m = g.variance() * std::pow(gen.uniform(0.0, 3.0), 2);
    const double x = std::sqrt(m / g.variance());
    const BoundsResult b = bounds_given_mse(g, m);
    const double hi = ccc(gold, testing::add(gold, b.err_max));
    const double lo = ccc(gold, testing::add(gold, b.err_min));
    worst_attain = std::max({worst_attain, std::abs(hi - psi_upper(x)), std::abs(lo - psi_lower(x)),
                             std::abs(mse(gold, testing::add(gold, b.err_max)) - m) / std::max(1.0, m)});
    const OracleReport r = mse_sphere_oracle(gold, m, 100, 7000 + t);
    samples += r.trials;
    if (r.best_value > psi_upper(x) + tol::kOracleSlack) ++violations;
    if (r.worst_value < psi_lower(x) - tol::kOracleSlack) ++violations;
  }
  const double secs = seconds_since(t0);
  return {worst_attain <= 1e-10 && violations == 0 && samples >= 100000 && secs < 60.0,
          fmt("1000 instances, max attainment error %.2e; %llu sphere samples, %llu outside envelope, %.2f s",
              worst_attain, static_cast<unsigned long long>(samples),
              static_cast<unsigned long long>(violations), secs)};
}

Verdict counterexample() {
  const Sequence gold{0.5, -1.2, 2.0, 0.1, 3.3};
  const CenteredGold g(gold);
  // half the gold variance, errors opposing the gold; versus the full variance, errors along it
  const auto p1 = testing::add(gold, bounds_given_mse(g, 0.5 * g.variance()).err_min);
  const auto p2 = testing::add(gold, bounds_given_mse(g, g.variance()).err_max);
  const double m1 = mse(gold, p1), m2 = mse(gold, p2);
  const double c1 = ccc(gold, p1), c2 = ccc(gold, p2);
  return {m1 < m2 && c1 < c2, fmt("MSE1 %.6g < MSE2 %.6g and ccc1 %.6g < ccc2 %.6g", m1, m2, c1, c2)};
}

Verdict norm_sandwich_check() {
  Gen gen(303);
  std::uint64_t checks = 0, violations = 0;
  double worst_eq = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 64));
    Sequence e(n);
    for (double& v : e) v = gen.normal() * std::exp(gen.uniform(-3, 3));
    for (int j = 0; j < 20; ++j) {
      const double r = gen.uniform(0.1, 8.0);
      const double p = r + gen.uniform(0.01, 10.0);
      const NormSandwich s = norm_sandwich(e, r, p);
      ++checks;
      if (s.lo > s.mid * (1 + 1e-12) || s.mid > s.hi * (1 + 1e-12)) ++violations;
    }
    // equality cases: a constant vector meets the upper end, a single spike the lower
    const double r = gen.uniform(0.1, 8.0), p = r + gen.uniform(0.01, 10.0);
    const NormSandwich flat = norm_sandwich(Sequence(n, gen.uniform(0.1, 5.0)), r, p);
    Sequence spike(n, 0.0);
    spike[static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1))] = gen.uniform(-5.0, 5.0);
    const NormSandwich one = norm_sandwich(spike, r, p);
    worst_eq = std::max({worst_eq, rel_diff(flat.mid, flat.hi), rel_diff(one.lo, one.mid)});
  }
  return {violations == 0 && worst_eq <= 1e-13,
          fmt("%llu (r,p) checks, %llu violations; equality cases max rel gap %.2e",
              static_cast<unsigned long long>(checks), static_cast<unsigned long long>(violations), worst_eq)};
}

Verdict theta_machinery() {
  const double tmax = theta_max(1.0, 64);
  const double conj = theta_conjugate(8.0, 0.75);
  const double at6 = psi_lower(8.0 * 0.75);
  const double at_conj = psi_lower(conj * 0.75);
  const auto four = [](double v) { return std::round(v * 1e4) / 1e4; };
  Gen gen(404);
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const double x = gen.uniform(0.05, 4.0);
    const double th = gen.uniform(1.0 + 1e-3, 30.0) / x;
    worst = std::max(worst, rel_diff(theta_conjugate(theta_conjugate(th, x), x), th));
  }
  const bool ok = std::abs(tmax - 8.0) <= 1e-12 && std::abs(conj - 1.6) <= 1e-12 && four(at6) == -0.3846 &&
                  four(at_conj) == -0.3846 && worst <= 1e-12;
  return {ok, fmt("theta_max(1,64) = %.15g, conjugate(8, 0.75) = %.15g, psi(6) = %.4f, psi(1.2) = %.4f, "
                  "involution max rel error %.2e",
                  tmax, conj, at6, at_conj, worst)};
}

Verdict permutation_optimality() {
  const auto t0 = Clock::now();
  Gen gen(505);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(3, 8));
    Sequence gold = gen.uniform_vec(n, -4, 4);
    Sequence e = gen.uniform_vec(n, -2, 2);
    if (t % 4 == 0) e[1] = e[0];  // ties in the error multiset
    if (t % 5 == 0) gold[2] = gold[1];
    const ErrorSet es(e);
    const OptimalPermutations best = optimal_permutations(gold, es);
    const OracleReport plus = permutation_oracle(gold, es, Convention::PredictionMinusGold);
    const OracleReport minus = permutation_oracle(gold, es, Convention::GoldMinusPrediction);
    worst = std::max({worst, std::abs(plus.best_value - best.max1.formula_value),
                      std::abs(plus.worst_value - best.min1.formula_value),
                      std::abs(minus.best_value - best.max2.formula_value),
                      std::abs(minus.worst_value - best.min2.formula_value),
                      std::abs(best.max1.ccc_value - best.max1.formula_value),
                      std::abs(best.max2.ccc_value - best.max2.formula_value)});
  }
  int out_of_range = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 100));
    Sequence gold = gen.uniform_vec(n, -10, 10);
    Sequence e(n);
    const double scale = std::exp(gen.uniform(-4, 4));
    for (double& v : e) v = gen.normal() * scale;
    const OptimalPermutations best = optimal_permutations(gold, ErrorSet(e));
    for (double v : {best.max1.ccc_value, best.max2.ccc_value}) {
      if (!(v >= 0.0 && v <= 1.0)) ++out_of_range;
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-12 && out_of_range == 0 && secs < 120.0,
          fmt("200 exhaustive instances, max disagreement %.2e; 10000 maxima, %d outside [0,1]; %.2f s", worst,
              out_of_range, secs)};
}

Verdict even_p_solver() {
  Gen gen(606);
  double worst_cos = 1.0, worst_ccc = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(3, 12));
    const CenteredGold g(gen.uniform_vec(n, -3, 3));
    const double lk = gen.uniform(0.2, 4.0);
    const double x = lk / (std::sqrt(static_cast<double>(n)) * g.stddev());
    const double m = lk * lk / static_cast<double>(n);
    const BoundsResult closed = bounds_given_mse(g, m);
    for (auto obj : {Objective::Max, Objective::Min}) {
      const SolverState s = solve(StationarityProblem{g, 2, lk, obj}, 10 + t);
      const Sequence& target = obj == Objective::Max ? closed.err_max : closed.err_min;
      worst_cos = std::min(worst_cos, cosine(s.d, target));
      worst_ccc = std::max(worst_ccc, std::abs(s.ccc - (obj == Objective::Max ? psi_upper(x) : psi_lower(x))));
    }
  }
  int dominated = 0;
  double worst_resid = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(3, 6));
    const auto gold = gen.uniform_vec(n, -3, 3);
    const CenteredGold g(gold);
    const double lk = gen.uniform(0.3, 3.0);
    const SolverState hi = solve(StationarityProblem{g, 4, lk, Objective::Max}, 40 + t);
    const SolverState lo = solve(StationarityProblem{g, 4, lk, Objective::Min}, 40 + t);
    const OracleReport r = lk_sphere_oracle(gold, 4, lk, 100000, 9000 + t);
    worst_resid = std::max({worst_resid, hi.residual_norm, lo.residual_norm});
    if (hi.ccc >= r.best_value - tol::kOracleSlack && lo.ccc <= r.worst_value + tol::kOracleSlack) ++dominated;
  }
  return {worst_cos >= 1.0 - 1e-6 && worst_ccc <= 1e-6 && dominated == 20 && worst_resid <= 1e-8,
          fmt("k=2: min cosine 1-%.2e, max ccc gap %.2e; k=4: %d/20 dominate 1e5 samples, max residual %.2e",
              1.0 - worst_cos, worst_ccc, dominated, worst_resid)};
}

LossParams general_params(LossVariant v, std::size_t n, double eps, double alpha, int beta) {
  LossParams p;
  p.variant = v;
  p.per_sample_eps.assign(n, eps);
  p.per_sample_alpha.assign(n, alpha);
  p.per_sample_beta.assign(n, beta);
  return p;
}

Verdict loss_gradients() {
  Gen gen(707);
  int checks = 0, failures = 0;
  double worst_fd = 0.0;
  for (auto v : {LossVariant::Ratio, LossVariant::RatioPow, LossVariant::GeneralRatio, LossVariant::Diff,
                 LossVariant::DiffPow, LossVariant::GeneralDiff, LossVariant::AbsMseOverCov}) {
    for (int t = 0; t < 100; ++t) {
      const auto n = static_cast<std::size_t>(gen.integer(2, 10));
      const auto g = gen.uniform_vec(n, 0.5, 2.0);
      auto p = g;
      for (double& x : p) x += gen.uniform(-0.4, 0.4);
      LossParams prm = general_params(v, n, 1, 1, 0);
      for (std::size_t j = 0; j < n; ++j) {
        prm.per_sample_eps[j] = gen.uniform(0.5, 2);
        prm.per_sample_alpha[j] = gen.uniform(0.1, 1);
        prm.per_sample_beta[j] = gen.integer(0, 2);
      }
      prm.gamma = gen.uniform(0.5, 2.5);
      prm.alpha = gen.uniform(0.1, 1.0);
      prm.beta = gen.integer(0, 2);
      const auto f = [&](SequenceView x) { return loss(prm, g, x); };
      const Sequence analytic = loss_gradient(prm, g, p);
      const Sequence numeric = finite_difference(f, p, 1e-6 * max_abs(p));
      double err = 0.0;
      for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(analytic[i] - numeric[i]));
      const double rel = err / std::max(max_abs(analytic), 1e-8);
      worst_fd = std::max(worst_fd, rel);
      ++checks;
      if (rel > 1e-5) ++failures;
    }
  }

  double worst_chain = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 20));
    const auto g = gen.uniform_vec(n, 0.5, 3);
    const auto p = gen.uniform_vec(n, 0.5, 3);
    const double gamma = gen.uniform(0.3, 3.0), alpha = gen.uniform(0.1, 2.0);
    const int beta = gen.integer(0, 2);

    LossParams ratio_pow;
    ratio_pow.variant = LossVariant::RatioPow;
    ratio_pow.gamma = gamma;
    LossParams general_ratio = general_params(LossVariant::GeneralRatio, n, 1, 1, 0);
    general_ratio.gamma = gamma;
    worst_chain = std::max(worst_chain, rel_diff(loss(general_ratio, g, p), loss(ratio_pow, g, p)));
    ratio_pow.gamma = 1.0;
    worst_chain = std::max(worst_chain, rel_diff(loss(ratio_pow, g, p), std::abs(loss(LossParams{}, g, p))));

    LossParams diff_pow;
    diff_pow.variant = LossVariant::DiffPow;
    diff_pow.gamma = gamma;
    diff_pow.alpha = alpha;
    diff_pow.beta = beta;
    LossParams general_diff = general_params(LossVariant::GeneralDiff, n, 1, alpha, beta);
    general_diff.gamma = gamma;
    worst_chain = std::max(worst_chain, rel_diff(loss(general_diff, g, p), loss(diff_pow, g, p)));
    diff_pow.gamma = 1.0;
    diff_pow.beta = 0;
    LossParams diff;
    diff.variant = LossVariant::Diff;
    diff.alpha = alpha;
    worst_chain = std::max(worst_chain, rel_diff(loss(diff_pow, g, p), std::abs(loss(diff, g, p))));
  }
  return {failures == 0 && worst_chain <= 1e-12,
          fmt("%d gradient checks, %d above 1e-5 (worst %.2e); specialization chain max rel diff %.2e", checks,
              failures, worst_fd, worst_chain)};
}

Verdict descent_demo() {
  Gen gen(808);
  int monotone = 0;
  double min_gain = 1.0;
  for (int s = 0; s < 10; ++s) {
    const auto n = static_cast<std::size_t>(gen.integer(5, 40));
    const auto gold = gen.uniform_vec(n, -3, 3);
    const CenteredGold g(gold);
    // errors opposed to the gold: negative gold/error covariance, prediction still positively correlated
    auto start = gold;
    const double c = gen.uniform(0.3, 0.9);
    for (std::size_t i = 0; i < n; ++i) start[i] += -c * g.centered()[i] + 0.05 * c * gen.normal();
    LossParams prm;
    prm.variant = LossVariant::AbsMseOverCov;
    const Trace t = training_trace(prm, gold, start, 0.5, 500);
    bool strict = !t.diverged && t.rows.size() == 501 && covariance(gold, difference(start, gold)) < 0.0 &&
                  covariance(gold, start) > 0.0;
    for (std::size_t i = 1; strict && i < t.rows.size(); ++i) {
      // once ccc has converged to 1 it cannot rise further
      strict = t.rows[i].ccc > t.rows[i - 1].ccc || t.rows[i - 1].ccc >= 1.0 - 1e-12;
    }
    min_gain = std::min(min_gain, t.rows.back().ccc - t.rows.front().ccc);
    if (strict && t.rows.back().ccc > t.rows.front().ccc) ++monotone;
  }

  const Sequence gold{0.2, 1.4, -0.9, 2.2, 0.5, -1.6, 1.0};
  const CenteredGold cg(gold);
  auto start = gold;
  for (std::size_t i = 0; i < start.size(); ++i) start[i] -= 4.0 * cg.centered()[i];
  LossParams sse;
  sse.variant = LossVariant::Diff;
  sse.alpha = 0.0;
  const Trace t = training_trace(sse, gold, start, 0.05, 50);
  int bad_steps = 0;
  bool fixed_step = true;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    if (t.rows[i].mse < t.rows[i - 1].mse && t.rows[i].ccc < t.rows[i - 1].ccc) ++bad_steps;
    fixed_step = fixed_step && t.rows[i].step == 0.05;
  }
  return {monotone == 10 && bad_steps > 0 && fixed_step,
          fmt("|MSE/cov|: %d/10 seeds strictly increase ccc over 500 steps (min gain %.3g); "
              "plain MSE: %d steps lower both MSE and ccc",
              monotone, min_gain, bad_steps)};
}

// ---------------------------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

Verdict cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("cccmap_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  {
    std::ofstream pairs(dir / "pairs.csv");
    std::ofstream gold(dir / "gold.csv");
    Gen gen(909);
    for (int i = 0; i < 7; ++i) {
      const double g = gen.uniform(-3, 3);
      pairs << fmt("%.17g,%.17g\n", g, g + gen.uniform(-1, 1));
      gold << fmt("%.17g\n", g);
    }
  }
  const std::string exe = CCCMAP_CLI_PATH;
  const std::string pairs = (dir / "pairs.csv").string(), gold = (dir / "gold.csv").string();
  const std::string out = (dir / "out.csv").string();
  const std::vector<std::string> commands{
      "analyze --input " + pairs,
      "analyze --json --input " + pairs,
      "bounds-mse --mse 0.7 --json --input " + gold + " --out " + out,
      "bounds-lk --k 1 --lk 2.5 --input " + gold,
      "bounds-lk --k 4 --lk 2.5 --json --input " + gold,
      "permute --audit --json --input " + pairs + " --out " + out,
      "solve-even-p --k 4 --lk 1.5 --seed 5 --json --input " + gold + " --out " + out,
      "solve-even-p --k 6 --lk 1.5 --objective min --seed 5 --input " + gold,
      "loss --variant abs-mse-over-cov --iters 100 --step 0.1 --json --input " + pairs + " --out " + out,
      "loss --variant general-diff --gamma 1.5 --input " + pairs,
      "region --steps 21",
      "region --kind lk --k 4 --n 16 --steps 21 --theta-steps 5",
      "audit --seed 42 --n 6 --trials 5000 --json",
      "audit --oracle lk-sphere --k 3 --seed 42 --n 5 --trials 5000",
  };
  int mismatched = 0, failed = 0;
  std::string first_bad;
  for (const auto& c : commands) {
    std::uint64_t h[2];
    for (int run = 0; run < 2; ++run) {
      fs::remove(out);
      int status = 0;
      const std::string text = capture(exe + " " + c + " 2>&1", status);
      if (status != 0) {
        ++failed;
        if (first_bad.empty()) first_bad = c;
      }
      h[run] = fnv1a(text + (fs::exists(out) ? slurp(out) : std::string()));
    }
    if (h[0] != h[1]) {
      ++mismatched;
      if (first_bad.empty()) first_bad = c;
    }
  }
  fs::remove_all(dir);
  return {mismatched == 0 && failed == 0,
          fmt("%zu commands run twice, %d hash mismatches, %d nonzero exits%s%s", commands.size(), mismatched,
              failed, first_bad.empty() ? "" : "; first problem: ", first_bad.c_str())};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "ccc via MSE and covariance", mapping_identity},
      {2, "envelope anchor values", envelope_anchors},
      {3, "envelope attainment at fixed MSE", mse_attainment},
      {4, "lower MSE with lower ccc", counterexample},
      {5, "norm sandwich", norm_sandwich_check},
      {6, "theta range and conjugates", theta_machinery},
      {7, "permutation optimality", permutation_optimality},
      {8, "even-k solver", even_p_solver},
      {9, "loss gradients", loss_gradients},
      {10, "descent behaviour of |MSE/cov| vs MSE", descent_demo},
      {11, "CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
