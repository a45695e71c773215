#include "cccmap/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cccmap/errors.hpp"

namespace cccmap {

ErrorSet::ErrorSet(Sequence values) : values_(std::move(values)) {
  require_valid(values_, "error set");
  std::sort(values_.begin(), values_.end());
  double sum = 0.0;
  double sq = 0.0;
  for (double v : values_) {
    sum += v;
    sq += v * v;
  }
  const double n = static_cast<double>(values_.size());
  mean_ = sum / n;
  mse_ = sq / n;
}

const char* to_string(Convention c) noexcept {
  return c == Convention::PredictionMinusGold ? "P=G+E" : "P=G-E";
}

const char* to_string(Objective o) noexcept { return o == Objective::Max ? "max" : "min"; }

const char* to_string(Max12 m) noexcept {
  switch (m) {
    case Max12::Form1Better: return "form1";
    case Max12::Form2Better: return "form2";
    case Max12::Tie: return "tie";
  }
  return "tie";
}

namespace {

struct ErrorMoments {
  double n;
  double mu_g;
  double var_g;
  double mu_e;
  double mse;
  double dot;  // sum g_i e_i
};

ErrorMoments moments(SequenceView gold, SequenceView errors) {
  require_same_length(gold, errors);
  require_valid(errors, "errors");
  ErrorMoments m{};
  m.n = static_cast<double>(gold.size());
  m.mu_g = mean(gold);
  m.var_g = population_variance(gold);
  double sum = 0.0;
  double sq = 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    sum += errors[i];
    sq += errors[i] * errors[i];
    dot += gold[i] * errors[i];
  }
  m.mu_e = sum / m.n;
  m.mse = sq / m.n;
  m.dot = dot;
  return m;
}

// 1 - N MSE / (2N (var_g - sign mu_g mu_e) + sign 2 dot + N MSE)
double closed_form(const ErrorMoments& m, double sign) {
  const double nmse = m.n * m.mse;
  const double denom =
      2.0 * m.n * (m.var_g - sign * m.mu_g * m.mu_e) + sign * 2.0 * m.dot + nmse;
  if (denom == 0.0) throw Singularity("ccc error form: zero denominator");
  return 1.0 - nmse / denom;
}

PermutationResult build(SequenceView gold, const std::vector<std::size_t>& order,
                        Sequence assignment, Convention conv, Objective obj) {
  PermutationResult r;
  r.convention = conv;
  r.objective = obj;
  Sequence sorted_gold(gold.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) sorted_gold[rank] = gold[order[rank]];
  r.formula_value = conv == Convention::PredictionMinusGold
                        ? ccc_error_form1(sorted_gold, assignment)
                        : ccc_error_form2(sorted_gold, assignment);
  const double sign = conv == Convention::PredictionMinusGold ? 1.0 : -1.0;
  r.prediction.resize(gold.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t i = order[rank];
    r.prediction[i] = gold[i] + sign * assignment[rank];
  }
  r.assignment = std::move(assignment);
  r.ccc_value = ccc(gold, r.prediction);
  return r;
}

}  // namespace

double ccc_error_form1(SequenceView gold, SequenceView errors) {
  return closed_form(moments(gold, errors), 1.0);
}

double ccc_error_form2(SequenceView gold, SequenceView errors) {
  return closed_form(moments(gold, errors), -1.0);
}

std::vector<std::size_t> gold_rank_order(SequenceView gold) {
  std::vector<std::size_t> order(gold.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gold[a] < gold[b]; });
  return order;
}

OptimalPermutations optimal_permutations(SequenceView gold, const ErrorSet& errors) {
  require_valid(gold, "gold standard");
  require_same_length(gold, errors.values());
  if (population_variance(gold) == 0.0) throw DegenerateVariance("gold standard is constant");

  const auto order = gold_rank_order(gold);
  const Sequence& ascending = errors.values();
  const Sequence descending(ascending.rbegin(), ascending.rend());

  OptimalPermutations out;
  out.max1 = build(gold, order, ascending, Convention::PredictionMinusGold, Objective::Max);
  out.max2 = build(gold, order, descending, Convention::GoldMinusPrediction, Objective::Max);
  out.min1 = build(gold, order, descending, Convention::PredictionMinusGold, Objective::Min);
  out.min2 = build(gold, order, ascending, Convention::GoldMinusPrediction, Objective::Min);
  return out;
}

Max12 compare_max12(SequenceView gold, const ErrorSet& errors) {
  const auto best = optimal_permutations(gold, errors);
  const double a = best.max1.formula_value;
  const double b = best.max2.formula_value;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (std::abs(a - b) <= 1e-12 * scale) return Max12::Tie;
  return a > b ? Max12::Form1Better : Max12::Form2Better;
}

double chebyshev_check(SequenceView a, SequenceView b) {
  require_same_length(a, b);
  const double n = static_cast<double>(a.size());
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return dot / n - mean(a) * mean(b);
}

}  // namespace cccmap
