#pragma once

#include <array>
#include <vector>

#include "cccmap/stats.hpp"

namespace cccmap {

/// Multiset of signed error values, stored sorted ascending.
class ErrorSet {
 public:
  explicit ErrorSet(Sequence values);

  const Sequence& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double mean() const noexcept { return mean_; }
  double mse() const noexcept { return mse_; }

  friend bool operator==(const ErrorSet&, const ErrorSet&) = default;

 private:
  Sequence values_;
  double mean_ = 0.0;
  double mse_ = 0.0;
};

enum class Convention {
  PredictionMinusGold,  // P = G + E
  GoldMinusPrediction,  // P = G - E
};

enum class Objective { Max, Min };

const char* to_string(Convention c) noexcept;
const char* to_string(Objective o) noexcept;

/// rho_c of (G, G + E) written through sum g_i e_i.
double ccc_error_form1(SequenceView gold, SequenceView errors);
/// rho_c of (G, G - E) written through sum g_i e_i.
double ccc_error_form2(SequenceView gold, SequenceView errors);

struct PermutationResult {
  Convention convention = Convention::PredictionMinusGold;
  Objective objective = Objective::Max;
  /// assignment[r] = error value given to the gold sample of ascending rank r.
  Sequence assignment;
  /// Prediction in the original gold order.
  Sequence prediction;
  double ccc_value = 0.0;      // ccc(gold, prediction)
  double formula_value = 0.0;  // closed form evaluated in sorted space
};

struct OptimalPermutations {
  PermutationResult max1;  // P = G + E, errors sorted like gold
  PermutationResult max2;  // P = G - E, errors sorted opposite to gold
  PermutationResult min1;  // P = G + E, errors sorted opposite to gold
  PermutationResult min2;  // P = G - E, errors sorted like gold
};

/// Gold indices ordered by ascending (value, index).
std::vector<std::size_t> gold_rank_order(SequenceView gold);

OptimalPermutations optimal_permutations(SequenceView gold, const ErrorSet& errors);

enum class Max12 { Form1Better, Form2Better, Tie };
const char* to_string(Max12 m) noexcept;

/// Compares the two maximal closed forms by evaluating both.
Max12 compare_max12(SequenceView gold, const ErrorSet& errors);

/// (1/n) sum a_k b_k - mean(a) mean(b).
double chebyshev_check(SequenceView a, SequenceView b);

}  // namespace cccmap
