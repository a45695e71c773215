#pragma once

#include <span>
#include <vector>

namespace cccmap {

/// Ordered real samples (a gold standard or a prediction).
using Sequence = std::vector<double>;
using SequenceView = std::span<const double>;

/// Throws InvalidInput if `s` is empty or holds a non-finite value.
void require_valid(SequenceView s, const char* what = "sequence");
void require_same_length(SequenceView x, SequenceView y);

double mean(SequenceView s);
/// Population variance, (1/N) sum (x_i - mean)^2, two-pass.
double population_variance(SequenceView s);
double population_stddev(SequenceView s);
/// Population covariance sigma_XY.
double covariance(SequenceView x, SequenceView y);

/// Pearson correlation. DegenerateVariance if either sequence is constant.
double pearson(SequenceView x, SequenceView y);

/// Concordance correlation coefficient
///   2 cov / (var_x + var_y + (mu_x - mu_y)^2).
/// Exactly 0 when cov == 0 and the denominator is positive;
/// DegenerateVariance when both sequences are constant.
double ccc(SequenceView x, SequenceView y);

/// (sum |e_i|^p)^(1/p) for p > 0.
double lp_norm(SequenceView e, double p);

double mse(SequenceView x, SequenceView y);
double mae(SequenceView x, SequenceView y);
/// Mean k-powered error: sum |x_i - y_i|^k / N.
double mke(SequenceView x, SequenceView y, double k);

/// Elementwise x - y.
Sequence difference(SequenceView x, SequenceView y);

struct PairStats {
  double mu_x = 0.0;
  double mu_y = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  double cov_xy = 0.0;
  double pearson = 0.0;
  double c_b = 0.0;  // accuracy coefficient
  double ccc = 0.0;
  double mse = 0.0;
  double mae = 0.0;
  double shift_penalty = 0.0;  // u = (mu_x - mu_y) / sqrt(sigma_x sigma_y)
  double scale_penalty = 0.0;  // v = sigma_x / sigma_y
};

/// All pairwise statistics. Both sequences must be nonconstant.
PairStats pair_stats(SequenceView x, SequenceView y);

}  // namespace cccmap
