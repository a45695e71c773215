#pragma once

#include <vector>

#include "cccmap/stats.hpp"

namespace cccmap {

/// Gold standard with its mean removed. Construction requires a nonconstant gold.
class CenteredGold {
 public:
  explicit CenteredGold(Sequence gold);

  const Sequence& gold() const noexcept { return gold_; }
  const Sequence& centered() const noexcept { return centered_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return var_; }
  double stddev() const noexcept;
  std::size_t size() const noexcept { return gold_.size(); }

 private:
  Sequence gold_;
  Sequence centered_;
  double mean_ = 0.0;
  double var_ = 0.0;
};

/// rho_c from MSE and covariance: 2 cov / (mse + 2 cov).
/// Singularity when mse + 2 cov == 0.
double ccc_from_mse_cov(double mse, double cov);

/// [var_x + var_y + (mu_x - mu_y)^2] - [mse + 2 cov]; zero up to rounding.
double variance_identity_residual(SequenceView x, SequenceView y);

/// Upsilon(t) = 2t / (1 + t^2).
double upsilon(double t);
/// Upper envelope Psi(x) = Upsilon(1 + x).
double psi_upper(double x);
/// Lower envelope psi(x) = Upsilon(1 - x).
double psi_lower(double x);

struct BoundsResult {
  double x_param = 0.0;  // sqrt(mse / var_g)
  double ccc_max = 1.0;
  double ccc_min = 1.0;
  Sequence err_max;
  Sequence err_min;
};

/// Extremes of rho_c over all predictions with the given MSE, and the error
/// vectors attaining them (errors proportional to the centered gold, with
/// the same or the opposite sign).
BoundsResult bounds_given_mse(const CenteredGold& gold, double mse);

struct EnvelopeRow {
  double x;
  double upper;
  double lower;
};

/// Uniformly spaced (x, Psi(x), psi(x)) rows on [0, x_max]; `steps` >= 2 rows.
std::vector<EnvelopeRow> region_data_mse(double x_max, int steps);

}  // namespace cccmap
