#include "cccmap/ccc_mse_map.hpp"

#include <cmath>

#include "cccmap/errors.hpp"

namespace cccmap {

CenteredGold::CenteredGold(Sequence gold) : gold_(std::move(gold)) {
  require_valid(gold_, "gold standard");
  mean_ = cccmap::mean(gold_);
  centered_.resize(gold_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < gold_.size(); ++i) {
    centered_[i] = gold_[i] - mean_;
    acc += centered_[i] * centered_[i];
  }
  var_ = acc / static_cast<double>(gold_.size());
  if (var_ == 0.0) throw DegenerateVariance("gold standard is constant");
}

double CenteredGold::stddev() const noexcept { return std::sqrt(var_); }

double ccc_from_mse_cov(double mse, double cov) {
  const double denom = mse + 2.0 * cov;
  if (denom == 0.0) throw Singularity("ccc_from_mse_cov: mse + 2 cov = 0");
  if (cov == 0.0) return 0.0;
  return 2.0 * cov / denom;
}

double variance_identity_residual(SequenceView x, SequenceView y) {
  const double gap = mean(x) - mean(y);
  const double lhs = population_variance(x) + population_variance(y) + gap * gap;
  const double rhs = mse(x, y) + 2.0 * covariance(x, y);
  return lhs - rhs;
}

double upsilon(double t) { return 2.0 * t / (1.0 + t * t); }
double psi_upper(double x) { return upsilon(1.0 + x); }
double psi_lower(double x) { return upsilon(1.0 - x); }

BoundsResult bounds_given_mse(const CenteredGold& gold, double mse) {
  if (!(mse >= 0.0) || !std::isfinite(mse)) throw InvalidInput("bounds_given_mse: mse must be >= 0");
  BoundsResult r;
  r.x_param = std::sqrt(mse / gold.variance());
  r.ccc_max = psi_upper(r.x_param);
  r.ccc_min = psi_lower(r.x_param);
  const auto& yz = gold.centered();
  r.err_max.resize(yz.size());
  r.err_min.resize(yz.size());
  for (std::size_t i = 0; i < yz.size(); ++i) {
    r.err_max[i] = r.x_param * yz[i];
    r.err_min[i] = -r.x_param * yz[i];
  }
  return r;
}

std::vector<EnvelopeRow> region_data_mse(double x_max, int steps) {
  if (steps < 2) throw InvalidInput("region: steps must be >= 2");
  if (!(x_max >= 0.0) || !std::isfinite(x_max)) throw InvalidInput("region: x_max must be >= 0");
  std::vector<EnvelopeRow> rows;
  if (x_max == 0.0) {
    rows.push_back({0.0, psi_upper(0.0), psi_lower(0.0)});
    return rows;
  }
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    rows.push_back({x, psi_upper(x), psi_lower(x)});
  }
  return rows;
}

}  // namespace cccmap
