#pragma once

#include <vector>

#include "cccmap/stats.hpp"

namespace cccmap {

struct NormSandwich {
  double lo;   // L_p
  double mid;  // L_r
  double hi;   // N^((p - r) / (p r)) L_p
};

/// Holder sandwich L_p <= L_r <= N^((p-r)/(pr)) L_p for 0 < r < p.
NormSandwich norm_sandwich(SequenceView e, double r, double p);

/// N^(|k - 2| / (2k)); exactly 1 at k = 2.
double theta_max(double k, std::size_t n);

/// Denominator mapping L_k onto the envelope abscissa:
/// sqrt(N) for k >= 2, N^(1/k) for k < 2.
double lk_normalizer(double k, std::size_t n);

/// Feasible band of sqrt(MSE) at a fixed L_k norm.
struct ThetaRange {
  double k = 2.0;
  std::size_t n = 1;
  double theta_min = 1.0;
  double theta_max = 1.0;
  double mse_min_sqrt = 0.0;
  double mse_max_sqrt = 0.0;
};

ThetaRange theta_range(double k, std::size_t n, double lk);

/// Where sqrt(MSE) of an error vector sits in its band: sqrt(MSE) / sqrt(MSE_min).
/// Zero vectors report theta = 1.
double theta_of(SequenceView e, double k);

struct LkEnvelope {
  double x = 0.0;              // L_k / (normalizer * sigma_g)
  double theta = 1.0;
  double theta_max = 1.0;
  double ccc_max_prime = 1.0;  // Psi(x)
  double ccc_min_prime = 1.0;  // piecewise lower envelope over all theta
  double ccc_at_theta = 1.0;   // psi(theta x)
  double theta_0 = 0.0;        // 2 / x, +inf at x = 0
};

/// Lower envelope over theta in [1, theta_max]:
/// psi(theta_max x) for x <= 2/theta_max, -1 up to x = 2, psi(x) beyond.
double lk_lower_envelope(double x, double theta_max);

LkEnvelope envelope_given_lk(double k, std::size_t n, double lk, double sigma_g, double theta);

/// theta_2 = theta_1 / (x theta_1 - 1), the partner with psi(theta_1 x) = psi(theta_2 x).
/// NoConjugate when x theta_1 <= 1.
double theta_conjugate(double theta1, double x);

struct LkRegionTable {
  std::vector<double> thetas;  // geometric grid, thetas.front() == 1, thetas.back() == theta_max
  struct Row {
    double x;
    double upper;
    double lower;                    // piecewise envelope
    std::vector<double> at_theta;    // psi(theta_j x)
  };
  std::vector<Row> rows;
};

/// Envelope family on x in [0, x_max]. `theta_steps` >= 1 grid points in theta.
LkRegionTable region_data_lk(double k, std::size_t n, double x_max, int steps, int theta_steps);

}  // namespace cccmap
