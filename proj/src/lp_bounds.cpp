#include "cccmap/lp_bounds.hpp"

#include <cmath>
#include <limits>

#include "cccmap/ccc_mse_map.hpp"
#include "cccmap/errors.hpp"

namespace cccmap {

namespace {

void require_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidInput("k must be positive");
}

void require_n(std::size_t n) {
  if (n == 0) throw InvalidInput("n must be positive");
}

}  // namespace

NormSandwich norm_sandwich(SequenceView e, double r, double p) {
  if (!(r > 0.0) || !(p > 0.0)) throw InvalidInput("norm_sandwich: r and p must be positive");
  if (!(r < p)) throw InvalidInput("norm_sandwich: requires r < p");
  const double lp = lp_norm(e, p);
  const double lr = lp_norm(e, r);
  const double n = static_cast<double>(e.size());
  return {lp, lr, std::pow(n, (p - r) / (p * r)) * lp};
}

double theta_max(double k, std::size_t n) {
  require_k(k);
  require_n(n);
  if (k == 2.0) return 1.0;
  return std::pow(static_cast<double>(n), std::abs(k - 2.0) / (2.0 * k));
}

double lk_normalizer(double k, std::size_t n) {
  require_k(k);
  require_n(n);
  const double nd = static_cast<double>(n);
  return k >= 2.0 ? std::sqrt(nd) : std::pow(nd, 1.0 / k);
}

ThetaRange theta_range(double k, std::size_t n, double lk) {
  if (!(lk >= 0.0)) throw InvalidInput("theta_range: lk must be >= 0");
  ThetaRange r;
  r.k = k;
  r.n = n;
  r.theta_max = theta_max(k, n);
  r.mse_min_sqrt = lk / lk_normalizer(k, n);
  r.mse_max_sqrt = r.theta_max * r.mse_min_sqrt;
  return r;
}

double theta_of(SequenceView e, double k) {
  require_k(k);
  const double lk = lp_norm(e, k);
  if (lk == 0.0) return 1.0;
  const double rmse = lp_norm(e, 2.0) / std::sqrt(static_cast<double>(e.size()));
  return rmse / (lk / lk_normalizer(k, e.size()));
}

double lk_lower_envelope(double x, double tmax) {
  if (x <= 2.0 / tmax) return psi_lower(tmax * x);
  if (x <= 2.0) return -1.0;
  return psi_lower(x);
}

LkEnvelope envelope_given_lk(double k, std::size_t n, double lk, double sigma_g, double theta) {
  if (!(sigma_g > 0.0)) throw DegenerateVariance("envelope_given_lk: sigma_g must be positive");
  if (!(lk >= 0.0)) throw InvalidInput("envelope_given_lk: lk must be >= 0");
  LkEnvelope env;
  env.theta_max = theta_max(k, n);
  if (!(theta >= 1.0 && theta <= env.theta_max * (1.0 + 1e-12))) {
    throw InvalidInput("envelope_given_lk: theta outside [1, theta_max]");
  }
  env.theta = theta;
  env.x = lk / (lk_normalizer(k, n) * sigma_g);
  env.ccc_max_prime = psi_upper(env.x);
  env.ccc_min_prime = lk_lower_envelope(env.x, env.theta_max);
  env.ccc_at_theta = psi_lower(theta * env.x);
  env.theta_0 = env.x > 0.0 ? 2.0 / env.x : std::numeric_limits<double>::infinity();
  return env;
}

double theta_conjugate(double theta1, double x) {
  if (!(theta1 > 0.0) || !(x > 0.0)) throw InvalidInput("theta_conjugate: arguments must be positive");
  const double t = x * theta1;
  if (t <= 1.0) throw NoConjugate("theta_conjugate: x * theta must exceed 1");
  return theta1 / (t - 1.0);
}

LkRegionTable region_data_lk(double k, std::size_t n, double x_max, int steps, int theta_steps) {
  if (theta_steps < 1) throw InvalidInput("region: theta_steps must be >= 1");
  const double tmax = theta_max(k, n);
  LkRegionTable table;
  if (tmax == 1.0 || theta_steps == 1) {
    table.thetas.push_back(1.0);
    if (tmax != 1.0) table.thetas.push_back(tmax);
  } else {
    for (int j = 0; j < theta_steps; ++j) {
      const double frac = static_cast<double>(j) / static_cast<double>(theta_steps - 1);
      table.thetas.push_back(j == theta_steps - 1 ? tmax : std::pow(tmax, frac));
    }
  }
  for (const EnvelopeRow& base : region_data_mse(x_max, steps)) {
    LkRegionTable::Row row{base.x, base.upper, lk_lower_envelope(base.x, tmax), {}};
    row.at_theta.reserve(table.thetas.size());
    for (double th : table.thetas) row.at_theta.push_back(psi_lower(th * base.x));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace cccmap
