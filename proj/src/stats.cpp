#include "cccmap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cccmap/errors.hpp"

namespace cccmap {

void require_valid(SequenceView s, const char* what) {
  if (s.empty()) throw InvalidInput(std::string(what) + " is empty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i])) {
      throw InvalidInput(std::string(what) + " has a non-finite value at index " +
                         std::to_string(i));
    }
  }
}

void require_same_length(SequenceView x, SequenceView y) {
  if (x.size() != y.size()) {
    throw InvalidInput("length mismatch: " + std::to_string(x.size()) + " vs " +
                       std::to_string(y.size()));
  }
}

double mean(SequenceView s) {
  require_valid(s);
  double sum = 0.0;
  for (double v : s) sum += v;
  return sum / static_cast<double>(s.size());
}

double population_variance(SequenceView s) {
  const double mu = mean(s);
  double acc = 0.0;
  for (double v : s) acc += (v - mu) * (v - mu);
  return acc / static_cast<double>(s.size());
}

double population_stddev(SequenceView s) { return std::sqrt(population_variance(s)); }

double covariance(SequenceView x, SequenceView y) {
  require_same_length(x, y);
  const double mx = mean(x);
  const double my = mean(y);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - mx) * (y[i] - my);
  return acc / static_cast<double>(x.size());
}

double pearson(SequenceView x, SequenceView y) {
  require_same_length(x, y);
  const double vx = population_variance(x);
  const double vy = population_variance(y);
  if (vx == 0.0 || vy == 0.0) throw DegenerateVariance("pearson: constant sequence");
  const double r = covariance(x, y) / std::sqrt(vx * vy);
  return std::clamp(r, -1.0, 1.0);
}

double ccc(SequenceView x, SequenceView y) {
  require_same_length(x, y);
  const double vx = population_variance(x);
  const double vy = population_variance(y);
  if (vx == 0.0 && vy == 0.0) throw DegenerateVariance("ccc: both sequences are constant");
  const double gap = mean(x) - mean(y);
  const double cov = covariance(x, y);
  if (cov == 0.0) return 0.0;
  return 2.0 * cov / (vx + vy + gap * gap);
}

double lp_norm(SequenceView e, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidInput("lp_norm: p must be positive");
  require_valid(e, "error vector");
  // Scale by the largest magnitude so large p does not overflow.
  double scale = 0.0;
  for (double v : e) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : e) acc += std::pow(std::abs(v) / scale, p);
  return scale * std::pow(acc, 1.0 / p);
}

double mke(SequenceView x, SequenceView y, double k) {
  require_same_length(x, y);
  require_valid(x);
  require_valid(y);
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidInput("mke: k must be positive");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = std::abs(x[i] - y[i]);
    acc += k == 2.0 ? d * d : (k == 1.0 ? d : std::pow(d, k));
  }
  return acc / static_cast<double>(x.size());
}

double mse(SequenceView x, SequenceView y) { return mke(x, y, 2.0); }
double mae(SequenceView x, SequenceView y) { return mke(x, y, 1.0); }

Sequence difference(SequenceView x, SequenceView y) {
  require_same_length(x, y);
  Sequence out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

PairStats pair_stats(SequenceView x, SequenceView y) {
  PairStats s;
  s.mu_x = mean(x);
  s.mu_y = mean(y);
  s.var_x = population_variance(x);
  s.var_y = population_variance(y);
  s.cov_xy = covariance(x, y);
  s.pearson = pearson(x, y);
  s.ccc = ccc(x, y);
  s.mse = mse(x, y);
  s.mae = mae(x, y);
  const double sx = std::sqrt(s.var_x);
  const double sy = std::sqrt(s.var_y);
  s.scale_penalty = sx / sy;
  s.shift_penalty = (s.mu_x - s.mu_y) / std::sqrt(sx * sy);
  const double gap = s.mu_x - s.mu_y;
  s.c_b = 2.0 * sx * sy / (s.var_x + s.var_y + gap * gap);
  return s;
}

}  // namespace cccmap
