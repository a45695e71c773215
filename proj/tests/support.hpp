#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testing {

using Vec = std::vector<double>;

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Vec uniform_vec(std::size_t n, double lo, double hi) {
    Vec v(n);
    for (double& x : v) x = uniform(lo, hi);
    return v;
  }

  Vec normal_vec(std::size_t n) {
    Vec v(n);
    for (double& x : v) x = normal();
    return v;
  }

  std::mt19937_64 rng;
};

// Reference statistics, written independently of the library.
inline double ref_mean(const Vec& v) {
  long double s = 0;
  for (double x : v) s += x;
  return static_cast<double>(s / v.size());
}

inline double ref_cov(const Vec& x, const Vec& y) {
  const long double mx = ref_mean(x), my = ref_mean(y);
  long double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
  return static_cast<double>(s / x.size());
}

inline double ref_ccc(const Vec& x, const Vec& y) {
  const double gap = ref_mean(x) - ref_mean(y);
  return 2.0 * ref_cov(x, y) / (ref_cov(x, x) + ref_cov(y, y) + gap * gap);
}

inline Vec add(const Vec& a, const Vec& b, double sign = 1.0) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
  return out;
}

}  // namespace testing
