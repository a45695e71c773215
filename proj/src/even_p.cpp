#include "cccmap/even_p.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "cccmap/errors.hpp"
#include "cccmap/tolerances.hpp"

namespace cccmap {

namespace {

double ipow(double v, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= v;
  return r;
}

double power_sum(SequenceView d, int k) {
  double s = 0.0;
  for (double v : d) s += ipow(v, k);
  return s;
}

double lk_of(SequenceView d, int k) { return lp_norm(d, static_cast<double>(k)); }

void project_to_sphere(Sequence& d, int k, double lk) {
  const double cur = lk_of(d, k);
  const double f = lk / cur;
  for (double& v : d) v *= f;
}

struct Eval {
  double objective;
  Sequence grad;  // gradient of sigma_XY / MSE
};

Eval evaluate(const CenteredGold& gold, SequenceView d) {
  const auto& y = gold.centered();
  double yy = 0.0, yd = 0.0, dd = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    yy += y[i] * y[i];
    yd += y[i] * d[i];
    dd += d[i] * d[i];
  }
  Eval e;
  e.objective = (yy + yd) / dd;
  e.grad.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) e.grad[i] = (y[i] - 2.0 * e.objective * d[i]) / dd;
  return e;
}

// Tangential part of the gradient and the multiplier estimate.
double tangent(const Sequence& grad, SequenceView d, int k, Sequence& out) {
  Sequence normal(d.size());
  double gn = 0.0, nn = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    normal[i] = k * ipow(d[i], k - 1);
    gn += grad[i] * normal[i];
    nn += normal[i] * normal[i];
  }
  const double lambda = gn / nn;
  out.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = grad[i] - lambda * normal[i];
  return lambda;
}

double max_abs(SequenceView v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double relative_residual(const StationarityProblem& prob, SequenceView d) {
  return max_abs(stationarity_residual(prob, d)) / stationarity_scale(prob, d);
}

// Newton iteration on grad f - lambda grad h = 0, h = 0. Accepts a step only if
// it reduces the stationarity residual without giving up objective.
void newton_polish(const StationarityProblem& prob, Sequence& d, double& lambda) {
  const auto n = static_cast<Eigen::Index>(d.size());
  const int k = prob.k;
  const double target = ipow(prob.lk, k);
  const double sign = prob.objective == Objective::Max ? 1.0 : -1.0;
  for (int iter = 0; iter < 50; ++iter) {
    const double res = relative_residual(prob, d);
    if (res <= 1e-3 * tol::kStationarity) return;
    const Eval e = evaluate(prob.gold, d);
    double dd = 0.0;
    for (double v : d) dd += v * v;

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd rhs(n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        double h = (-2.0 * d[ui] * e.grad[uj] - 2.0 * d[uj] * e.grad[ui]) / dd;
        if (i == j) h += -2.0 * e.objective / dd - lambda * k * (k - 1) * ipow(d[ui], k - 2);
        jac(i, j) = h;
      }
      const double dh = k * ipow(d[ui], k - 1);
      jac(i, n) = -dh;
      jac(n, i) = dh;
      rhs(i) = -(e.grad[ui] - lambda * dh);
    }
    rhs(n) = -(power_sum(d, k) - target);
    const Eigen::VectorXd step = jac.fullPivLu().solve(rhs);
    if (!step.allFinite()) return;

    Sequence trial(d);
    for (Eigen::Index i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] += step(i);
    project_to_sphere(trial, k, prob.lk);
    const double trial_obj = even_p_objective(prob.gold, trial);
    const double cur_obj = e.objective;
    const double slack = 1e-12 * std::max(1.0, std::abs(cur_obj));
    if (sign * (trial_obj - cur_obj) < -slack) return;
    if (relative_residual(prob, trial) >= res) return;
    d = std::move(trial);
    lambda += step(n);
  }
}

struct RestartOutcome {
  Sequence d;
  double objective = 0.0;
  double lambda = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

RestartOutcome run_restart(const StationarityProblem& prob, Sequence d, int max_iters) {
  const int k = prob.k;
  const double sign = prob.objective == Objective::Max ? 1.0 : -1.0;
  project_to_sphere(d, k, prob.lk);
  Eval cur = evaluate(prob.gold, d);
  Sequence tan;
  double lambda = tangent(cur.grad, d, k, tan);

  double step = 1.0;
  {
    const double tn = max_abs(tan);
    if (tn > 0.0) step = 0.1 * max_abs(d) / tn;
  }
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    if (relative_residual(prob, d) <= 1e-3 * tol::kStationarity) break;
    Sequence trial(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) trial[i] = d[i] + sign * step * tan[i];
    project_to_sphere(trial, k, prob.lk);
    Eval next = evaluate(prob.gold, trial);
    if (sign * (next.objective - cur.objective) > 0.0) {
      d = std::move(trial);
      cur = std::move(next);
      lambda = tangent(cur.grad, d, k, tan);
      step *= 1.5;
    } else {
      step *= 0.5;
      if (step < 1e-300) break;
      // No further progress at machine precision.
      if (step * max_abs(tan) < 1e-17 * max_abs(d)) break;
    }
  }
  newton_polish(prob, d, lambda);
  RestartOutcome out;
  out.objective = even_p_objective(prob.gold, d);
  out.lambda = lambda;
  out.residual = relative_residual(prob, d);
  out.iterations = iter;
  out.d = std::move(d);
  return out;
}

}  // namespace

void validate(const StationarityProblem& prob) {
  if (prob.k < 2 || prob.k % 2 != 0) throw InvalidInput("even-p solver: k must be an even integer >= 2");
  if (!(prob.lk > 0.0) || !std::isfinite(prob.lk)) throw InvalidInput("even-p solver: lk must be positive");
}

double even_p_objective(const CenteredGold& gold, SequenceView d) {
  require_same_length(gold.centered(), d);
  return evaluate(gold, d).objective;
}

Sequence stationarity_residual(const StationarityProblem& prob, SequenceView d) {
  validate(prob);
  const auto& y = prob.gold.centered();
  require_same_length(y, d);
  const double n = static_cast<double>(d.size());
  double dd = 0.0, yd = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    dd += d[i] * d[i];
    yd += y[i] * d[i];
  }
  if (dd == 0.0) throw InvalidInput("stationarity_residual: zero error vector");
  const double mse = dd / n;
  const double mke = power_sum(d, prob.k) / n;
  const double sigma_gd = yd / n;
  const double var_g = prob.gold.variance();
  Sequence r(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double pk = ipow(d[i], prob.k) / mke;
    const double p2 = d[i] * d[i] / mse;
    r[i] = 2.0 * var_g * (pk - p2) + sigma_gd * (pk - 2.0 * p2) + y[i] * d[i];
  }
  return r;
}

double stationarity_scale(const StationarityProblem& prob, SequenceView d) {
  const auto& y = prob.gold.centered();
  const double n = static_cast<double>(d.size());
  double dd = 0.0, yd = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    dd += d[i] * d[i];
    yd += y[i] * d[i];
  }
  const double mse = dd / n;
  const double mke = power_sum(d, prob.k) / n;
  const double sigma_gd = yd / n;
  double scale = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double pk = ipow(d[i], prob.k) / mke;
    const double p2 = d[i] * d[i] / mse;
    scale = std::max({scale, std::abs(2.0 * prob.gold.variance() * pk),
                      std::abs(2.0 * prob.gold.variance() * p2), std::abs(sigma_gd * pk),
                      std::abs(2.0 * sigma_gd * p2), std::abs(y[i] * d[i])});
  }
  return scale;
}

SolverState solve(const StationarityProblem& prob, std::uint64_t seed, const SolverOptions& options) {
  validate(prob);
  if (options.restarts < 1) throw InvalidInput("even-p solver: restarts must be >= 1");
  if (options.max_iters < 1) throw InvalidInput("even-p solver: max_iters must be >= 1");
  const auto& y = prob.gold.centered();
  const double sign = prob.objective == Objective::Max ? 1.0 : -1.0;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  bool have_best = false;
  RestartOutcome best;
  int best_index = 0;
  for (int r = 0; r < options.restarts; ++r) {
    Sequence start(y.size());
    if (r == 0) {
      // The closed-form optimum at k = 2.
      for (std::size_t i = 0; i < y.size(); ++i) start[i] = sign * y[i];
    } else {
      for (double& v : start) v = normal(rng);
    }
    if (max_abs(start) == 0.0) start[0] = 1.0;
    RestartOutcome out = run_restart(prob, std::move(start), options.max_iters);
    if (!have_best || sign * (out.objective - best.objective) > 0.0) {
      best = std::move(out);
      best_index = r;
      have_best = true;
    }
  }

  if (!(best.residual <= tol::kStationarity)) {
    throw NotConverged("even-p solver did not reach the stationarity tolerance", best.d,
                       best.objective);
  }

  SolverState s;
  s.d = best.d;
  s.lambda = best.lambda;
  s.objective_value = best.objective;
  double yd = 0.0, dd = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    yd += y[i] * s.d[i];
    dd += s.d[i] * s.d[i];
  }
  const double n = static_cast<double>(y.size());
  s.sigma_gd = yd / n;
  s.ccc = ccc_from_mse_cov(dd / n, prob.gold.variance() + s.sigma_gd);
  s.residual_norm = best.residual;
  s.restart = best_index;
  s.iterations = best.iterations;
  return s;
}

Quadratic quadratic_in_gold(const StationarityProblem& prob, SequenceView d, std::size_t i) {
  validate(prob);
  const auto& y = prob.gold.centered();
  require_same_length(y, d);
  if (i >= d.size()) throw InvalidInput("quadratic_in_gold: index out of range");
  const double n = static_cast<double>(d.size());
  double dd = 0.0;
  for (double v : d) dd += v * v;
  if (dd == 0.0) throw InvalidInput("quadratic_in_gold: zero error vector");
  const double mse = dd / n;
  const double mke = power_sum(d, prob.k) / n;
  const double lead = ipow(d[i], prob.k - 1) * mse;
  const double a_term = lead - d[i] * mke;
  const double b_term = lead - 2.0 * d[i] * mke;
  if (std::abs(a_term) <= 1e-14 * (std::abs(lead) + std::abs(d[i] * mke))) {
    throw Singularity("quadratic_in_gold: d_i^(k-1) MSE equals d_i MkE");
  }
  Quadratic q;
  q.a = 1.0;
  q.b = (d[i] * b_term + n * mse * mke) / (2.0 * a_term);
  q.c = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == i) continue;
    q.c += y[j] * (y[j] + d[j] * b_term / (2.0 * a_term));
  }
  return q;
}

}  // namespace cccmap
