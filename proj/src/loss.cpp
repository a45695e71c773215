#include "cccmap/loss.hpp"

#include <cmath>
#include <string>

#include "cccmap/errors.hpp"

namespace cccmap {

const char* to_string(LossVariant v) noexcept {
  switch (v) {
    case LossVariant::Ratio: return "ratio";
    case LossVariant::RatioPow: return "ratio-pow";
    case LossVariant::GeneralRatio: return "general-ratio";
    case LossVariant::Diff: return "diff";
    case LossVariant::DiffPow: return "diff-pow";
    case LossVariant::GeneralDiff: return "general-diff";
    case LossVariant::AbsMseOverCov: return "abs-mse-over-cov";
  }
  return "ratio";
}

LossVariant parse_loss_variant(std::string_view name) {
  for (auto v : {LossVariant::Ratio, LossVariant::RatioPow, LossVariant::GeneralRatio,
                 LossVariant::Diff, LossVariant::DiffPow, LossVariant::GeneralDiff,
                 LossVariant::AbsMseOverCov}) {
    if (name == to_string(v)) return v;
  }
  throw InvalidInput("unknown loss variant '" + std::string(name) + "'");
}

namespace {

bool is_general(LossVariant v) {
  return v == LossVariant::GeneralRatio || v == LossVariant::GeneralDiff;
}

bool has_abs(LossVariant v) {
  return v != LossVariant::Ratio && v != LossVariant::Diff;
}

// (g p)^(2 beta + 1) and its derivative with respect to p.
double odd_power(double g, double p, int beta) {
  return std::pow(g * p, 2 * beta + 1);
}

double odd_power_slope(double g, double p, int beta) {
  return (2 * beta + 1) * std::pow(g * p, 2 * beta) * g;
}

// Value and gradient of the quantity inside |.|^gamma.
struct Inner {
  double value = 0.0;
  Sequence grad;
};

Inner inner(const LossParams& prm, SequenceView g, SequenceView p) {
  const std::size_t n = g.size();
  Inner out;
  out.grad.assign(n, 0.0);

  double err = 0.0;  // (weighted) sum of squared errors
  double rew = 0.0;  // reward term
  Sequence err_grad(n), rew_grad(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double eps = is_general(prm.variant) ? prm.per_sample_eps[j] : 1.0;
    err += eps * (g[j] - p[j]) * (g[j] - p[j]);
    err_grad[j] = 2.0 * eps * (p[j] - g[j]);
    switch (prm.variant) {
      case LossVariant::Ratio:
      case LossVariant::RatioPow:
      case LossVariant::Diff:
        rew += g[j] * p[j];
        rew_grad[j] = g[j];
        break;
      case LossVariant::DiffPow:
        rew += odd_power(g[j], p[j], prm.beta);
        rew_grad[j] = odd_power_slope(g[j], p[j], prm.beta);
        break;
      case LossVariant::GeneralRatio:
      case LossVariant::GeneralDiff:
        rew += prm.per_sample_alpha[j] * odd_power(g[j], p[j], prm.per_sample_beta[j]);
        rew_grad[j] = prm.per_sample_alpha[j] * odd_power_slope(g[j], p[j], prm.per_sample_beta[j]);
        break;
      case LossVariant::AbsMseOverCov:
        break;
    }
  }

  switch (prm.variant) {
    case LossVariant::Ratio:
    case LossVariant::RatioPow:
    case LossVariant::GeneralRatio: {
      if (rew == 0.0) throw Singularity("loss: ratio denominator is zero");
      out.value = err / rew;
      for (std::size_t j = 0; j < n; ++j) {
        out.grad[j] = (err_grad[j] * rew - err * rew_grad[j]) / (rew * rew);
      }
      break;
    }
    case LossVariant::Diff:
    case LossVariant::DiffPow: {
      out.value = err - prm.alpha * rew;
      for (std::size_t j = 0; j < n; ++j) out.grad[j] = err_grad[j] - prm.alpha * rew_grad[j];
      break;
    }
    case LossVariant::GeneralDiff: {
      out.value = err - rew;
      for (std::size_t j = 0; j < n; ++j) out.grad[j] = err_grad[j] - rew_grad[j];
      break;
    }
    case LossVariant::AbsMseOverCov: {
      const double nd = static_cast<double>(n);
      const double m = err / nd;
      const double cov = covariance(p, g);
      if (cov == 0.0) throw Singularity("loss: sigma_XY is zero");
      const double mu_g = mean(g);
      out.value = m / cov;
      for (std::size_t j = 0; j < n; ++j) {
        const double dm = err_grad[j] / nd;
        const double dcov = (g[j] - mu_g) / nd;
        out.grad[j] = (dm * cov - m * dcov) / (cov * cov);
      }
      break;
    }
  }
  return out;
}

}  // namespace

void validate(const LossParams& prm, std::size_t n) {
  if (!(prm.gamma > 0.0) || !std::isfinite(prm.gamma)) throw InvalidInput("loss: gamma must be > 0");
  if (!(prm.alpha >= 0.0) || !std::isfinite(prm.alpha)) throw InvalidInput("loss: alpha must be >= 0");
  if (prm.beta < 0) throw InvalidInput("loss: beta must be a nonnegative integer");
  if (is_general(prm.variant)) {
    if (prm.per_sample_alpha.size() != n || prm.per_sample_eps.size() != n ||
        prm.per_sample_beta.size() != n) {
      throw InvalidInput("loss: per-sample coefficient vectors must have length " +
                         std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(prm.per_sample_alpha[j] > 0.0) || !(prm.per_sample_eps[j] > 0.0) ||
          prm.per_sample_beta[j] < 0) {
        throw InvalidInput("loss: per-sample alpha and eps must be > 0, beta >= 0");
      }
    }
  }
}

double loss(const LossParams& prm, SequenceView gold, SequenceView pred) {
  require_same_length(gold, pred);
  require_valid(gold, "gold standard");
  require_valid(pred, "prediction");
  validate(prm, gold.size());
  const double v = inner(prm, gold, pred).value;
  if (!has_abs(prm.variant)) return v;
  return std::pow(std::abs(v), prm.gamma);
}

Sequence loss_gradient(const LossParams& prm, SequenceView gold, SequenceView pred) {
  require_same_length(gold, pred);
  require_valid(gold, "gold standard");
  require_valid(pred, "prediction");
  validate(prm, gold.size());
  Inner in = inner(prm, gold, pred);
  if (!has_abs(prm.variant)) return std::move(in.grad);
  if (in.value == 0.0) return Sequence(gold.size(), 0.0);
  const double outer = prm.gamma * std::pow(std::abs(in.value), prm.gamma - 1.0) *
                       (in.value > 0.0 ? 1.0 : -1.0);
  for (double& v : in.grad) v *= outer;
  return std::move(in.grad);
}

Trace training_trace(const LossParams& prm, SequenceView gold, SequenceView init_pred,
                     double step, int iters) {
  if (!(step > 0.0)) throw InvalidInput("training_trace: step must be positive");
  if (iters < 1) throw InvalidInput("training_trace: iters must be positive");
  Trace t;
  Sequence p(init_pred.begin(), init_pred.end());
  double cur = loss(prm, gold, p);
  t.rows.push_back({0, cur, mse(gold, p), ccc(gold, p), step});

  for (int it = 1; it <= iters; ++it) {
    Sequence grad;
    try {
      grad = loss_gradient(prm, gold, p);
    } catch (const Singularity&) {
      t.diverged = true;
      break;
    }
    double eta = step;
    Sequence trial(p.size());
    double next = cur;
    bool moved = false;
    for (int halvings = 0; halvings < 60; ++halvings, eta *= 0.5) {
      for (std::size_t i = 0; i < p.size(); ++i) trial[i] = p[i] - eta * grad[i];
      try {
        next = loss(prm, gold, trial);
      } catch (const Singularity&) {
        continue;
      }
      if (!std::isfinite(next)) continue;
      if (next <= cur) {
        moved = true;
        break;
      }
    }
    if (moved) {
      p = trial;
      cur = next;
    }
    t.rows.push_back({it, cur, mse(gold, p), ccc(gold, p), moved ? eta : 0.0});
    if (!std::isfinite(cur)) {
      t.diverged = true;
      break;
    }
  }
  t.final_pred = std::move(p);
  return t;
}

}  // namespace cccmap
