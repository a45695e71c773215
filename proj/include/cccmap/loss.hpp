#pragma once

#include <string_view>
#include <vector>

#include "cccmap/stats.hpp"

namespace cccmap {

enum class LossVariant {
  Ratio,          // sum (g - p)^2 / sum g p
  RatioPow,       // |Ratio|^gamma
  GeneralRatio,   // |sum eps_j (g - p)^2 / sum alpha_j (g p)^(2 beta_j + 1)|^gamma
  Diff,           // sum (g - p)^2 - alpha sum g p
  DiffPow,        // |sum (g - p)^2 - alpha sum (g p)^(2 beta + 1)|^gamma
  GeneralDiff,    // |sum eps_j (g - p)^2 - sum alpha_j (g p)^(2 beta_j + 1)|^gamma
  AbsMseOverCov,  // |MSE / sigma_XY|^gamma
};

const char* to_string(LossVariant v) noexcept;
/// Parses the lowercase kebab-case names ("ratio", "ratio-pow", ..., "abs-mse-over-cov").
LossVariant parse_loss_variant(std::string_view name);

struct LossParams {
  LossVariant variant = LossVariant::Ratio;
  double gamma = 1.0;
  double alpha = 1.0;  // Diff variants; 0 turns Diff into the plain sum of squared errors
  int beta = 0;
  std::vector<double> per_sample_alpha;
  std::vector<double> per_sample_eps;
  std::vector<int> per_sample_beta;
};

/// Throws InvalidInput if coefficients violate their sign constraints or the
/// per-sample vectors of the general variants do not have length n.
void validate(const LossParams& params, std::size_t n);

/// Singularity when the ratio denominator (sum g p, the weighted power sum,
/// or sigma_XY) is zero.
double loss(const LossParams& params, SequenceView gold, SequenceView pred);

/// d loss / d pred. Where |.|^gamma has a zero argument the subgradient 0 is returned.
Sequence loss_gradient(const LossParams& params, SequenceView gold, SequenceView pred);

struct TraceRow {
  int iter;
  double loss;
  double mse;
  double ccc;
  double step;
};

struct Trace {
  std::vector<TraceRow> rows;  // rows[0] is the starting point
  Sequence final_pred;
  bool diverged = false;
};

/// Gradient descent with a fixed step that is halved whenever it would
/// increase the loss. Stops early, flagging divergence, on a non-finite or
/// singular loss.
Trace training_trace(const LossParams& params, SequenceView gold, SequenceView init_pred,
                     double step, int iters);

}  // namespace cccmap
