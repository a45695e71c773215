#pragma once

#include <cstdint>

#include "cccmap/ccc_mse_map.hpp"
#include "cccmap/permutation.hpp"

namespace cccmap {

/// Extremize rho_c (equivalently sigma_XY / MSE) of P = G + D over error
/// vectors D with sum d_i^k = lk^k, k even.
struct StationarityProblem {
  CenteredGold gold;
  int k = 2;
  double lk = 1.0;
  Objective objective = Objective::Max;
};

struct SolverState {
  Sequence d;
  double lambda = 0.0;           // multiplier of the L_k constraint
  double sigma_gd = 0.0;         // covariance of gold and errors
  double objective_value = 0.0;  // sigma_XY / MSE
  double ccc = 0.0;
  double residual_norm = 0.0;    // max |stationarity residual| / residual scale
  int restart = 0;               // index of the winning restart
  int iterations = 0;            // iterations spent by the winning restart
};

struct SolverOptions {
  int restarts = 16;
  int max_iters = 20000;
};

/// Throws InvalidInput unless k is even and >= 2 and lk > 0.
void validate(const StationarityProblem& prob);

/// sigma_XY / MSE for P = G + d.
double even_p_objective(const CenteredGold& gold, SequenceView d);

/// Per-coordinate residual of the stationarity condition
///   2 var_g (d_i^k / MkE - d_i^2 / MSE) + sigma_gd (d_i^k / MkE - 2 d_i^2 / MSE) + y_i d_i.
/// Vanishes at constrained stationary points. InvalidInput for d == 0.
Sequence stationarity_residual(const StationarityProblem& prob, SequenceView d);

/// Scale used to normalize the stationarity residual: max(1, largest term magnitude).
double stationarity_scale(const StationarityProblem& prob, SequenceView d);

/// Multi-start projected gradient ascent (Max) or descent (Min) on the L_k
/// sphere, followed by a Newton polish of the Lagrange system.
/// Throws NotConverged (carrying the best iterate) if no restart converges.
SolverState solve(const StationarityProblem& prob, std::uint64_t seed,
                  const SolverOptions& options = {});

struct Quadratic {
  double a;
  double b;
  double c;
  double operator()(double y) const { return (a * y + b) * y + c; }
};

/// Stationarity condition for coordinate i, rearranged as a monic quadratic in
/// the centered gold value y_i with the other y_j held fixed.
/// Singularity when d_i^(k-1) MSE == d_i MkE (always the case at k = 2).
Quadratic quadratic_in_gold(const StationarityProblem& prob, SequenceView d, std::size_t i);

}  // namespace cccmap
