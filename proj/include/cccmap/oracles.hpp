#pragma once

#include <cstdint>
#include <functional>

#include "cccmap/permutation.hpp"
#include "cccmap/stats.hpp"

namespace cccmap {

/// Extremes of rho_c found by an exhaustive or sampling oracle.
struct OracleReport {
  std::uint64_t trials = 0;
  double best_value = 0.0;
  double worst_value = 0.0;
  Sequence witness_best;   // error vector in original gold order
  Sequence witness_worst;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kPermutationOracleMaxN = 9;

/// Exact max/min of rho_c over every ordering of the error multiset.
/// TooLarge when N > 9.
OracleReport permutation_oracle(SequenceView gold, const ErrorSet& errors, Convention convention);

/// Random directions (normalized standard normals) scaled onto
/// sum d_i^2 = N mse. `extra` vectors, if given, are rescaled onto the same
/// sphere and included in the report.
OracleReport mse_sphere_oracle(SequenceView gold, double mse, std::uint64_t trials,
                               std::uint64_t seed, const std::vector<Sequence>& extra = {});

/// Random directions rescaled onto the L_k sphere ||d||_k = lk. Not uniform
/// on the sphere for k != 2.
OracleReport lk_sphere_oracle(SequenceView gold, double k, double lk, std::uint64_t trials,
                              std::uint64_t seed);

/// Calls `visit(d)` for each L_k-sphere sample drawn the same way as lk_sphere_oracle.
void for_each_lk_sample(std::size_t n, double k, double lk, std::uint64_t trials,
                        std::uint64_t seed, const std::function<void(const Sequence&)>& visit);

/// Central-difference gradient of f at `at` with step h.
Sequence finite_difference(const std::function<double(SequenceView)>& f, SequenceView at, double h);

}  // namespace cccmap
