#pragma once

namespace cccmap::tol {

// Relative tolerance for pure algebraic identities.
inline constexpr double kAlgebraic = 1e-12;
// Relative tolerance for results of iterative procedures.
inline constexpr double kIterative = 1e-9;

inline constexpr double kAttainment = 1e-10;
inline constexpr double kOracleSlack = 1e-9;

// even-p solver
inline constexpr double kConstraint = 1e-8;
inline constexpr double kStationarity = 1e-8;

// Relative comparison used to declare two closed-form values equal.
inline constexpr double kTie = 1e-12;

}  // namespace cccmap::tol
