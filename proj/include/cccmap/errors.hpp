#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cccmap {

enum class ErrorKind {
  InvalidInput,
  DegenerateVariance,
  Singularity,
  NoConjugate,
  NotConverged,
  TooLarge,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

struct DegenerateVariance : Error {
  explicit DegenerateVariance(const std::string& what)
      : Error(ErrorKind::DegenerateVariance, what) {}
};

struct Singularity : Error {
  explicit Singularity(const std::string& what) : Error(ErrorKind::Singularity, what) {}
};

struct NoConjugate : Error {
  explicit NoConjugate(const std::string& what) : Error(ErrorKind::NoConjugate, what) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(ErrorKind::TooLarge, what) {}
};

/// Raised by iterative solvers; carries the best iterate found so far.
struct NotConverged : Error {
  NotConverged(const std::string& what, std::vector<double> best_iterate, double best_objective)
      : Error(ErrorKind::NotConverged, what),
        best(std::move(best_iterate)),
        objective(best_objective) {}

  std::vector<double> best;
  double objective;
};

}  // namespace cccmap
