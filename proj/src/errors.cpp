#include "cccmap/errors.hpp"

namespace cccmap {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateVariance: return "DegenerateVariance";
    case ErrorKind::Singularity: return "Singularity";
    case ErrorKind::NoConjugate: return "NoConjugate";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace cccmap
