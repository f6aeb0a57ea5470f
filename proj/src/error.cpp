#include "omegamod/error.hpp"

namespace omegamod {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid-argument";
    case ErrorKind::kInconsistentTransform:
      return "inconsistent-transform";
    case ErrorKind::kRangeError:
      return "range-error";
    case ErrorKind::kOutOfDomain:
      return "out-of-domain";
    case ErrorKind::kInsufficientData:
      return "insufficient-data";
    case ErrorKind::kUnsupported:
      return "unsupported";
  }
  return "unknown";
}

}  // namespace omegamod
