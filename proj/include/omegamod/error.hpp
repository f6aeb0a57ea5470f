#pragma once

#include <stdexcept>
#include <string>

namespace omegamod {

enum class ErrorKind {
  kInvalidArgument,
  kInconsistentTransform,
  kRangeError,
  kOutOfDomain,
  kInsufficientData,
  kUnsupported,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kInvalidArgument, what);
}

}  // namespace omegamod
