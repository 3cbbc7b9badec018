#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropmirror {

enum class ErrorCode {
  MalformedInput,
  MalformedFan,
  NotConvex,
  Unbounded,
  EmptyPolytope,
  LowerDimensional,
  DegenerateSupport,
  NotTriangulation,
  InvalidEps,
  EmptyWindow,
  DegenerateTriple,
  CriticalPoint,
  NotOnZeroLocus,
  AssociativityViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// All domain failures raised by the library carry one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropmirror
