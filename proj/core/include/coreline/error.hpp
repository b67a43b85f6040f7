#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coreline {

enum class ErrorCode {
  SingularMatrix,
  IdentityElement,
  DegenerateGeodesic,
  NotOrthogonal,
  SharedEndpoint,
  InvalidRational,
  SchemeViolation,
  ElementaryGroup,
  NotPalindrome,
  IdentityImage,
  OrthogonalityViolation,
  CommutingPair,
  TrivialPalindromization,
  DegenerateAxis,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// batch drivers (the probe, the CLI) can record it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coreline
