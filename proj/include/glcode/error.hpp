#pragma once

#include <stdexcept>
#include <string>

namespace glcode {

/// Base of every error the library reports for bad input or infeasible work.
/// Internal consistency failures (a verification step that should never fail)
/// are reported as std::logic_error instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define GLCODE_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}      \
  }

GLCODE_DEFINE_ERROR(NotAPrimePower);
GLCODE_DEFINE_ERROR(ReduciblePolynomial);
GLCODE_DEFINE_ERROR(DivisionByZero);
GLCODE_DEFINE_ERROR(MixedFields);
GLCODE_DEFINE_ERROR(DimensionMismatch);
GLCODE_DEFINE_ERROR(NegativeArgument);
GLCODE_DEFINE_ERROR(OutOfRange);
GLCODE_DEFINE_ERROR(ZeroNormal);
GLCODE_DEFINE_ERROR(Singular);
GLCODE_DEFINE_ERROR(Infeasible);
GLCODE_DEFINE_ERROR(ParseError);

#undef GLCODE_DEFINE_ERROR

}  // namespace glcode
