#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define YBE_DEFINE_ERROR(Name)                                 \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

YBE_DEFINE_ERROR(DivisionByZero);
YBE_DEFINE_ERROR(SubstitutionPole);
YBE_DEFINE_ERROR(EvalPole);
YBE_DEFINE_ERROR(PoleAtExpansionPoint);
YBE_DEFINE_ERROR(OrderMismatch);
YBE_DEFINE_ERROR(ParseError);
YBE_DEFINE_ERROR(InexactDivision);
YBE_DEFINE_ERROR(DimensionMismatch);
YBE_DEFINE_ERROR(DuplicateLeg);
YBE_DEFINE_ERROR(NotInSpan);
YBE_DEFINE_ERROR(SingularGram);
YBE_DEFINE_ERROR(SplittingViolation);
YBE_DEFINE_ERROR(NoProportionality);
YBE_DEFINE_ERROR(ParamOutOfRange);
YBE_DEFINE_ERROR(Mismatch);
YBE_DEFINE_ERROR(NoSolution);
YBE_DEFINE_ERROR(IdentityFail);
YBE_DEFINE_ERROR(NotProportional);
YBE_DEFINE_ERROR(UsageError);

#undef YBE_DEFINE_ERROR

}  // namespace ybe
