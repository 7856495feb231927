#pragma once

#include <stdexcept>
#include <string>

namespace holotrace {

// Base for every failure raised by the library. `kind()` is a stable tag
// used by the CLI to pick an exit code and by tests to match errors.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation hit a numerical wall (quadrature, precision, singular factor).
class NumericalError : public Error {
 public:
  using Error::Error;
};

#define HOLOTRACE_DOMAIN_ERROR(Name)                                       \
  struct Name : DomainError {                                              \
    explicit Name(const std::string& w) : DomainError(#Name, w) {}         \
  }
#define HOLOTRACE_NUMERICAL_ERROR(Name)                                    \
  struct Name : NumericalError {                                           \
    explicit Name(const std::string& w) : NumericalError(#Name, w) {}      \
  }

HOLOTRACE_DOMAIN_ERROR(BranchCut);
HOLOTRACE_DOMAIN_ERROR(DegenerateArgument);
HOLOTRACE_DOMAIN_ERROR(OutOfStrip);
HOLOTRACE_DOMAIN_ERROR(PoleHit);
HOLOTRACE_DOMAIN_ERROR(InvalidParams);
HOLOTRACE_DOMAIN_ERROR(SingularA);
HOLOTRACE_DOMAIN_ERROR(DegenerateQuadratic);
HOLOTRACE_DOMAIN_ERROR(RootSelectionAmbiguous);
HOLOTRACE_DOMAIN_ERROR(PunctureMismatch);
HOLOTRACE_DOMAIN_ERROR(OutOfRange);
HOLOTRACE_DOMAIN_ERROR(Degenerate);
HOLOTRACE_DOMAIN_ERROR(SingularAlpha);
HOLOTRACE_DOMAIN_ERROR(SingularPrefactor);

HOLOTRACE_NUMERICAL_ERROR(QuadratureFailure);
HOLOTRACE_NUMERICAL_ERROR(FactorNearZero);
HOLOTRACE_NUMERICAL_ERROR(NonIntegerResidual);
HOLOTRACE_NUMERICAL_ERROR(PrecisionFailure);

#undef HOLOTRACE_DOMAIN_ERROR
#undef HOLOTRACE_NUMERICAL_ERROR

}  // namespace holotrace
