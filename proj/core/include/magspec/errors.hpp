#pragma once

#include <stdexcept>
#include <string>

namespace magspec {

/// Coarse classification used by the command-line front-end to pick an exit
/// status: configuration problems, violated mathematical hypotheses, and
/// numerical failures.
enum class ErrorKind { Config, Hypothesis, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define MAGSPEC_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  }

// Argument outside an operation's domain.
MAGSPEC_DEFINE_ERROR(DomainError, Config);
MAGSPEC_DEFINE_ERROR(ParseError, Config);
MAGSPEC_DEFINE_ERROR(NonPositiveRadius, Config);

MAGSPEC_DEFINE_ERROR(HypothesisViolated, Hypothesis);
MAGSPEC_DEFINE_ERROR(NoRootBelowLandau, Hypothesis);
MAGSPEC_DEFINE_ERROR(ConvexityWindowExceeded, Hypothesis);

MAGSPEC_DEFINE_ERROR(QuadratureFailure, Numerical);
MAGSPEC_DEFINE_ERROR(PrecisionLoss, Numerical);
MAGSPEC_DEFINE_ERROR(BracketAmbiguous, Numerical);
MAGSPEC_DEFINE_ERROR(NoCrossingInRange, Numerical);
MAGSPEC_DEFINE_ERROR(IndefiniteAssembly, Numerical);
MAGSPEC_DEFINE_ERROR(BisectionStall, Numerical);

#undef MAGSPEC_DEFINE_ERROR

/// Temple's inequality is either inapplicable (beta <= eta, a hypothesis
/// failure) or numerically inconsistent (negative variance).
class TempleInvalid : public Error {
 public:
  TempleInvalid(ErrorKind kind, const std::string& what) : Error(kind, what) {}
};

}  // namespace magspec
