#pragma once

#include <stdexcept>
#include <string>

namespace celint {

/// Base of every error raised by the library. `kind()` is the stable error
/// name reported by the command-line front end.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

  /// Input errors (bad files, bad presentations) as opposed to failures of a
  /// computation on valid input.
  virtual bool is_input_error() const noexcept { return false; }

private:
  std::string kind_;
};

class InputError : public Error {
public:
  using Error::Error;
  bool is_input_error() const noexcept override { return true; }
};

#define CELINT_DEFINE_ERROR(Name, Base)                                        \
  class Name : public Base {                                                   \
  public:                                                                      \
    explicit Name(const std::string& what) : Base(#Name, what) {}              \
  };

// exactnum
CELINT_DEFINE_ERROR(ZeroDenominator, Error)
CELINT_DEFINE_ERROR(DivisionByZero, Error)
CELINT_DEFINE_ERROR(PoleError, Error)
CELINT_DEFINE_ERROR(IndeterminateError, Error)
CELINT_DEFINE_ERROR(ParseError, InputError)

// chow
CELINT_DEFINE_ERROR(PresentationError, InputError)
CELINT_DEFINE_ERROR(RingMismatch, Error)
CELINT_DEFINE_ERROR(NotADivisor, Error)
CELINT_DEFINE_ERROR(UnsupportedCatalog, Error)

// model
CELINT_DEFINE_ERROR(UniverseMismatch, Error)
CELINT_DEFINE_ERROR(NormalCrossingViolation, Error)
CELINT_DEFINE_ERROR(ConfigError, InputError)

// celestial
CELINT_DEFINE_ERROR(UndefinedMultiplicity, Error)
CELINT_DEFINE_ERROR(MissingDecomposition, Error)
CELINT_DEFINE_ERROR(NotLogTerminal, Error)

// verify
CELINT_DEFINE_ERROR(PreconditionViolated, Error)

#undef CELINT_DEFINE_ERROR

} // namespace celint
