#pragma once

#include <stdexcept>
#include <string>

namespace closure {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CLOSURE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

// coefficient arithmetic
CLOSURE_DEFINE_ERROR(FieldMismatch);
CLOSURE_DEFINE_ERROR(DivisionByZero);
CLOSURE_DEFINE_ERROR(NonPrimeModulus);

// polynomial rings
CLOSURE_DEFINE_ERROR(RingMismatch);
CLOSURE_DEFINE_ERROR(LengthMismatch);
CLOSURE_DEFINE_ERROR(UnknownVariable);
CLOSURE_DEFINE_ERROR(ZeroDivisorPolynomial);
CLOSURE_DEFINE_ERROR(ZeroPolynomial);
CLOSURE_DEFINE_ERROR(InvalidOrder);

// ideals
CLOSURE_DEFINE_ERROR(NotAMember);
CLOSURE_DEFINE_ERROR(UnsupportedCharacteristic);
CLOSURE_DEFINE_ERROR(StrategyFailed);

// normalization loop
CLOSURE_DEFINE_ERROR(EmptyIdeal);
CLOSURE_DEFINE_ERROR(NotNonZeroDivisor);
CLOSURE_DEFINE_ERROR(LiftFailed);
CLOSURE_DEFINE_ERROR(VerificationFailed);

#undef CLOSURE_DEFINE_ERROR

}  // namespace closure
