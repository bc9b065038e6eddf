#pragma once

#include <stdexcept>
#include <string>

namespace lpi {

class Error : public std::runtime_error {
public:
  Error(const std::string& kind, const std::string& msg, long index = -1)
      : std::runtime_error(kind + ": " + msg), kind_(kind), index_(index) {}
  const std::string& kind() const noexcept { return kind_; }
  // step, shift or order at which the failure was detected, -1 if not applicable
  long index() const noexcept { return index_; }

private:
  std::string kind_;
  long index_;
};

#define LPI_DEFINE_ERROR(Name)                                                \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& msg, long index = -1)                    \
        : Error(#Name, msg, index) {}                                         \
  };

LPI_DEFINE_ERROR(InvalidArgument)
LPI_DEFINE_ERROR(ParseError)
LPI_DEFINE_ERROR(DenominatorVanishesAtZero)
LPI_DEFINE_ERROR(TailSetInfinite)
LPI_DEFINE_ERROR(LocalityViolation)
LPI_DEFINE_ERROR(TargetUnresolvable)
LPI_DEFINE_ERROR(NonUnipotentAtZero)
LPI_DEFINE_ERROR(NonPolynomialSystem)
LPI_DEFINE_ERROR(InternalShapeViolation)
LPI_DEFINE_ERROR(NonMonomialPrefactor)
LPI_DEFINE_ERROR(TruncationTooShallow)
LPI_DEFINE_ERROR(DegenerateEquation)
LPI_DEFINE_ERROR(LeadingCoefficientVanishes)
LPI_DEFINE_ERROR(PrefixTooShort)
LPI_DEFINE_ERROR(InitialMismatch)
LPI_DEFINE_ERROR(NonIntegralExponent)
LPI_DEFINE_ERROR(InfiniteFiber)
LPI_DEFINE_ERROR(DivisorVanishes)
LPI_DEFINE_ERROR(UnknownName)

#undef LPI_DEFINE_ERROR

} // namespace lpi
