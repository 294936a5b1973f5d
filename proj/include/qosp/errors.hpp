#pragma once

#include <stdexcept>
#include <string>

namespace qosp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QOSP_DECLARE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

QOSP_DECLARE_ERROR(DivisionByZero);
QOSP_DECLARE_ERROR(NotDivisible);
QOSP_DECLARE_ERROR(PoleAtPoint);
QOSP_DECLARE_ERROR(ParseError);
QOSP_DECLARE_ERROR(InvalidRank);
QOSP_DECLARE_ERROR(DimensionMismatch);
QOSP_DECLARE_ERROR(NonIntegralExponent);
QOSP_DECLARE_ERROR(NotHomogeneous);
QOSP_DECLARE_ERROR(InvalidPair);
QOSP_DECLARE_ERROR(MissingPrerequisite);
QOSP_DECLARE_ERROR(UnsupportedElement);
QOSP_DECLARE_ERROR(NotScalar);
QOSP_DECLARE_ERROR(DegenerateSpectrum);

#undef QOSP_DECLARE_ERROR

}  // namespace qosp
