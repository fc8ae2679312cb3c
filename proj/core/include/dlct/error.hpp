#pragma once

#include <stdexcept>
#include <string>

namespace dlct {

enum class Errc {
  DimensionOutOfRange,
  ReducibleModulus,
  ZeroInverse,
  LengthMismatch,
  EntryOutOfRange,
  ZeroMask,
  ZeroDirection,
  LengthNotPowerOfTwo,
  TooLarge,
  DomainError,
  NotMonomial,
  NotApn,
  NotPlateaued,
  BadParameters,
  NotInvertible,
  NotPermutation,
  AllZeroCoefficients,
  IndexOutOfRange,
  ParseError,
};

const char* to_string(Errc code) noexcept;

// All library failures surface as dlct::Error carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dlct
