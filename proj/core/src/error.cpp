#include "dlct/error.hpp"

namespace dlct {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::ZeroMask: return "ZeroMask";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::LengthNotPowerOfTwo: return "LengthNotPowerOfTwo";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DomainError: return "DomainError";
    case Errc::NotMonomial: return "NotMonomial";
    case Errc::NotApn: return "NotApn";
    case Errc::NotPlateaued: return "NotPlateaued";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::AllZeroCoefficients: return "AllZeroCoefficients";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace dlct
