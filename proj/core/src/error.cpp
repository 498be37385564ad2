#include "sqw/error.hpp"

namespace sqw {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BadSignature: return "BadSignature";
    case Errc::DivergentProduct: return "DivergentProduct";
    case Errc::PrefixTooShort: return "PrefixTooShort";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DepthTooShallow: return "DepthTooShallow";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace sqw
