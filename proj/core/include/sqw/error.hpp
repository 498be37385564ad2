#pragma once

#include <stdexcept>
#include <string>

namespace sqw {

enum class Errc {
  NotInvertible,
  ZeroPolynomial,
  NotSymmetric,
  DivisionByZero,
  BadSignature,
  DivergentProduct,
  PrefixTooShort,
  SingularDenominator,
  SingularSystem,
  OutOfRange,
  DepthTooShallow,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace sqw
