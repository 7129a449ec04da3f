#include "bsp/params.hpp"

#include <limits>

namespace bsp {

std::string errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::NegativeAExponent: return "NegativeAExponent";
    case ErrorCode::NotInMonoid: return "NotInMonoid";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::Periodic: return "Periodic";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::LevelZero: return "LevelZero";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Params::Params(long long c_, long long d_, bool negative_)
    : c(c_), d(d_), negative(negative_) {
  if (c < 1 || d < 1) fail(ErrorCode::Syntax, "parameters require c >= 1 and d >= 1");
}

std::string Params::describe() const {
  std::string name;
  switch (groupCase()) {
    case GroupCase::BS1: name = "BS1"; break;
    case GroupCase::BS2: name = "BS2"; break;
    case GroupCase::BS3: name = "BS3"; break;
  }
  return name + "(c=" + std::to_string(c) + ",d=" + std::to_string(d) + ")";
}

Int floorDiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceilDiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Int floorMod(const Int& a, const Int& b) { return a - floorDiv(a, b) * b; }

long long toLong(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) fail(ErrorCode::Internal, "integer too large for a machine word");
  return static_cast<long long>(v);
}

}  // namespace bsp
