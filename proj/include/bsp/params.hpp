#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsp {

// Arbitrary-precision integer used for b-exponents, carries and tails.
// Letter values themselves stay machine-sized (they live in [0, d)).
using Int = boost::multiprecision::cpp_int;

// The three parameter regimes of the one-relator presentation
//   POSITIVE:  a b^c = b^d a      (BS1 when c >= d, BS2 when c < d)
//   NEGATIVE:  a b^c = b^-d a     (equivalently b^d a b^c = a), called BS3.
enum class GroupCase { BS1, BS2, BS3 };

enum class ErrorCode {
  Syntax,            // malformed word / sequence / descriptor text
  NegativeAExponent, // a^-k in monoid context
  NotInMonoid,       // a sweep step would need a negative b-run
  WrongCase,         // operation undefined for this parameter regime
  EmptyIntersection, // no witness exists
  DepthExceeded,     // query beyond stored truncation depth
  InvalidSequence,   // admissibility inequalities violated
  Periodic,          // separation impossible because d divides c
  NotComposable,     // groupoid product undefined for these triples
  LevelZero,         // transfer map undefined at level 0
  Internal,          // broken internal invariant (a bug, not user error)
};

std::string errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(errorCodeName(code) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Presentation parameters.  c, d >= 1 always; `negative` selects BS3.
struct Params {
  long long c = 1;
  long long d = 1;
  bool negative = false;

  Params() = default;
  Params(long long c_, long long d_, bool negative_ = false);

  GroupCase groupCase() const {
    if (negative) return GroupCase::BS3;
    return c >= d ? GroupCase::BS1 : GroupCase::BS2;
  }
  bool positive() const { return !negative; }
  // Sign of the exponent flow when an `a` moves left across b^d:
  // b^d a = a b^{sign * c}.
  long long flowSign() const { return negative ? -1 : 1; }

  long long e() const { return std::gcd(c, d); }
  long long cPrime() const { return c / e(); }
  long long dPrime() const { return d / e(); }

  bool operator==(const Params& o) const {
    return c == o.c && d == o.d && negative == o.negative;
  }
  bool operator!=(const Params& o) const { return !(*this == o); }

  std::string describe() const;
};

// Floor/ceil division and floored remainder on big integers (the builtin
// operators truncate toward zero, which is wrong for negative carries).
Int floorDiv(const Int& a, const Int& b);
Int ceilDiv(const Int& a, const Int& b);
Int floorMod(const Int& a, const Int& b);

// Checked narrowing for letters and small counts.
long long toLong(const Int& v);

}  // namespace bsp
