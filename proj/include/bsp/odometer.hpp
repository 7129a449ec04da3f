#pragma once

#include <vector>

#include "bsp/normal_form.hpp"
#include "bsp/params.hpp"

namespace bsp {

// A truncated boundary point: digits (i_0, ..., i_k), each in [0, d).
using Tuple = std::vector<long long>;

// Eventually periodic digit sequence, stored as preperiod | period.
// The period must be nonempty; entries live in [0, d) (checked on use).
struct EPSeq {
  Tuple pre;
  Tuple period;

  long long at(size_t idx) const {
    if (idx < pre.size()) return pre[idx];
    return period[(idx - pre.size()) % period.size()];
  }
  size_t preLength() const { return pre.size(); }
  size_t periodLength() const { return period.size(); }

  bool operator==(const EPSeq& o) const { return pre == o.pre && period == o.period; }
};

EPSeq makeEPSeq(const Params& par, Tuple pre, Tuple period);

// The path  b^{i_0} a b^{i_1} a ... b^{i_k} a  determined by a truncation.
PathL alphaPath(const Params& par, const Tuple& i);

// Digits together with the carry data of the odometer identity
//   b^d alpha_k(phi(i)) = alpha_k(i) b^{sigma_k c r(i)_k}.
// signs[k] is sigma_k; it is +1 throughout the POSITIVE cases and
// (-1)^{k+1} in BS3 (forced to +1 whenever r[k] = 0, matching the word
// arithmetic where a zero tail carries no sign).
struct CarryData {
  Tuple out;
  std::vector<Int> r;
  std::vector<int> signs;

  bool operator==(const CarryData& o) const {
    return out == o.out && r == o.r && signs == o.signs;
  }
};

// phi by word arithmetic (the authority): digit-by-digit solve of the
// defining identity.  Throws InvalidSequence on out-of-range digits.
CarryData phi(const Params& par, const Tuple& i);

// Case-specific closed forms, cross-checked against phi() in the tests.
CarryData phiClosedForm(const Params& par, const Tuple& i);

// Inverse of phi: the first k+1 letters of b^d * alpha_k(j).
Tuple phiInverse(const Params& par, const Tuple& j);
CarryData phiInverseWithCarries(const Params& par, const Tuple& j);

// Truncated action of b^n: the first k+1 letters of b^n * alpha_k(i).
Tuple bAction(const Params& par, const Tuple& i, const Int& n);

// The same action computed digit-wise with explicit carries (test oracle):
// each overflow of d at coordinate mu adds flowSign * c at coordinate mu+1.
Tuple bActionDigit(const Params& par, const Tuple& i, const Int& n);

// One step of the finite BS2 transfer used by the join construction:
// for i in [0, c)^{k+1},  alpha_k(i) b^c = b^{d r} alpha_k(psi(i)).
struct PsiStep {
  Tuple psi;
  Int r = 0;
};
PsiStep psiFiniteBS2(const Params& par, const Tuple& i);

// BS3 closed form of the inverse odometer with its own carries s:
//   s_0 = 1, psi_0 = j_0, and for k >= 1
//     k odd:  s_k = ceil((c s_{k-1} - j_k) / d)
//     k even: s_k = floor((j_k + c s_{k-1}) / d)
//   psi_k = j_k + sigma_k (d s_k - c s_{k-1}),  sigma_k = (-1)^{k+1}.
CarryData psiClosedFormBS3(const Params& par, const Tuple& j);

}  // namespace bsp
