#pragma once

#include <string>
#include <vector>

#include "bsp/normal_form.hpp"
#include "bsp/odometer.hpp"
#include "bsp/params.hpp"

namespace bsp {

// Descriptors for the directed hereditary subsets of the monoid:
//   Finite  [alpha]           all initial segments of a single path
//   Coset   [alpha B]         letters fixed, tail free
//   C0      union_k [alpha_{k-1}(i)]                  (boundary sequence i)
//   CInf    union of the full tail-tower over i
//   Cn1     BS1 family indexed by an admissible integer sequence n
//   Cn2     BS2 chain member C_n(i), 0 <= n < m(i)
enum class DescriptorTag { Finite, Coset, C0, CInf, Cn1, Cn2 };

struct Descriptor {
  DescriptorTag tag = DescriptorTag::Finite;
  Params par;
  PathL alpha;                     // Finite
  std::vector<long long> letters;  // Coset
  EPSeq seq;                       // C0 / CInf / Cn2
  Tuple i, n;                      // Cn1 (equal-length prefixes)
  Int nIndex = 0;                  // Cn2
};

Descriptor finiteDescriptor(PathL alpha);
Descriptor cosetDescriptor(const Params& par, std::vector<long long> letters);
Descriptor c0Descriptor(const Params& par, EPSeq seq);
Descriptor cinfDescriptor(const Params& par, EPSeq seq);
// Validates the admissibility inequalities; throws InvalidSequence.
Descriptor cn1Descriptor(const Params& par, Tuple i, Tuple n);
// Requires BS2 with limsup(i) < c and 0 <= n < m(i); throws InvalidSequence.
Descriptor cn2Descriptor(const Params& par, EPSeq seq, Int n);

std::string descriptorToString(const Descriptor& D);

// Exact membership test.  Throws DepthExceeded when beta reaches beyond a
// finite descriptor's stored depth.
bool member(const Descriptor& D, const PathL& beta);

// Largest tail at height h (sup over the set), or infinite.
struct MaxTail {
  bool infinite = false;
  Int value = 0;

  bool operator==(const MaxTail& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};
MaxTail maxTail(const Descriptor& D, long long h);

// Are b^0, ..., b^depth all members?  (Saturation detector.)
bool containsB(const Descriptor& D, long long depth);

// BS1 admissibility of the pair (i, n):
//   for every l >= 1:  c n_{l-1} - i_l <= d n_l < c (n_{l-1} + 1) - i_l.
bool validateSeqBS1(const Params& par, const Tuple& i, const Tuple& n);

// Transport along the shift: n admissible for phi(i) becomes n + r(i)
// admissible for i, realizing  b^d C_n(phi(i)) subset-eq C_{n+r(i)}(i).
Tuple sigmaShiftBS1(const Params& par, const Tuple& i, const Tuple& n);

/// BS2 chain data: s = limsup of the digits, and the chain length
//   m = 0 when s >= c (C_0 already saturates), else m = ceil((c-s)/(d-c));
// the distinct sets are C_0 < C_1 < ... < C_{m-1} < C_inf, m+1 of them.
struct ChainInfo {
  long long s = 0;
  Int m = 0;
};
ChainInfo chainBS2(const Params& par, const EPSeq& i);

// Case report for the family of admissible tails over a boundary sequence.
struct SigmaClassification {
  GroupCase groupCase = GroupCase::BS1;
  Tuple greedyN;      // BS1: least admissible n-prefix with n_0 = 0
  long long s = 0;    // BS2
  Int m = 0;          // BS2
  bool sigmaEmpty = false;  // BS3
};
SigmaClassification classifySigma(const Params& par, const EPSeq& i, long long depth);

}  // namespace bsp
