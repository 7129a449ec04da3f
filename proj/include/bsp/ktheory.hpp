#pragma once

#include <string>
#include <vector>

#include "bsp/odometer.hpp"
#include "bsp/params.hpp"

namespace bsp {

// An element of Z[1/base]: num / base^exp, kept canonical (exp >= 0 and, when
// num != 0, base does not divide num unless exp == 0).
struct LocalizedInt {
  Int num = 0;
  long long base = 1;
  long long exp = 0;
};

LocalizedInt makeLocalized(Int num, long long base, long long exp = 0);
LocalizedInt addLocalized(const LocalizedInt& a, const LocalizedInt& b);
LocalizedInt scaleLocalized(const Int& k, const LocalizedInt& a);
bool localizedEqual(const LocalizedInt& a, const LocalizedInt& b);
bool localizedIsZero(const LocalizedInt& a);
std::string localizedToString(const LocalizedInt& a);

// A locally constant function on the boundary depending on the first `level`
// coordinates through their residues mod e = gcd(c, d).  Values live in
// Z[1/d'] (d' = d/e); index order puts the first coordinate fastest.
struct CylinderFunction {
  Params par;
  long long level = 0;
  std::vector<LocalizedInt> values;  // size e^level

  explicit CylinderFunction(Params p, long long lvl);
  long long modulus() const { return par.e(); }
  size_t size() const { return values.size(); }
  LocalizedInt& at(const std::vector<long long>& mu);
  const LocalizedInt& at(const std::vector<long long>& mu) const;
};

// The two transfer maps on cylinder functions (level k -> level k-1):
//   (eta0 f)(mu2..muk) = d' * sum_{mu1} f(mu1, mu2..muk)
//   (eta1 f)(mu2..muk) = s*c' * sum_{mu1} f(mu1, mu2..muk),  s = -1 in the
// negative case and +1 otherwise.  Level 0 has no coordinate to sum out.
CylinderFunction eta0(const CylinderFunction& f);
CylinderFunction eta1(const CylinderFunction& f);

// View f as a function of one more coordinate (the new last coordinate is
// ignored).  Integration is invariant under this.
CylinderFunction refine(const CylinderFunction& f);

// Integral against the uniform measure: (sum of values) / d^level, returned
// in Z[1/d].
LocalizedInt integrate(const CylinderFunction& f);

// Both routes to "f maps to zero in the inductive limit": the k-fold eta0
// image vanishes at level 0 iff the integral vanishes.  Returns whether the
// two independently computed answers agree.
bool kernelCheckFiniteStage(const CylinderFunction& f);

// Indicator data of the basic invariant sets: membership asks i_l = mu_l
// (mod e) for 1 <= l <= level, with coordinate 0 unconstrained.
bool invariantIndicator(const Params& par, const std::vector<long long>& mu,
                        const Tuple& i);

// Close the depth-`depth` cylinder over `exactPrefix` under the generator of
// the tail action and compare the resulting set with the residue class of
// invariantIndicator.  True when they coincide.
bool orbitCoverCheck(const Params& par, const Tuple& exactPrefix, long long depth);

struct AbelianGroup {
  long long rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

bool operator==(const AbelianGroup& a, const AbelianGroup& b);
std::string groupToString(const AbelianGroup& g);

// Cokernel of multiplication by m on Z[1/base].
AbelianGroup localizedCokernel(Int m, long long base);

struct KTheory {
  AbelianGroup k0;
  AbelianGroup k1;
  std::string identityClass;
};

// K-groups of the boundary crossed product, assembled from the two
// multiplication maps d-1 on Z[1/d] and c-1 (resp. -c-1 in the negative
// case) on Z[1/c].
KTheory kGroups(const Params& par);

// K-theory of the gauge-fixed core: K0 = Z[1/d], K1 = Z[1/c], with explicit
// partial-isometry certificates for the generators 1/d^k and 1/c^k.
struct FixedPointKTheory {
  long long k0Base = 1;
  long long k1Base = 1;
  std::vector<std::string> k0Certificates;
  std::vector<std::string> k1Certificates;
};

FixedPointKTheory fixedPointKGroups(const Params& par, long long levels);

}  // namespace bsp
