#pragma once

#include <optional>
#include <vector>

#include "bsp/normal_form.hpp"
#include "bsp/params.hpp"

namespace bsp {

// Do alpha and beta admit a common extension?  Equivalent to agreement of
// their letter strings on the common prefix (in every parameter case).
bool meets(const PathL& alpha, const PathL& beta);

// Least common extension; nullopt when the pair is disjoint.  In the
// POSITIVE cases this is the join of the quasi-lattice order; in BS3 any two
// meeting elements are comparable and the larger one is returned.
std::optional<PathL> join(const PathL& alpha, const PathL& beta);

// Search-based oracle: all minimal common extensions of alpha and beta
// reachable from alpha by an extension word of length <= depth.
// `prune` keeps the sound letter-compatibility and height cuts; switching it
// off gives the raw breadth-first search (slow, used to validate the cuts).
std::vector<PathL> joinOracle(const PathL& alpha, const PathL& beta, long long depth,
                              bool prune = true);

// t = alpha beta^{-1} brought to the reduced shape P b^n Q^{-1}: cancel the
// inner a / a^{-1} pair while the middle exponent is a multiple of c.
struct ReducedPair {
  Params par;
  std::vector<long long> iLetters;  // letters of P
  Int n = 0;
  std::vector<long long> jLetters;  // letters of Q

  bool operator==(const ReducedPair& o) const {
    return par == o.par && iLetters == o.iLetters && n == o.n && jLetters == o.jLetters;
  }
};
ReducedPair reduceGroupPair(const PathL& alpha, const PathL& beta);

// The generator delta of t Lambda  intersect Lambda = delta Lambda for
// t = alpha beta^{-1}.  Defined in the POSITIVE cases and in BS3 with c = 1
// (where the order is total); throws WrongCase for BS3 with c > 1.
PathL quasiLatticeGenerator(const PathL& alpha, const PathL& beta);

// BS3: a finite family F inside t Lambda intersect Lambda such that every
// element of that set meets some member of F.
std::vector<PathL> lfeWitness(const PathL& alpha, const PathL& beta);

// Does every element of the monoid meet some member of F?
bool exhaustive(const Params& par, const std::vector<PathL>& F);

// For distinct alpha, beta (and d not dividing c) a gamma with
// alpha gamma and beta gamma disjoint.  Throws Periodic when d | c and
// EmptyIntersection when alpha == beta.
PathL separationWitness(const PathL& alpha, const PathL& beta);

// When d | c the b-action fixes every letter string: check it on one gamma.
// Throws WrongCase when d does not divide c.
bool periodicityCheck(const PathL& gamma);

struct StructuralFlags {
  bool minimal = false;
  bool contractive = false;
  bool topologicallyFree = false;
  bool kirchberg = false;
};
StructuralFlags structuralFlags(const Params& par);

}  // namespace bsp
