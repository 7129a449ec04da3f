#pragma once

#include <optional>
#include <vector>

#include "bsp/hereditary.hpp"
#include "bsp/normal_form.hpp"
#include "bsp/params.hpp"
#include "bsp/words.hpp"

namespace bsp::oracle {

// Equality of two positive words in the monoid, decided by closing both
// under the defining relation (applied in both directions anywhere in the
// word) within a length cap.  Completely independent of the normal-form
// sweep.  Words must have nonnegative exponents.
bool equivalentWords(const Params& par, const Word& u, const Word& v,
                     long long slack = 4);

// State of the right-multiplication machine for a group element carried as a
// fraction alpha.beta^{-1}.  After feeding a word g, value() reports the
// normal form of alpha.beta^{-1}.g when that element lies in the monoid.
struct PairMachine {
  PathL alpha;
  PathL beta;
  bool escaped = false;  // a seam refused to pinch; stays outside forever

  PairMachine(PathL a, PathL b);
  void feed(const Word& g);
  std::optional<PathL> value() const;
};

// Membership in a hereditary set by direct enumeration of stage targets:
// beta belongs iff it is an initial segment of some target.  Supports the
// staged descriptor kinds; `stages` bounds the search.
bool memberStagesOracle(const Descriptor& D, const PathL& beta,
                        long long stages, const Int& tailCap);

// Smith invariant factors (each > 0, divisibility chain) of an integer
// matrix; trailing data also reports the rank deficiency via the count.
std::vector<Int> smithInvariantFactors(std::vector<std::vector<Int>> M);

// Cokernel of the column space of M inside Z^cols, via Smith normal form.
struct CokernelShape {
  long long rank = 0;
  std::vector<Int> torsion;
};
CokernelShape cokernelOfRelations(const std::vector<std::vector<Int>>& relations,
                                  long long generators);

}  // namespace bsp::oracle
