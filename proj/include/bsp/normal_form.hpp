#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsp/params.hpp"
#include "bsp/words.hpp"

namespace bsp {

// Left-greedy canonical form
//     b^{i_0} a b^{i_1} a ... b^{i_{k-1}} a b^{tail}
// with every i_mu in [0, d).  For an element of the positive monoid the tail
// obeys: tail >= 0 in the POSITIVE cases; in BS3 any integer tail is fine as
// soon as k >= 1 (a trailing b-run can be pushed across the last `a`), while
// k = 0 still forces tail >= 0.
//
// The same struct doubles as the container for the *mixed* form of a group
// element produced by an unchecked sweep; such a value may violate the tail
// condition and is only ever handed to inMonoid()/makeChecked-style helpers.
struct PathL {
  Params par;
  std::vector<long long> letters;  // each in [0, d)
  Int tail = 0;

  long long height() const { return static_cast<long long>(letters.size()); }

  bool operator==(const PathL& o) const {
    return par == o.par && letters == o.letters && tail == o.tail;
  }
  bool operator!=(const PathL& o) const { return !(*this == o); }
};

// Right-greedy canonical form  b^{lead} a b^{j_1} a ... a b^{j_k}
// with every j_mu in [0, c); lead >= 0 in the POSITIVE cases, and in BS3
// lead is unconstrained once k >= 1.
struct PathR {
  Params par;
  Int lead = 0;
  std::vector<long long> letters;  // each in [0, c)

  long long height() const { return static_cast<long long>(letters.size()); }

  bool operator==(const PathR& o) const {
    return par == o.par && lead == o.lead && letters == o.letters;
  }
};

// --- construction ----------------------------------------------------------

PathL identityPath(const Params& par);

// b^n as a monoid element; throws NotInMonoid when n < 0.
PathL bPower(const Params& par, const Int& n);

// Left-to-right sweep of a word into form (L), checking after every token
// that the prefix read so far still lies in the monoid (so e.g. b^-1 b is
// rejected even though it cancels).  Throws NotInMonoid.
PathL normalize(const Params& par, const Word& w);

// Same sweep without membership checks: the result is the mixed form of the
// group element spelled by the word.  Useful for quotients, where honest
// intermediate values leave the monoid.
PathL mixedForm(const Params& par, const Word& w);

// Continue a sweep: feed `w` into an existing (possibly mixed) form.
PathL mixedExtend(PathL base, const Word& w);

// Does a mixed form satisfy the monoid tail criterion?
bool inMonoid(const PathL& p);

// Validate an externally supplied (letters, tail) pair.
PathL makePath(const Params& par, std::vector<long long> letters, Int tail);

// --- conversions -----------------------------------------------------------

Word wordOf(const PathL& p);
Word wordOf(const PathR& p);

// Spelling of a path with nonnegative exponents only.  A negative tail (which
// only monoid elements of the negative-relation case can carry) is eliminated
// by applying a b^t = b^d a b^{t+c} to the final a-syllable as often as
// needed; elsewhere a negative tail means the path is not a monoid element.
Word positiveWordOf(const PathL& p);

// Right-to-left sweep into form (R); total on monoid elements.
PathR toFormR(const PathL& p);

// Left-to-right sweep back; validates its argument.
PathL fromFormR(const PathR& p);

std::string pathToString(const PathL& p);
std::string formRToString(const PathR& p);

// --- monoid operations -----------------------------------------------------

PathL compose(const PathL& x, const PathL& y);

// alpha <= beta in the left-divisibility order.
bool isInitialSegment(const PathL& alpha, const PathL& beta);

// gamma with alpha * gamma = beta, when it exists.
std::optional<PathL> leftQuotient(const PathL& alpha, const PathL& beta);

// mu with mu * alpha = beta, when it exists.
std::optional<PathL> rightQuotient(const PathL& alpha, const PathL& beta);

// Drop the first `count` letters (and their leading b-runs): the unique
// delta with  alpha = (first count letters as a path) * ... ; concretely the
// path with letters alpha.letters[count:] and the same tail.
PathL dropLetters(const PathL& alpha, long long count);

// --- mirror ----------------------------------------------------------------

// Reversing words is an anti-isomorphism onto the monoid with c and d
// exchanged (same sign).  reversePath realizes it on canonical forms.
Params mirrorParams(const Params& par);
PathL reversePath(const PathL& p);

}  // namespace bsp
