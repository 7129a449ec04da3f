#include "bsp/normal_form.hpp"

namespace bsp {

namespace {

constexpr long long kMaxAExponent = 1'000'000;

void checkPrefixInMonoid(const PathL& p) {
  if (!inMonoid(p))
    fail(ErrorCode::NotInMonoid,
         "prefix leaves the monoid (tail " + p.tail.str() + " at height " +
             std::to_string(p.height()) + ")");
}

// Feed one syllable into a left-to-right sweep.  Moving b^{m d} across an
// `a` turns it into b^{sign m c}: the tail is split as tail = i + m d with
// i in [0, d), the letter i is emitted, and sign*m*c becomes the new tail.
void feedToken(PathL& p, const Token& t, bool checked) {
  const long long d = p.par.d;
  const long long sign = p.par.flowSign();
  if (t.gen == 'b') {
    p.tail += t.exp;
  } else {
    if (t.exp < 0) fail(ErrorCode::NegativeAExponent, "a^" + t.exp.str());
    if (t.exp > kMaxAExponent) fail(ErrorCode::Syntax, "a-exponent too large");
    long long reps = toLong(t.exp);
    for (long long r = 0; r < reps; ++r) {
      Int m = floorDiv(p.tail, d);
      long long letter = toLong(p.tail - m * d);
      p.letters.push_back(letter);
      p.tail = sign * m * p.par.c;
    }
  }
  if (checked) checkPrefixInMonoid(p);
}

PathL sweep(const Params& par, const Word& w, bool checked) {
  PathL p{par, {}, 0};
  if (checked) checkPrefixInMonoid(p);
  for (const Token& t : w) feedToken(p, t, checked);
  return p;
}

}  // namespace

PathL identityPath(const Params& par) { return PathL{par, {}, 0}; }

PathL bPower(const Params& par, const Int& n) {
  if (n < 0) fail(ErrorCode::NotInMonoid, "b^" + n.str() + " has height 0 and negative tail");
  return PathL{par, {}, n};
}

PathL normalize(const Params& par, const Word& w) { return sweep(par, w, true); }

PathL mixedForm(const Params& par, const Word& w) { return sweep(par, w, false); }

PathL mixedExtend(PathL base, const Word& w) {
  for (const Token& t : w) feedToken(base, t, false);
  return base;
}

bool inMonoid(const PathL& p) {
  if (p.par.positive()) return p.tail >= 0;
  return !p.letters.empty() || p.tail >= 0;
}

PathL makePath(const Params& par, std::vector<long long> letters, Int tail) {
  for (long long v : letters)
    if (v < 0 || v >= par.d)
      fail(ErrorCode::Syntax, "letter " + std::to_string(v) + " outside [0, d)");
  PathL p{par, std::move(letters), std::move(tail)};
  if (!inMonoid(p)) fail(ErrorCode::NotInMonoid, "tail " + p.tail.str() + " at height 0");
  return p;
}

Word wordOf(const PathL& p) {
  Word w;
  for (long long letter : p.letters) {
    if (letter != 0) w.push_back(Token{'b', letter});
    if (!w.empty() && w.back().gen == 'a')
      w.back().exp += 1;
    else
      w.push_back(Token{'a', 1});
  }
  if (p.tail != 0) w.push_back(Token{'b', p.tail});
  return w;
}

Word positiveWordOf(const PathL& p) {
  if (p.tail >= 0 || p.letters.empty()) return wordOf(p);
  if (!p.par.negative)
    fail(ErrorCode::NotInMonoid, "no positive spelling: negative tail under the positive relation");
  const Params& par = p.par;
  const Int k = ceilDiv(-p.tail, par.c);
  Word w;
  for (size_t l = 0; l + 1 < p.letters.size(); ++l) {
    if (p.letters[l] != 0) w.push_back(Token{'b', p.letters[l]});
    if (!w.empty() && w.back().gen == 'a')
      w.back().exp += 1;
    else
      w.push_back(Token{'a', 1});
  }
  const Int lead = Int(p.letters.back()) + k * par.d;
  if (lead != 0) w.push_back(Token{'b', lead});
  w.push_back(Token{'a', 1});
  const Int tail = p.tail + k * par.c;
  if (tail != 0) w.push_back(Token{'b', tail});
  return w;
}

Word wordOf(const PathR& p) {
  Word w;
  if (p.lead != 0) w.push_back(Token{'b', p.lead});
  for (long long letter : p.letters) {
    if (!w.empty() && w.back().gen == 'a')
      w.back().exp += 1;
    else
      w.push_back(Token{'a', 1});
    if (letter != 0) w.push_back(Token{'b', letter});
  }
  return w;
}

PathR toFormR(const PathL& p) {
  if (!inMonoid(p)) fail(ErrorCode::NotInMonoid, "form (R) requested for a non-monoid element");
  const long long c = p.par.c;
  const long long sign = p.par.flowSign();
  // Right-to-left: the run right of each `a` is split as x = j + n c with
  // j in [0, c); moving b^{n c} left across the `a` deposits sign*n*d there.
  std::vector<long long> rletters;
  rletters.reserve(p.letters.size());
  Int cur = p.tail;
  for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it) {
    Int n = floorDiv(cur, c);
    rletters.push_back(toLong(cur - n * c));
    cur = *it + sign * n * p.par.d;
  }
  std::reverse(rletters.begin(), rletters.end());
  PathR r{p.par, cur, std::move(rletters)};
  if (p.par.positive() && r.lead < 0)
    fail(ErrorCode::Internal, "negative lead in a positive-case form (R)");
  return r;
}

PathL fromFormR(const PathR& p) {
  for (long long v : p.letters)
    if (v < 0 || v >= p.par.c)
      fail(ErrorCode::Syntax, "form (R) letter " + std::to_string(v) + " outside [0, c)");
  if (p.lead < 0 && (p.par.positive() || p.letters.empty()))
    fail(ErrorCode::NotInMonoid, "form (R) lead " + p.lead.str() + " not allowed here");
  PathL out = mixedForm(p.par, wordOf(p));
  if (!inMonoid(out)) fail(ErrorCode::Internal, "form (R) did not sweep into the monoid");
  return out;
}

std::string pathToString(const PathL& p) { return wordToString(wordOf(p)); }

std::string formRToString(const PathR& p) { return wordToString(wordOf(p)); }

PathL compose(const PathL& x, const PathL& y) {
  if (x.par != y.par) fail(ErrorCode::Internal, "compose across different parameters");
  PathL out = mixedExtend(x, wordOf(y));
  if (inMonoid(x) && inMonoid(y) && !inMonoid(out))
    fail(ErrorCode::Internal, "product of monoid elements left the monoid");
  return out;
}

PathL dropLetters(const PathL& alpha, long long count) {
  if (count < 0 || count > alpha.height())
    fail(ErrorCode::Internal, "dropLetters count out of range");
  PathL out{alpha.par,
            std::vector<long long>(alpha.letters.begin() + count, alpha.letters.end()),
            alpha.tail};
  return out;
}

std::optional<PathL> leftQuotient(const PathL& alpha, const PathL& beta) {
  if (alpha.par != beta.par) fail(ErrorCode::Internal, "quotient across different parameters");
  if (alpha.height() > beta.height()) return std::nullopt;
  for (long long k = 0; k < alpha.height(); ++k)
    if (alpha.letters[k] != beta.letters[k]) return std::nullopt;
  // gamma = b^{-p} * (the part of beta after alpha's letters); honest
  // intermediate values may dip out of the monoid, so sweep unchecked and
  // apply the tail criterion at the end.
  PathL gamma{alpha.par, {}, -alpha.tail};
  gamma = mixedExtend(gamma, wordOf(dropLetters(beta, alpha.height())));
  if (!inMonoid(gamma)) return std::nullopt;
  return gamma;
}

bool isInitialSegment(const PathL& alpha, const PathL& beta) {
  return leftQuotient(alpha, beta).has_value();
}

std::optional<PathL> rightQuotient(const PathL& alpha, const PathL& beta) {
  // mu * alpha = beta  <=>  rev(alpha) * rev(mu) = rev(beta) in the mirror.
  PathL ra = reversePath(alpha);
  PathL rb = reversePath(beta);
  std::optional<PathL> rmu = leftQuotient(ra, rb);
  if (!rmu) return std::nullopt;
  return reversePath(*rmu);
}

Params mirrorParams(const Params& par) { return Params(par.d, par.c, par.negative); }

PathL reversePath(const PathL& p) {
  PathL out = mixedForm(mirrorParams(p.par), reversedWord(wordOf(p)));
  if (inMonoid(p) && !inMonoid(out))
    fail(ErrorCode::Internal, "reversal of a monoid element left the mirror monoid");
  return out;
}

}  // namespace bsp
