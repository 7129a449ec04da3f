#include "bsp/boundary.hpp"

#include <algorithm>
#include <numeric>

namespace bsp {

namespace {

void requireSameParams(const Params& a, const Params& b) {
  if (a.c != b.c || a.d != b.d || a.negative != b.negative)
    fail(ErrorCode::Internal, "triple legs built over different parameters");
}

// One refinement move: [alpha, beta, x] and [alpha.b^{x0}a, beta.b^{x0}a,
// shift x] are the same germ, because the path b^{x0}a followed by the point
// (shift x) is the point x again.
void refineOnce(PathL& alpha, PathL& beta, EPSeq& x) {
  const PathL step{alpha.par, {x.at(0)}, 0};
  alpha = compose(alpha, step);
  beta = compose(beta, step);
  x = shiftSeq(x);
}

}  // namespace

BoundaryTriple makeTriple(PathL alpha, PathL beta, EPSeq x) {
  requireSameParams(alpha.par, beta.par);
  for (long long v : x.pre)
    if (v < 0 || v >= alpha.par.d) fail(ErrorCode::Syntax, "boundary digit out of range");
  for (long long v : x.period)
    if (v < 0 || v >= alpha.par.d) fail(ErrorCode::Syntax, "boundary digit out of range");
  if (x.period.empty()) fail(ErrorCode::Syntax, "boundary point needs a nonempty period");
  return BoundaryTriple{std::move(alpha), std::move(beta), std::move(x)};
}

Tuple seqPrefix(const EPSeq& x, long long len) {
  Tuple out;
  out.reserve(static_cast<size_t>(len));
  for (long long idx = 0; idx < len; ++idx) out.push_back(x.at(idx));
  return out;
}

EPSeq shiftSeq(const EPSeq& x) {
  EPSeq out = x;
  if (!out.pre.empty()) {
    out.pre.erase(out.pre.begin());
  } else {
    std::rotate(out.period.begin(), out.period.begin() + 1, out.period.end());
  }
  return out;
}

Tuple pointDigits(const PathL& beta, const EPSeq& x, long long depth) {
  Tuple out;
  out.reserve(static_cast<size_t>(depth));
  const long long h = beta.height();
  for (long long idx = 0; idx < std::min(depth, h); ++idx)
    out.push_back(beta.letters[static_cast<size_t>(idx)]);
  if (depth <= h) return out;
  const Tuple acted = bAction(beta.par, seqPrefix(x, depth - h), beta.tail);
  out.insert(out.end(), acted.begin(), acted.end());
  return out;
}

BoundaryTriple inverseTriple(const BoundaryTriple& g) {
  return BoundaryTriple{g.beta, g.alpha, g.x};
}

bool isUnitTriple(const BoundaryTriple& g) { return g.alpha == g.beta; }

long long heightDiff(const BoundaryTriple& g) {
  return g.alpha.height() - g.beta.height();
}

BoundaryTriple composeTriples(const BoundaryTriple& g, const BoundaryTriple& h) {
  requireSameParams(g.alpha.par, h.alpha.par);
  PathL a1 = g.alpha, b1 = g.beta;
  EPSeq x1 = g.x;
  PathL c1 = h.alpha, d1 = h.beta;
  EPSeq y1 = h.x;

  // Refine both germs until the two middle legs have the same height.
  const long long m = std::max(b1.height(), c1.height());
  while (b1.height() < m) refineOnce(a1, b1, x1);
  while (c1.height() < m) refineOnce(c1, d1, y1);

  if (b1.letters != c1.letters)
    fail(ErrorCode::NotComposable, "source and range points lie under different paths");

  // Same point means b^p.x1 and b^q.y1 agree as digit streams; eventual
  // periodicity makes a finite comparison depth sufficient.
  const Int p = b1.tail;
  const Int q = c1.tail;
  const long long pre =
      static_cast<long long>(std::max(x1.pre.size(), y1.pre.size()));
  const long long per = std::lcm(
      static_cast<long long>(x1.period.size()),
      static_cast<long long>(y1.period.size()));
  if (per > 1000000) fail(ErrorCode::Internal, "comparison depth overflow");
  const long long tall = std::max({a1.height(), b1.height(), d1.height()});
  const long long depth = pre + per + tall + 2;
  if (bAction(b1.par, seqPrefix(x1, depth), p) !=
      bAction(b1.par, seqPrefix(y1, depth), q))
    fail(ErrorCode::NotComposable, "source and range points differ");

  if (q <= p) {
    // y1 = b^{p-q}.x1, so [c1 b^q, d1, y1] = [b1, d1 b^{p-q}, x1] as germs.
    return BoundaryTriple{a1, compose(d1, bPower(d1.par, p - q)), x1};
  }
  return BoundaryTriple{compose(a1, bPower(a1.par, q - p)), d1, y1};
}

bool triplesEqual(const BoundaryTriple& g, const BoundaryTriple& h) {
  try {
    return isUnitTriple(composeTriples(inverseTriple(g), h));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotComposable) return false;
    throw;
  }
}

}  // namespace bsp
