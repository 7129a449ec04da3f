#include "bsp/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "bsp/odometer.hpp"

namespace bsp {

namespace {

void requireSameParams(const PathL& a, const PathL& b) {
  if (a.par != b.par) fail(ErrorCode::Internal, "mixed parameters in a lattice operation");
}

long long commonPrefixOk(const PathL& a, const PathL& b) {
  long long k = std::min(a.height(), b.height());
  for (long long mu = 0; mu < k; ++mu)
    if (a.letters[mu] != b.letters[mu]) return -1;
  return k;
}

// Sum of the top carries of h consecutive odometer steps starting at i.
Int carrySumBS1(const Params& par, Tuple i, const Int& h) {
  Int total = 0;
  for (Int mu = 0; mu < h; ++mu) {
    CarryData cd = phiClosedForm(par, i);
    total += cd.r.back();
    i = cd.out;
  }
  return total;
}

std::string pathKey(const PathL& p) {
  std::string key;
  for (long long v : p.letters) {
    key += std::to_string(v);
    key += '.';
  }
  key += '|';
  key += p.tail.str();
  return key;
}

}  // namespace

bool meets(const PathL& alpha, const PathL& beta) {
  requireSameParams(alpha, beta);
  return commonPrefixOk(alpha, beta) >= 0;
}

std::optional<PathL> join(const PathL& alpha, const PathL& beta) {
  requireSameParams(alpha, beta);
  if (commonPrefixOk(alpha, beta) < 0) return std::nullopt;

  const PathL* lo = &alpha;
  const PathL* hi = &beta;
  if (lo->height() > hi->height()) std::swap(lo, hi);

  if (lo->height() == hi->height())
    return PathL{alpha.par, hi->letters, std::max(lo->tail, hi->tail)};

  if (alpha.par.groupCase() == GroupCase::BS3) {
    // Meeting elements of different heights are comparable: the taller wins.
    if (!isInitialSegment(*lo, *hi)) fail(ErrorCode::Internal, "BS3 meet without comparability");
    return *hi;
  }

  const long long k = lo->height();
  const Int& p = lo->tail;
  const Params& par = alpha.par;

  if (par.groupCase() == GroupCase::BS1) {
    const long long fk = hi->letters[k];
    if (p <= fk) return *hi;
    // Strip the common prefix and the letter under the tail; the least
    // common extension of b^m with the remaining path raises the tail by c
    // times the accumulated top carries of ceil(m/d) odometer steps.
    Int m = p - fk;
    Tuple idelta;
    idelta.push_back(0);
    idelta.insert(idelta.end(), hi->letters.begin() + k + 1, hi->letters.end());
    Int R = carrySumBS1(par, idelta, ceilDiv(m, par.d));
    return PathL{par, hi->letters, std::max(hi->tail, Int(R * par.c))};
  }

  // BS2: read the stripped suffix in form (R); its lead absorbs b-runs.
  PathR suffix = toFormR(dropLetters(*hi, k));
  if (p <= suffix.lead) return *hi;
  Int m = p - suffix.lead;
  Tuple cur;
  cur.push_back(0);
  for (size_t mu = 0; mu + 1 < suffix.letters.size(); ++mu) cur.push_back(suffix.letters[mu]);
  Int S = 0;
  Int h = 0;
  for (;; ++h) {
    PsiStep step = psiFiniteBS2(par, cur);
    S += step.r;
    if (S * par.d >= m) break;
    cur = step.psi;
  }
  // Rebuild: common prefix with tail = lead, then the suffix letters with the
  // final run raised to (h+1) c.
  PathL head{par, std::vector<long long>(hi->letters.begin(), hi->letters.begin() + k),
             suffix.lead};
  Word w;
  for (size_t mu = 0; mu + 1 < suffix.letters.size(); ++mu) {
    w.push_back(Token{'a', 1});
    if (suffix.letters[mu] != 0) w.push_back(Token{'b', suffix.letters[mu]});
  }
  w.push_back(Token{'a', 1});
  w.push_back(Token{'b', Int((h + 1) * par.c)});
  return compose(head, normalize(par, w));
}

std::vector<PathL> joinOracle(const PathL& alpha, const PathL& beta, long long depth,
                              bool prune) {
  requireSameParams(alpha, beta);
  std::vector<PathL> found;
  if (prune && commonPrefixOk(alpha, beta) < 0) return found;

  const long long heightCap = std::max(alpha.height(), beta.height()) + 2;
  auto compatible = [&](const PathL& node) {
    long long k = std::min(node.height(), beta.height());
    for (long long mu = 0; mu < k; ++mu)
      if (node.letters[mu] != beta.letters[mu]) return false;
    return true;
  };

  std::unordered_set<std::string> seen;
  std::deque<std::pair<PathL, long long>> queue;
  queue.emplace_back(alpha, 0);
  seen.insert(pathKey(alpha));
  while (!queue.empty()) {
    auto [node, used] = queue.front();
    queue.pop_front();
    if (isInitialSegment(beta, node)) found.push_back(node);
    if (used == depth) continue;
    for (char g : {'b', 'a'}) {
      PathL next = mixedExtend(node, Word{Token{g, 1}});
      if (prune) {
        if (next.height() > heightCap) continue;
        if (!compatible(next)) continue;
      }
      std::string key = pathKey(next);
      if (seen.insert(key).second) queue.emplace_back(std::move(next), used + 1);
    }
  }

  // Keep the minimal elements of the found set.
  std::vector<PathL> minimal;
  for (const PathL& f : found) {
    bool isMin = true;
    for (const PathL& g : found)
      if (!(g == f) && isInitialSegment(g, f)) {
        isMin = false;
        break;
      }
    if (isMin && std::find(minimal.begin(), minimal.end(), f) == minimal.end())
      minimal.push_back(f);
  }
  return minimal;
}

ReducedPair reduceGroupPair(const PathL& alpha, const PathL& beta) {
  requireSameParams(alpha, beta);
  ReducedPair t{alpha.par, alpha.letters, alpha.tail - beta.tail, beta.letters};
  const long long c = alpha.par.c;
  const long long sign = alpha.par.flowSign();
  // P b^{n' c} Q^{-1} = P' b^{i + sign n' d - j} Q'^{-1} where i, j are the
  // last letters of P and Q: the inner a / a^{-1} pair cancels.
  while (t.n % c == 0 && !t.iLetters.empty() && !t.jLetters.empty()) {
    Int nPrime = t.n / c;
    t.n = t.iLetters.back() + sign * nPrime * alpha.par.d - t.jLetters.back();
    t.iLetters.pop_back();
    t.jLetters.pop_back();
  }
  return t;
}

PathL quasiLatticeGenerator(const PathL& alpha, const PathL& beta) {
  requireSameParams(alpha, beta);
  const Params& par = alpha.par;
  if (par.groupCase() == GroupCase::BS3 && par.c > 1)
    fail(ErrorCode::WrongCase, "no single generator in BS3 with c > 1");
  ReducedPair t = reduceGroupPair(alpha, beta);
  if (par.positive())
    return PathL{par, t.iLetters, t.n > 0 ? t.n : Int(0)};
  // BS3 with c = 1: the reduction always exhausts one side.
  if (!t.jLetters.empty() || (t.iLetters.empty() && t.n < 0)) return identityPath(par);
  return PathL{par, t.iLetters, t.n};
}

std::vector<PathL> lfeWitness(const PathL& alpha, const PathL& beta) {
  requireSameParams(alpha, beta);
  const Params& par = alpha.par;
  if (par.groupCase() != GroupCase::BS3)
    fail(ErrorCode::WrongCase, "finite-exhaustion witnesses are a BS3 construction");
  ReducedPair t = reduceGroupPair(alpha, beta);
  if (!t.jLetters.empty()) return {PathL{par, t.iLetters, 0}};
  if (!t.iLetters.empty() || t.n >= 0) return {PathL{par, t.iLetters, t.n}};
  return {identityPath(par)};
}

bool exhaustive(const Params& par, const std::vector<PathL>& F) {
  if (F.empty()) return false;
  long long K = 0;
  for (const PathL& f : F) {
    if (f.par != par) fail(ErrorCode::Internal, "mixed parameters in exhaustive");
    if (f.height() == 0) return true;  // a pure b-power meets everything
    K = std::max(K, f.height());
  }
  // Every element meets some member iff every letter string of length K
  // extends the letters of some member (tails never obstruct a meet).
  Tuple w(K, 0);
  for (;;) {
    bool covered = false;
    for (const PathL& f : F) {
      bool ok = true;
      for (long long mu = 0; mu < f.height(); ++mu)
        if (f.letters[mu] != w[mu]) {
          ok = false;
          break;
        }
      if (ok) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
    long long pos = 0;
    while (pos < K && ++w[pos] == par.d) w[pos++] = 0;
    if (pos == K) break;
  }
  return true;
}

PathL separationWitness(const PathL& alpha, const PathL& beta) {
  requireSameParams(alpha, beta);
  const Params& par = alpha.par;
  if (par.c % par.d == 0)
    fail(ErrorCode::Periodic, "d divides c: the b-action preserves letters");
  if (alpha == beta) fail(ErrorCode::EmptyIntersection, "no witness separates a path from itself");

  if (!meets(alpha, beta)) return identityPath(par);

  const PathL* lo = &alpha;
  const PathL* hi = &beta;
  if (lo->height() > hi->height()) std::swap(lo, hi);

  if (lo->height() == hi->height()) {
    // Letters agree, tails differ: push both tails through a^k until the
    // digit strings diverge, i.e. until delta (c/d)^k is no longer integral.
    Int delta = hi->tail - lo->tail;
    long long k = 0;
    Int cur = delta;
    for (;;) {
      ++k;
      cur *= par.c;
      if (cur % par.d != 0) break;
      cur /= par.d;
    }
    return normalize(par, Word{Token{'a', k}});
  }

  // Heights differ: one more letter distinguishes them.  Appending b^j a to
  // the shorter path emits the letter (p + j) mod d; pick j so that it
  // differs from the letter the taller path already has there.
  long long fk = hi->letters[lo->height()];
  long long j = (floorMod(Int(fk) - lo->tail, par.d) == 0) ? 1 : 0;
  Word w;
  if (j != 0) w.push_back(Token{'b', j});
  w.push_back(Token{'a', 1});
  return normalize(par, w);
}

bool periodicityCheck(const PathL& gamma) {
  const Params& par = gamma.par;
  if (par.c % par.d != 0)
    fail(ErrorCode::WrongCase, "letter preservation requires d | c");
  PathL shifted = compose(bPower(par, par.d), gamma);
  return shifted.letters == gamma.letters;
}

StructuralFlags structuralFlags(const Params& par) {
  StructuralFlags f;
  f.minimal = true;
  f.contractive = par.d > 1;
  f.topologicallyFree = (par.c % par.d) != 0;
  f.kirchberg = f.topologicallyFree;
  return f;
}

}  // namespace bsp
