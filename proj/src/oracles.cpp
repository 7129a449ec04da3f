#include "bsp/oracles.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "bsp/lattice.hpp"
#include "bsp/odometer.hpp"

namespace bsp::oracle {

namespace {

std::string flatten(const Word& w) {
  std::string out;
  for (const Token& t : w) {
    if (t.exp < 0) fail(ErrorCode::Syntax, "oracle handles positive words only");
    if (t.exp > 10000) fail(ErrorCode::Internal, "oracle word too long");
    for (Int k = 0; k < t.exp; ++k) out.push_back(t.gen);
  }
  return out;
}

std::string repeated(char ch, long long n) {
  return std::string(static_cast<size_t>(n), ch);
}

}  // namespace

bool equivalentWords(const Params& par, const Word& u, const Word& v,
                     long long slack) {
  const std::string su = flatten(u);
  const std::string sv = flatten(v);
  const size_t cap = std::max(su.size(), sv.size()) +
                     static_cast<size_t>(slack * (par.c + par.d));

  // The defining relation as a pair of interchangeable substrings.
  std::string lhs, rhs;
  if (par.positive()) {
    lhs = "a" + repeated('b', par.c);   // a b^c
    rhs = repeated('b', par.d) + "a";   // b^d a
  } else {
    lhs = repeated('b', par.d) + "a" + repeated('b', par.c);  // b^d a b^c
    rhs = "a";
  }

  std::unordered_set<std::string> seen{su};
  std::deque<std::string> queue{su};
  const auto push = [&](std::string next) {
    if (next.size() > cap) return;
    if (seen.insert(next).second) queue.push_back(std::move(next));
  };
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    if (cur == sv) return true;
    if (seen.size() > 500000)
      fail(ErrorCode::Internal, "rewriting closure exceeded its state cap");
    for (size_t pos = 0; (pos = cur.find(lhs, pos)) != std::string::npos; ++pos)
      push(cur.substr(0, pos) + rhs + cur.substr(pos + lhs.size()));
    for (size_t pos = 0; (pos = cur.find(rhs, pos)) != std::string::npos; ++pos)
      push(cur.substr(0, pos) + lhs + cur.substr(pos + rhs.size()));
  }
  return false;
}

PairMachine::PairMachine(PathL a, PathL b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.par.c != beta.par.c || alpha.par.d != beta.par.d ||
      alpha.par.negative != beta.par.negative)
    fail(ErrorCode::Internal, "pair legs built over different parameters");
}

void PairMachine::feed(const Word& g) {
  const Params& par = alpha.par;
  const PathL aStep{par, {0}, 0};  // the path "a"
  for (const Token& t : g) {
    if (escaped) return;
    if (t.gen == 'b') {
      if (t.exp >= 0) {
        // alpha beta^{-1} b^x = (alpha u) v^{-1} with beta u = b^x v = join.
        const auto eta = join(beta, bPower(par, t.exp));
        if (!eta) fail(ErrorCode::Internal, "b-powers always meet");
        const auto u = leftQuotient(beta, *eta);
        const auto v = leftQuotient(bPower(par, t.exp), *eta);
        if (!u || !v) fail(ErrorCode::Internal, "join is an upper bound");
        alpha = compose(alpha, *u);
        beta = *v;
      } else {
        beta = compose(bPower(par, -t.exp), beta);
      }
      continue;
    }
    for (Int k = 0; k < t.exp; ++k) {
      if (!meets(beta, aStep)) {
        // The seam beta^{-1} a cannot pinch, and no later positive letter can
        // cancel it; the running value stays outside the monoid for good.
        escaped = true;
        return;
      }
      const auto eta = join(beta, aStep);
      if (!eta) fail(ErrorCode::Internal, "meets implies a join");
      const auto u = leftQuotient(beta, *eta);
      const auto v = leftQuotient(aStep, *eta);
      if (!u || !v) fail(ErrorCode::Internal, "join is an upper bound");
      alpha = compose(alpha, *u);
      beta = *v;
    }
  }
}

std::optional<PathL> PairMachine::value() const {
  if (escaped) return std::nullopt;
  return rightQuotient(beta, alpha);
}

namespace {

Tuple seqFront(const EPSeq& s, long long len) {
  Tuple out;
  for (long long idx = 0; idx < len; ++idx) out.push_back(s.at(idx));
  return out;
}

bool hitsTarget(const PathL& beta, const Params& par, Tuple prefix, const Int& t) {
  if (par.positive() && t < 0) return false;
  return isInitialSegment(beta, PathL{par, std::move(prefix), t});
}

}  // namespace

bool memberStagesOracle(const Descriptor& D, const PathL& beta,
                        long long stages, const Int& tailCap) {
  const Params& par = D.par;
  switch (D.tag) {
    case DescriptorTag::Finite:
      return isInitialSegment(beta, D.alpha);
    case DescriptorTag::Coset: {
      for (Int t = par.positive() ? Int(0) : -tailCap; t <= tailCap; ++t)
        if (hitsTarget(beta, par, D.letters, t)) return true;
      return false;
    }
    case DescriptorTag::C0: {
      for (long long k = 1; k <= stages; ++k)
        if (hitsTarget(beta, par, seqFront(D.seq, k), 0)) return true;
      return false;
    }
    case DescriptorTag::CInf: {
      for (long long k = 1; k <= stages; ++k)
        for (Int t = par.positive() ? Int(0) : -tailCap; t <= tailCap; ++t)
          if (hitsTarget(beta, par, seqFront(D.seq, k), t)) return true;
      return false;
    }
    case DescriptorTag::Cn1: {
      for (size_t l = 0; l < D.i.size(); ++l) {
        Tuple prefix(D.i.begin(), D.i.begin() + static_cast<long long>(l));
        const Int t = Int(D.n[l]) * par.d + D.i[l];
        if (hitsTarget(beta, par, std::move(prefix), t)) return true;
      }
      return false;
    }
    case DescriptorTag::Cn2: {
      const Int t = D.nIndex * par.c;
      for (long long k = 1; k <= stages; ++k)
        if (hitsTarget(beta, par, seqFront(D.seq, k), t)) return true;
      return false;
    }
  }
  fail(ErrorCode::Internal, "unknown descriptor tag");
}

std::vector<Int> smithInvariantFactors(std::vector<std::vector<Int>> M) {
  const size_t rows = M.size();
  const size_t cols = rows ? M[0].size() : 0;
  const auto absInt = [](const Int& v) { return v < 0 ? -v : v; };
  std::vector<Int> inv;
  size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the entry of least absolute value in the working submatrix.
    size_t pr = rows, pc = cols;
    for (size_t r = t; r < rows; ++r)
      for (size_t c2 = t; c2 < cols; ++c2)
        if (M[r][c2] != 0 &&
            (pr == rows || absInt(M[r][c2]) < absInt(M[pr][pc]))) {
          pr = r;
          pc = c2;
        }
    if (pr == rows) break;
    std::swap(M[t], M[pr]);
    for (auto& row : M) std::swap(row[t], row[pc]);

    bool clean = true;
    for (size_t r = t + 1; r < rows; ++r) {
      if (M[r][t] == 0) continue;
      const Int q = M[r][t] / M[t][t];
      for (size_t c2 = t; c2 < cols; ++c2) M[r][c2] -= q * M[t][c2];
      if (M[r][t] != 0) clean = false;  // remainder became a smaller pivot
    }
    for (size_t c2 = t + 1; c2 < cols; ++c2) {
      if (M[t][c2] == 0) continue;
      const Int q = M[t][c2] / M[t][t];
      for (size_t r = t; r < rows; ++r) M[r][c2] -= q * M[r][t];
      if (M[t][c2] != 0) clean = false;
    }
    if (!clean) continue;  // repeat with the smaller entries now present

    // Enforce the divisibility chain before accepting the pivot.
    bool divides = true;
    for (size_t r = t + 1; r < rows && divides; ++r)
      for (size_t c2 = t + 1; c2 < cols && divides; ++c2)
        if (M[r][c2] % M[t][t] != 0) {
          for (size_t c3 = t; c3 < cols; ++c3) M[t][c3] += M[r][c3];
          divides = false;
        }
    if (!divides) continue;

    inv.push_back(absInt(M[t][t]));
    ++t;
  }
  return inv;
}

CokernelShape cokernelOfRelations(const std::vector<std::vector<Int>>& relations,
                                  long long generators) {
  for (const auto& row : relations)
    if (static_cast<long long>(row.size()) != generators)
      fail(ErrorCode::Internal, "relation width mismatch");
  const std::vector<Int> inv = smithInvariantFactors(relations);
  CokernelShape out;
  out.rank = generators - static_cast<long long>(inv.size());
  for (const Int& f : inv)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

}  // namespace bsp::oracle
