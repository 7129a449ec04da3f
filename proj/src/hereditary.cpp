#include "bsp/hereditary.hpp"

#include <set>
#include <utility>

namespace bsp {

namespace {

const char* tagName(DescriptorTag t) {
  switch (t) {
    case DescriptorTag::Finite: return "finite";
    case DescriptorTag::Coset: return "coset";
    case DescriptorTag::C0: return "c0";
    case DescriptorTag::CInf: return "cinf";
    case DescriptorTag::Cn1: return "cn1";
    case DescriptorTag::Cn2: return "cn2";
  }
  return "?";
}

// Letters of beta must match the descriptor's digits.
bool prefixMatchesSeq(const EPSeq& seq, const PathL& beta) {
  for (long long mu = 0; mu < beta.height(); ++mu)
    if (seq.at(mu) != beta.letters[mu]) return false;
  return true;
}

bool prefixMatchesTuple(const Tuple& i, const PathL& beta) {
  if (beta.height() > static_cast<long long>(i.size())) return false;
  for (long long mu = 0; mu < beta.height(); ++mu)
    if (i[mu] != beta.letters[mu]) return false;
  return true;
}

// Exact staged membership in BS2:  does (i[:h], t) lie below
// alpha_{k-1}(i) b^g for some k >= max(h, 1)?
//
// The quotient tail after consuming digits h..l is tracked by
//   V_{h} = floor((i_h - t) / d) c,   V_{l} = floor((V_{l-1} + i_l) / d) c,
// and stage k = l+1 succeeds iff V_l + g >= 0.  Since c < d the V values are
// bounded, and the digit sequence is eventually periodic, so a repeated
// (phase, V) state proves that no stage ever succeeds.
bool stagedMemberBS2(const Params& par, const EPSeq& seq, long long h, const Int& t,
                     const Int& g) {
  if (h >= 1 && t <= g) return true;
  std::set<std::pair<size_t, Int>> seen;
  size_t ell = static_cast<size_t>(h);
  Int V = floorDiv(Int(seq.at(ell)) - t, par.d) * par.c;
  for (;;) {
    if (V + g >= 0) return true;
    ++ell;
    if (ell >= seq.preLength()) {
      size_t phase = (ell - seq.preLength()) % seq.periodLength();
      if (!seen.insert({phase, V}).second) return false;
    }
    V = floorDiv(V + seq.at(ell), par.d) * par.c;
  }
}

// Largest t with pred(t) true, for a monotone predicate with pred(0) true
// and pred eventually false.
template <typename Pred>
Int monotoneSup(Pred pred) {
  if (!pred(Int(0))) fail(ErrorCode::Internal, "monotone search: pred(0) is false");
  Int lo = 0, hi = 1;
  int guard = 0;
  while (pred(hi)) {
    lo = hi;
    hi <<= 1;
    if (++guard > 256) fail(ErrorCode::Internal, "monotone search found no upper bound");
  }
  // invariant: pred(lo) true, pred(hi) false
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

void requireCase(const Params& par, GroupCase gc, const char* what) {
  if (par.groupCase() != gc) fail(ErrorCode::WrongCase, what);
}

}  // namespace

Descriptor finiteDescriptor(PathL alpha) {
  Descriptor D;
  D.tag = DescriptorTag::Finite;
  D.par = alpha.par;
  D.alpha = std::move(alpha);
  return D;
}

Descriptor cosetDescriptor(const Params& par, std::vector<long long> letters) {
  for (long long v : letters)
    if (v < 0 || v >= par.d) fail(ErrorCode::InvalidSequence, "coset letter outside [0, d)");
  Descriptor D;
  D.tag = DescriptorTag::Coset;
  D.par = par;
  D.letters = std::move(letters);
  return D;
}

Descriptor c0Descriptor(const Params& par, EPSeq seq) {
  Descriptor D;
  D.tag = DescriptorTag::C0;
  D.par = par;
  D.seq = std::move(seq);
  return D;
}

Descriptor cinfDescriptor(const Params& par, EPSeq seq) {
  Descriptor D;
  D.tag = DescriptorTag::CInf;
  D.par = par;
  D.seq = std::move(seq);
  return D;
}

Descriptor cn1Descriptor(const Params& par, Tuple i, Tuple n) {
  requireCase(par, GroupCase::BS1, "tail-indexed families over a sequence require BS1");
  if (!validateSeqBS1(par, i, n))
    fail(ErrorCode::InvalidSequence, "the pair (i, n) violates the admissibility inequalities");
  Descriptor D;
  D.tag = DescriptorTag::Cn1;
  D.par = par;
  D.i = std::move(i);
  D.n = std::move(n);
  return D;
}

Descriptor cn2Descriptor(const Params& par, EPSeq seq, Int n) {
  requireCase(par, GroupCase::BS2, "chain members require BS2");
  ChainInfo ch = chainBS2(par, seq);
  if (ch.m == 0)
    fail(ErrorCode::InvalidSequence, "limsup >= c: the chain collapses and has no proper members");
  if (n < 0 || n >= ch.m) fail(ErrorCode::InvalidSequence, "chain index outside [0, m)");
  Descriptor D;
  D.tag = DescriptorTag::Cn2;
  D.par = par;
  D.seq = std::move(seq);
  D.nIndex = std::move(n);
  return D;
}

std::string descriptorToString(const Descriptor& D) {
  std::string out = tagName(D.tag);
  out += "(";
  switch (D.tag) {
    case DescriptorTag::Finite: out += pathToString(D.alpha); break;
    case DescriptorTag::Coset: {
      for (size_t k = 0; k < D.letters.size(); ++k)
        out += (k ? "," : "") + std::to_string(D.letters[k]);
      break;
    }
    case DescriptorTag::C0:
    case DescriptorTag::CInf:
    case DescriptorTag::Cn2: {
      for (size_t k = 0; k < D.seq.pre.size(); ++k)
        out += (k ? "," : "") + std::to_string(D.seq.pre[k]);
      out += "|";
      for (size_t k = 0; k < D.seq.period.size(); ++k)
        out += (k ? "," : "") + std::to_string(D.seq.period[k]);
      if (D.tag == DescriptorTag::Cn2) out += "; n=" + D.nIndex.str();
      break;
    }
    case DescriptorTag::Cn1: {
      for (size_t k = 0; k < D.i.size(); ++k) out += (k ? "," : "") + std::to_string(D.i[k]);
      out += "; n=";
      for (size_t k = 0; k < D.n.size(); ++k) out += (k ? "," : "") + std::to_string(D.n[k]);
      break;
    }
  }
  out += ")";
  return out;
}

bool member(const Descriptor& D, const PathL& beta) {
  if (D.par != beta.par) fail(ErrorCode::Internal, "descriptor and path parameters differ");
  const long long h = beta.height();
  switch (D.tag) {
    case DescriptorTag::Finite:
      return isInitialSegment(beta, D.alpha);
    case DescriptorTag::Coset:
      if (h > static_cast<long long>(D.letters.size())) return false;
      for (long long mu = 0; mu < h; ++mu)
        if (D.letters[mu] != beta.letters[mu]) return false;
      return true;
    case DescriptorTag::C0: {
      if (!prefixMatchesSeq(D.seq, beta)) return false;
      switch (D.par.groupCase()) {
        case GroupCase::BS1: return beta.tail <= D.seq.at(h);
        case GroupCase::BS2: return stagedMemberBS2(D.par, D.seq, h, beta.tail, 0);
        case GroupCase::BS3: return true;
      }
      return false;
    }
    case DescriptorTag::CInf:
      return prefixMatchesSeq(D.seq, beta);
    case DescriptorTag::Cn1: {
      if (h >= static_cast<long long>(D.i.size()))
        fail(ErrorCode::DepthExceeded, "path reaches beyond the stored prefix");
      if (!prefixMatchesTuple(D.i, beta)) return false;
      return beta.tail <= D.n[h] * D.par.d + D.i[h];
    }
    case DescriptorTag::Cn2: {
      if (!prefixMatchesSeq(D.seq, beta)) return false;
      return stagedMemberBS2(D.par, D.seq, h, beta.tail, D.nIndex * D.par.c);
    }
  }
  return false;
}

MaxTail maxTail(const Descriptor& D, long long h) {
  if (h < 0) fail(ErrorCode::DepthExceeded, "negative height");
  auto searchSup = [&](auto&& pred) {
    return MaxTail{false, monotoneSup(pred)};
  };
  switch (D.tag) {
    case DescriptorTag::Finite: {
      if (h > D.alpha.height()) fail(ErrorCode::DepthExceeded, "height beyond the path");
      if (h == D.alpha.height()) return MaxTail{false, D.alpha.tail};
      if (D.par.groupCase() == GroupCase::BS3) return MaxTail{true, 0};
      std::vector<long long> prefix(D.alpha.letters.begin(), D.alpha.letters.begin() + h);
      return searchSup([&](const Int& t) {
        return isInitialSegment(PathL{D.par, prefix, t}, D.alpha);
      });
    }
    case DescriptorTag::Coset:
      if (h > static_cast<long long>(D.letters.size()))
        fail(ErrorCode::DepthExceeded, "height beyond the stored letters");
      return MaxTail{true, 0};
    case DescriptorTag::C0: {
      switch (D.par.groupCase()) {
        case GroupCase::BS1: return MaxTail{false, D.seq.at(h)};
        case GroupCase::BS2: {
          if (chainBS2(D.par, D.seq).m == 0) return MaxTail{true, 0};
          return searchSup(
              [&](const Int& t) { return stagedMemberBS2(D.par, D.seq, h, t, 0); });
        }
        case GroupCase::BS3: return MaxTail{true, 0};
      }
      break;
    }
    case DescriptorTag::CInf:
      return MaxTail{true, 0};
    case DescriptorTag::Cn1:
      if (h >= static_cast<long long>(D.i.size()))
        fail(ErrorCode::DepthExceeded, "height beyond the stored prefix");
      return MaxTail{false, Int(D.n[h]) * D.par.d + D.i[h]};
    case DescriptorTag::Cn2: {
      Int g = D.nIndex * D.par.c;
      return searchSup([&](const Int& t) { return stagedMemberBS2(D.par, D.seq, h, t, g); });
    }
  }
  fail(ErrorCode::Internal, "unhandled descriptor");
}

bool containsB(const Descriptor& D, long long depth) {
  for (long long q = 0; q <= depth; ++q)
    if (!member(D, bPower(D.par, q))) return false;
  return true;
}

bool validateSeqBS1(const Params& par, const Tuple& i, const Tuple& n) {
  requireCase(par, GroupCase::BS1, "admissibility inequalities belong to BS1");
  if (i.size() != n.size() || i.empty()) return false;
  for (long long v : i)
    if (v < 0 || v >= par.d) return false;
  for (long long v : n)
    if (v < 0) return false;
  for (size_t l = 1; l < i.size(); ++l) {
    Int lhs = Int(par.c) * n[l - 1] - i[l];
    Int mid = Int(par.d) * n[l];
    Int rhs = Int(par.c) * (n[l - 1] + 1) - i[l];
    if (!(lhs <= mid && mid < rhs)) return false;
  }
  return true;
}

Tuple sigmaShiftBS1(const Params& par, const Tuple& i, const Tuple& n) {
  requireCase(par, GroupCase::BS1, "shift transport belongs to BS1");
  CarryData cd = phi(par, i);
  if (!validateSeqBS1(par, cd.out, n))
    fail(ErrorCode::InvalidSequence, "n is not admissible for the shifted sequence");
  Tuple out(n.size());
  for (size_t k = 0; k < n.size(); ++k) out[k] = n[k] + toLong(cd.r[k]);
  if (!validateSeqBS1(par, i, out))
    fail(ErrorCode::Internal, "transported sequence lost admissibility");
  return out;
}

ChainInfo chainBS2(const Params& par, const EPSeq& i) {
  requireCase(par, GroupCase::BS2, "chain data belongs to BS2");
  ChainInfo out;
  out.s = 0;
  for (long long v : i.period) out.s = std::max(out.s, v);
  out.m = (out.s >= par.c) ? Int(0) : ceilDiv(Int(par.c) - out.s, Int(par.d) - par.c);
  return out;
}

SigmaClassification classifySigma(const Params& par, const EPSeq& i, long long depth) {
  if (depth < 1) fail(ErrorCode::Syntax, "classification depth must be at least 1");
  SigmaClassification out;
  out.groupCase = par.groupCase();
  switch (par.groupCase()) {
    case GroupCase::BS1: {
      // Greedy least admissible n: n_0 = 0, then the interval lower end.
      out.greedyN.assign(static_cast<size_t>(depth), 0);
      for (long long l = 1; l < depth; ++l) {
        Int lo = ceilDiv(Int(par.c) * out.greedyN[l - 1] - i.at(l), par.d);
        out.greedyN[l] = toLong(lo < 0 ? Int(0) : lo);
      }
      Tuple prefix(static_cast<size_t>(depth));
      for (long long l = 0; l < depth; ++l) prefix[l] = i.at(l);
      if (!validateSeqBS1(par, prefix, out.greedyN))
        fail(ErrorCode::Internal, "greedy tail sequence is not admissible");
      break;
    }
    case GroupCase::BS2: {
      ChainInfo ch = chainBS2(par, i);
      out.s = ch.s;
      out.m = ch.m;
      break;
    }
    case GroupCase::BS3:
      out.sigmaEmpty = true;
      break;
  }
  return out;
}

}  // namespace bsp
