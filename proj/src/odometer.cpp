#include "bsp/odometer.hpp"

namespace bsp {

namespace {

void checkDigits(const Params& par, const Tuple& i, const char* who) {
  for (long long v : i)
    if (v < 0 || v >= par.d)
      fail(ErrorCode::InvalidSequence,
           std::string(who) + ": digit " + std::to_string(v) + " outside [0, d)");
}

// Letters and per-level tails of b^n * alpha_k(i), by one unchecked sweep.
// tails[mu] is the tail after the (mu+1)-th `a`, i.e. the b-run that has been
// pushed past level mu.
struct SweptAction {
  Tuple letters;
  std::vector<Int> tails;
};

SweptAction sweepAction(const Params& par, const Tuple& i, const Int& n) {
  checkDigits(par, i, "sweepAction");
  SweptAction out;
  out.letters.reserve(i.size());
  out.tails.reserve(i.size());
  Int carry = n;
  for (long long digit : i) {
    Int x = carry + digit;
    Int m = floorDiv(x, par.d);
    out.letters.push_back(toLong(x - m * par.d));
    carry = par.flowSign() * m * par.c;
    out.tails.push_back(carry);
  }
  return out;
}

int tailSign(const Int& tail) { return tail < 0 ? -1 : 1; }

}  // namespace

EPSeq makeEPSeq(const Params& par, Tuple pre, Tuple period) {
  if (period.empty()) fail(ErrorCode::InvalidSequence, "empty period");
  checkDigits(par, pre, "sequence preperiod");
  checkDigits(par, period, "sequence period");
  return EPSeq{std::move(pre), std::move(period)};
}

PathL alphaPath(const Params& par, const Tuple& i) {
  checkDigits(par, i, "alphaPath");
  return PathL{par, i, 0};
}

CarryData phiInverseWithCarries(const Params& par, const Tuple& j) {
  SweptAction sw = sweepAction(par, j, par.d);
  CarryData out;
  out.out = std::move(sw.letters);
  out.r.reserve(sw.tails.size());
  out.signs.reserve(sw.tails.size());
  for (const Int& tail : sw.tails) {
    if (tail % par.c != 0)
      fail(ErrorCode::Internal, "odometer carry not a multiple of c");
    Int r = tail / par.c;
    out.signs.push_back(tailSign(tail));
    out.r.push_back(r < 0 ? Int(-r) : r);
  }
  return out;
}

Tuple phiInverse(const Params& par, const Tuple& j) {
  return phiInverseWithCarries(par, j).out;
}

CarryData phi(const Params& par, const Tuple& i) {
  checkDigits(par, i, "phi");
  // Solve b^d alpha_k(j) = alpha_k(i) b^{...} digit by digit: extending j by
  // one digit only changes the next letter of the left-hand side, so each
  // level admits a unique choice in [0, d).
  Tuple j;
  j.reserve(i.size());
  for (size_t m = 0; m < i.size(); ++m) {
    bool found = false;
    for (long long cand = 0; cand < par.d; ++cand) {
      j.push_back(cand);
      Tuple probe = phiInverse(par, j);
      if (probe[m] == i[m]) {
        found = true;
        break;
      }
      j.pop_back();
    }
    if (!found) fail(ErrorCode::Internal, "odometer digit solve failed");
  }
  CarryData inv = phiInverseWithCarries(par, j);
  CarryData out;
  out.out = std::move(j);
  out.r = std::move(inv.r);
  out.signs = std::move(inv.signs);
  return out;
}

CarryData phiClosedForm(const Params& par, const Tuple& i) {
  checkDigits(par, i, "phiClosedForm");
  const long long c = par.c, d = par.d;
  CarryData out;
  out.out.resize(i.size());
  out.r.resize(i.size());
  out.signs.assign(i.size(), 1);
  if (i.empty()) return out;

  switch (par.groupCase()) {
    case GroupCase::BS1: {
      // r_0 = 1; phi_k = i_k - c r_{k-1}  (mod d); the carry balances.
      Int rprev = 1;
      out.out[0] = i[0];
      out.r[0] = 1;
      for (size_t k = 1; k < i.size(); ++k) {
        Int x = i[k] - c * rprev;
        long long digit = toLong(floorMod(x, d));
        out.out[k] = digit;
        Int rk = (c * rprev + digit - i[k]) / d;
        out.r[k] = rk;
        rprev = rk;
      }
      break;
    }
    case GroupCase::BS2: {
      // The carry stays 1 until the first level (>= 1) whose digit absorbs
      // the incoming c, then drops to 0 for good.
      size_t ell = i.size();  // first mu >= 1 with i_mu >= c, if any
      for (size_t mu = 1; mu < i.size(); ++mu)
        if (i[mu] >= c) {
          ell = mu;
          break;
        }
      out.out[0] = i[0];
      out.r[0] = 1;
      for (size_t mu = 1; mu < i.size(); ++mu) {
        if (mu < ell) {
          out.out[mu] = i[mu] + d - c;
          out.r[mu] = 1;
        } else if (mu == ell) {
          out.out[mu] = i[mu] - c;
          out.r[mu] = 0;
        } else {
          out.out[mu] = i[mu];
          out.r[mu] = 0;
        }
      }
      break;
    }
    case GroupCase::BS3: {
      // sigma_k = (-1)^{k+1}; carries alternate against the digit flow.
      Int rprev = 1;
      out.out[0] = i[0];
      out.r[0] = 1;
      out.signs[0] = -1;
      for (size_t k = 1; k < i.size(); ++k) {
        const bool odd = (k % 2) == 1;
        const long long sigma = odd ? 1 : -1;
        Int rk = odd ? floorDiv(i[k] + c * rprev, d) : ceilDiv(c * rprev - i[k], d);
        out.out[k] = toLong(i[k] + sigma * (c * rprev - d * rk));
        out.r[k] = rk;
        out.signs[k] = (rk == 0) ? 1 : static_cast<int>(sigma);
        rprev = rk;
      }
      break;
    }
  }
  // Zero carries never carry a sign.
  for (size_t k = 0; k < out.r.size(); ++k)
    if (out.r[k] == 0) out.signs[k] = 1;
  return out;
}

Tuple bAction(const Params& par, const Tuple& i, const Int& n) {
  return sweepAction(par, i, n).letters;
}

Tuple bActionDigit(const Params& par, const Tuple& i, const Int& n) {
  checkDigits(par, i, "bActionDigit");
  Tuple out(i.size());
  Int carry = n;
  for (size_t mu = 0; mu < i.size(); ++mu) {
    Int x = i[mu] + carry;
    Int over = floorDiv(x, par.d);
    out[mu] = toLong(x - over * par.d);
    carry = par.flowSign() * over * par.c;
  }
  return out;
}

PsiStep psiFiniteBS2(const Params& par, const Tuple& i) {
  if (par.groupCase() != GroupCase::BS2)
    fail(ErrorCode::WrongCase, "finite transfer step is a BS2 construction");
  for (long long v : i)
    if (v < 0 || v >= par.c)
      fail(ErrorCode::InvalidSequence, "transfer digit outside [0, c)");
  if (i.empty()) fail(ErrorCode::InvalidSequence, "empty transfer tuple");
  // alpha_k(i) b^c = b^{d r} alpha_k(psi(i)): read psi off form (R).
  PathL p = compose(alphaPath(par, i), bPower(par, par.c));
  PathR r = toFormR(p);
  if (r.letters.empty() || r.letters.back() != 0)
    fail(ErrorCode::Internal, "transfer step: form (R) does not end in a bare a");
  Int lead = r.lead - i[0];
  if (lead % par.d != 0 || lead <= 0)
    fail(ErrorCode::Internal, "transfer step: lead is not a positive multiple of d");
  PsiStep out;
  out.r = lead / par.d;
  out.psi.reserve(i.size());
  out.psi.push_back(i[0]);
  for (size_t mu = 0; mu + 1 < r.letters.size(); ++mu) out.psi.push_back(r.letters[mu]);
  return out;
}

CarryData psiClosedFormBS3(const Params& par, const Tuple& j) {
  if (par.groupCase() != GroupCase::BS3)
    fail(ErrorCode::WrongCase, "this inverse closed form is a BS3 construction");
  checkDigits(par, j, "psiClosedFormBS3");
  const long long c = par.c, d = par.d;
  CarryData out;
  out.out.resize(j.size());
  out.r.resize(j.size());
  out.signs.assign(j.size(), 1);
  if (j.empty()) return out;
  Int sprev = 1;
  out.out[0] = j[0];
  out.r[0] = 1;
  out.signs[0] = -1;
  for (size_t k = 1; k < j.size(); ++k) {
    const bool odd = (k % 2) == 1;
    const long long sigma = odd ? 1 : -1;
    Int sk = odd ? ceilDiv(c * sprev - j[k], d) : floorDiv(j[k] + c * sprev, d);
    out.out[k] = toLong(j[k] + sigma * (d * sk - c * sprev));
    out.r[k] = sk;
    out.signs[k] = (sk == 0) ? 1 : static_cast<int>(sigma);
    sprev = sk;
  }
  for (size_t k = 0; k < out.r.size(); ++k)
    if (out.r[k] == 0) out.signs[k] = 1;
  return out;
}

}  // namespace bsp
