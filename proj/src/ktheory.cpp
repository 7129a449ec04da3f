#include "bsp/ktheory.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "bsp/odometer.hpp"

namespace bsp {

namespace {

Int intPow(long long base, long long exp) {
  Int out = 1;
  for (long long i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

LocalizedInt makeLocalized(Int num, long long base, long long exp) {
  if (base < 1) fail(ErrorCode::Syntax, "localization base must be >= 1");
  if (exp < 0) fail(ErrorCode::Internal, "negative denominator exponent");
  LocalizedInt out{std::move(num), base, exp};
  if (out.base == 1 || out.num == 0) {
    out.exp = 0;
    return out;
  }
  while (out.exp > 0 && out.num % out.base == 0) {
    out.num /= out.base;
    --out.exp;
  }
  return out;
}

LocalizedInt addLocalized(const LocalizedInt& a, const LocalizedInt& b) {
  if (a.base != b.base) fail(ErrorCode::Internal, "mixed localization bases");
  const long long exp = std::max(a.exp, b.exp);
  const Int num = a.num * intPow(a.base, exp - a.exp) +
                  b.num * intPow(b.base, exp - b.exp);
  return makeLocalized(num, a.base, exp);
}

LocalizedInt scaleLocalized(const Int& k, const LocalizedInt& a) {
  return makeLocalized(k * a.num, a.base, a.exp);
}

bool localizedEqual(const LocalizedInt& a, const LocalizedInt& b) {
  if (a.num == 0 && b.num == 0) return true;
  return a.base == b.base && a.exp == b.exp && a.num == b.num;
}

bool localizedIsZero(const LocalizedInt& a) { return a.num == 0; }

std::string localizedToString(const LocalizedInt& a) {
  if (a.exp == 0) return a.num.str();
  return a.num.str() + "/" + std::to_string(a.base) + "^" + std::to_string(a.exp);
}

CylinderFunction::CylinderFunction(Params p, long long lvl) : par(p), level(lvl) {
  if (lvl < 0) fail(ErrorCode::Syntax, "negative level");
  Int cells = 1;
  for (long long i = 0; i < lvl; ++i) {
    cells *= par.e();
    if (cells > 10000000) fail(ErrorCode::Internal, "cylinder level too large");
  }
  values.assign(static_cast<size_t>(toLong(cells)),
                makeLocalized(0, par.dPrime(), 0));
}

LocalizedInt& CylinderFunction::at(const std::vector<long long>& mu) {
  return const_cast<LocalizedInt&>(
      static_cast<const CylinderFunction*>(this)->at(mu));
}

const LocalizedInt& CylinderFunction::at(const std::vector<long long>& mu) const {
  if (static_cast<long long>(mu.size()) != level)
    fail(ErrorCode::Syntax, "coordinate count does not match level");
  const long long e = modulus();
  size_t idx = 0;
  size_t stride = 1;
  for (long long v : mu) {
    idx += static_cast<size_t>(floorMod(v, e)) * stride;
    stride *= static_cast<size_t>(e);
  }
  return values[idx];
}

namespace {

CylinderFunction sumOutFirst(const CylinderFunction& f, const Int& factor) {
  if (f.level == 0)
    fail(ErrorCode::LevelZero, "transfer maps need at least one coordinate");
  CylinderFunction out(f.par, f.level - 1);
  const size_t e = static_cast<size_t>(f.par.e());
  for (size_t rest = 0; rest < out.size(); ++rest) {
    LocalizedInt acc = makeLocalized(0, f.par.dPrime(), 0);
    for (size_t mu1 = 0; mu1 < e; ++mu1)
      acc = addLocalized(acc, f.values[mu1 + e * rest]);
    out.values[rest] = scaleLocalized(factor, acc);
  }
  return out;
}

}  // namespace

CylinderFunction eta0(const CylinderFunction& f) {
  return sumOutFirst(f, Int(f.par.dPrime()));
}

CylinderFunction eta1(const CylinderFunction& f) {
  const Int factor = Int(f.par.flowSign()) * f.par.cPrime();
  return sumOutFirst(f, factor);
}

CylinderFunction refine(const CylinderFunction& f) {
  CylinderFunction out(f.par, f.level + 1);
  const size_t block = f.size();
  for (size_t t = 0; t < static_cast<size_t>(f.par.e()); ++t)
    for (size_t j = 0; j < block; ++j) out.values[j + t * block] = f.values[j];
  return out;
}

LocalizedInt integrate(const CylinderFunction& f) {
  LocalizedInt sum = makeLocalized(0, f.par.dPrime(), 0);
  for (const auto& v : f.values) sum = addLocalized(sum, v);
  // Each residue cell at level k has measure d'^k / d^k; rewrite the total in
  // Z[1/d].
  const long long k = f.level;
  if (sum.exp <= k)
    return makeLocalized(sum.num * intPow(f.par.dPrime(), k - sum.exp), f.par.d, k);
  return makeLocalized(sum.num * intPow(f.par.e(), sum.exp - k), f.par.d, sum.exp);
}

bool kernelCheckFiniteStage(const CylinderFunction& f) {
  CylinderFunction g = f;
  for (long long i = 0; i < f.level; ++i) g = eta0(g);
  const bool killedAtLevelZero = localizedIsZero(g.values[0]);
  const bool zeroIntegral = localizedIsZero(integrate(f));
  return killedAtLevelZero == zeroIntegral;
}

bool invariantIndicator(const Params& par, const std::vector<long long>& mu,
                        const Tuple& i) {
  if (i.size() < mu.size() + 1)
    fail(ErrorCode::Syntax, "point too short for the requested level");
  for (size_t l = 0; l < mu.size(); ++l)
    if (floorMod(Int(i[l + 1]) - mu[l], par.e()) != 0) return false;
  return true;
}

bool orbitCoverCheck(const Params& par, const Tuple& exactPrefix, long long depth) {
  if (exactPrefix.empty()) fail(ErrorCode::Syntax, "empty prefix");
  if (depth < static_cast<long long>(exactPrefix.size()))
    fail(ErrorCode::Syntax, "depth shorter than the prefix");
  for (long long v : exactPrefix)
    if (v < 0 || v >= par.d) fail(ErrorCode::Syntax, "digit out of range");
  Int total = 1;
  for (long long i = 0; i < depth; ++i) {
    total *= par.d;
    if (total > 2000000) fail(ErrorCode::Internal, "orbit space too large");
  }
  const size_t n = static_cast<size_t>(toLong(total));

  const auto decode = [&](size_t idx) {
    Tuple digits(static_cast<size_t>(depth));
    for (long long l = 0; l < depth; ++l) {
      digits[static_cast<size_t>(l)] = static_cast<long long>(idx % par.d);
      idx /= static_cast<size_t>(par.d);
    }
    return digits;
  };
  const auto encode = [&](const Tuple& digits) {
    size_t idx = 0;
    size_t stride = 1;
    for (long long v : digits) {
      idx += static_cast<size_t>(v) * stride;
      stride *= static_cast<size_t>(par.d);
    }
    return idx;
  };

  std::vector<char> inOrbit(n, 0);
  std::vector<size_t> queue;
  for (size_t idx = 0; idx < n; ++idx) {
    const Tuple digits = decode(idx);
    bool match = true;
    for (size_t l = 0; l < exactPrefix.size() && match; ++l)
      match = digits[l] == exactPrefix[l];
    if (match) {
      inOrbit[idx] = 1;
      queue.push_back(idx);
    }
  }
  // Forward closure under the tail-action generator is enough: on a finite
  // set a bijection's forward orbit already contains the backward one.
  while (!queue.empty()) {
    const size_t idx = queue.back();
    queue.pop_back();
    const size_t next = encode(bAction(par, decode(idx), 1));
    if (!inOrbit[next]) {
      inOrbit[next] = 1;
      queue.push_back(next);
    }
  }

  const std::vector<long long> mu(exactPrefix.begin() + 1, exactPrefix.end());
  for (size_t idx = 0; idx < n; ++idx) {
    const bool want = invariantIndicator(par, mu, decode(idx));
    if (want != static_cast<bool>(inOrbit[idx])) return false;
  }
  return true;
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
  return a.rank == b.rank && a.torsion == b.torsion;
}

std::string groupToString(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.rank == 1) parts.push_back("Z");
  else if (g.rank > 1) parts.push_back("Z^" + std::to_string(g.rank));
  for (const Int& t : g.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " (+) " + parts[i];
  return out;
}

AbelianGroup localizedCokernel(Int m, long long base) {
  if (base < 1) fail(ErrorCode::Syntax, "localization base must be >= 1");
  if (m == 0) return AbelianGroup{1, {}};
  Int m0 = m < 0 ? -m : m;
  for (Int g = boost::multiprecision::gcd(m0, Int(base)); g > 1;
       g = boost::multiprecision::gcd(m0, Int(base)))
    m0 /= g;
  AbelianGroup out;
  if (m0 > 1) out.torsion.push_back(m0);
  return out;
}

KTheory kGroups(const Params& par) {
  const Int m0 = Int(par.d) - 1;  // acts on Z[1/d]
  const Int m1 = par.positive() ? Int(par.c) - 1 : -Int(par.c) - 1;  // on Z[1/c]
  KTheory out;
  out.k0 = localizedCokernel(m0, par.d);
  if (m1 == 0) out.k0.rank += 1;  // kernel of m1 on Z[1/c]
  out.k1 = localizedCokernel(m1, par.c);
  if (m0 == 0) out.k1.rank += 1;  // kernel of m0 on Z[1/d]
  out.identityClass = (par.positive() && par.c == 1) ? "(1,0)" : "1";
  return out;
}

FixedPointKTheory fixedPointKGroups(const Params& par, long long levels) {
  FixedPointKTheory out;
  out.k0Base = par.d;
  out.k1Base = par.c;
  for (long long k = 0; k < levels; ++k) {
    const std::string ak1 = (k == 0) ? "a" : "a^" + std::to_string(k + 1);
    out.k0Certificates.push_back("[S[" + ak1 + "] S[" + ak1 + "]*] = 1/" +
                                 std::to_string(par.d) + "^" + std::to_string(k));
    if (k == 0) {
      out.k1Certificates.push_back("[S[b]] = 1/" + std::to_string(par.c) + "^0");
    } else {
      const std::string ak = (k == 1) ? "a" : "a^" + std::to_string(k);
      out.k1Certificates.push_back("[S[" + ak + "] S[b] S[" + ak + "]*] = 1/" +
                                   std::to_string(par.c) + "^" + std::to_string(k));
    }
  }
  return out;
}

}  // namespace bsp
