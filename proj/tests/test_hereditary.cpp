#include <doctest.h>

#include <string>
#include <vector>

#include <bsp/hereditary.hpp>
#include <bsp/oracles.hpp>

using namespace bsp;

namespace {

const Params bs1{3, 2, false};
const Params sq{2, 2, false};
const Params bin{1, 2, false};
const Params bs2{2, 3, false};
const Params bs3{2, 2, true};

PathL nf(const Params& par, const std::string& s) { return normalize(par, parseWord(s)); }

}  // namespace

TEST_CASE("descriptor constructors validate their data") {
  CHECK_NOTHROW((void)cn1Descriptor(sq, {0, 0}, {0, 0}));
  CHECK_NOTHROW((void)cn1Descriptor(bs1, {0, 1}, {1, 1}));
  CHECK_NOTHROW((void)cn1Descriptor(bs1, {0, 1}, {1, 2}));
  // d n_1 < c (n_0 + 1) - i_1 fails for these:
  CHECK_THROWS_AS((void)cn1Descriptor(sq, {0, 0}, {0, 1}), Error);
  CHECK_THROWS_AS((void)cn1Descriptor(bs1, {0, 1}, {1, 0}), Error);
  // Prefix lengths must agree.
  CHECK_THROWS_AS((void)cn1Descriptor(sq, {0, 0}, {0}), Error);

  // Chain members need BS2, a limsup below c, and an index inside [0, m).
  CHECK_NOTHROW((void)cn2Descriptor(bs2, makeEPSeq(bs2, {}, {0}), 0));
  CHECK_NOTHROW((void)cn2Descriptor(bs2, makeEPSeq(bs2, {}, {0}), 1));
  CHECK_THROWS_AS((void)cn2Descriptor(bs2, makeEPSeq(bs2, {}, {0}), 2), Error);
  CHECK_THROWS_AS((void)cn2Descriptor(bin, makeEPSeq(bin, {0}, {1}), 0), Error);  // m = 0
  CHECK_THROWS_AS((void)cn2Descriptor(sq, makeEPSeq(sq, {}, {0}), 0), Error);     // BS1

  // Coset letters live in [0, d).
  CHECK_NOTHROW((void)cosetDescriptor(sq, {0, 1}));
  CHECK_THROWS_AS((void)cosetDescriptor(sq, {0, 2}), Error);
}

TEST_CASE("finite and coset membership") {
  const Descriptor fin = finiteDescriptor(nf(bs1, "bab^6"));
  CHECK(member(fin, nf(bs1, "b")));
  CHECK(member(fin, nf(bs1, "ba")));
  CHECK(member(fin, nf(bs1, "bab^3")));
  CHECK(member(fin, nf(bs1, "bab^6")));
  CHECK(!member(fin, nf(bs1, "bab^7")));
  CHECK(!member(fin, nf(bs1, "a")));
  // The final tail absorbs height-0 deficits:
  CHECK(member(fin, nf(bs1, "b^2")));  // b^2 (b a b^3) = b^3 a b^3 = b a b^6
  CHECK(member(fin, nf(bs1, "b^5")));  // b^5 a = b^3 (b^2 a) = b a b^6
  CHECK(!member(fin, nf(bs1, "b^6")));
  CHECK(!member(fin, nf(bs1, "baa")));

  // [aB] at (2,2): the free tail soaks up any b-power since b^2 a = a b^2.
  const Descriptor cos = cosetDescriptor(sq, {0});
  CHECK(member(cos, nf(sq, "b^2")));
  CHECK(member(cos, nf(sq, "b")));
  CHECK(member(cos, nf(sq, "b^7")));
  CHECK(member(cos, nf(sq, "ab^9")));
  CHECK(!member(cos, nf(sq, "ba")));
  CHECK(!member(cos, nf(sq, "aba")));  // height beyond the stored letters
}

TEST_CASE("boundary-sequence membership, frozen values") {
  // (1,2), digits 0,1,1,...: the saturated chain (s = 1 >= c, m = 0).
  const Descriptor c0sat = c0Descriptor(bin, makeEPSeq(bin, {0}, {1}));
  CHECK(member(c0sat, nf(bin, "ab^2")));  // b^2 gamma = aba with gamma = ba
  CHECK(member(c0sat, nf(bin, "ab")));
  CHECK(member(c0sat, nf(bin, "b^3")));

  // (2,2), digits all zero: tails at height h top out at i_h = 0.
  const Descriptor c0flat = c0Descriptor(sq, makeEPSeq(sq, {}, {0}));
  CHECK(member(c0flat, nf(sq, "a")));
  CHECK(member(c0flat, nf(sq, "aa")));
  CHECK(!member(c0flat, nf(sq, "ab")));
  CHECK(!member(c0flat, nf(sq, "ab^2")));
  CHECK(!member(c0flat, nf(sq, "b")));
  CHECK(!member(c0flat, nf(sq, "ba")));

  // The full tail tower over the same sequence has free tails everywhere.
  const Descriptor cinf = cinfDescriptor(sq, makeEPSeq(sq, {}, {0}));
  CHECK(member(cinf, nf(sq, "ab^5")));
  CHECK(member(cinf, nf(sq, "b^4")));
  CHECK(member(cinf, nf(sq, "aab^7")));
  CHECK(!member(cinf, nf(sq, "ba")));
}

TEST_CASE("admissible-tail membership (Cn1), frozen values") {
  const Descriptor flat = cn1Descriptor(sq, {0, 0}, {0, 0});
  CHECK(member(flat, nf(sq, "a")));
  CHECK(member(flat, identityPath(sq)));
  CHECK(!member(flat, nf(sq, "b")));
  CHECK(!member(flat, nf(sq, "ab")));
  CHECK(!member(flat, nf(sq, "ab^2")));  // excluded: one full d-step above n_1 d + i_1
  CHECK_THROWS_AS((void)member(flat, nf(sq, "aa")), Error);  // beyond the stored prefix

  const Descriptor lift = cn1Descriptor(bs1, {0, 1}, {1, 1});
  CHECK(member(lift, nf(bs1, "b^2")));        // stage 0 allows b^{n_0 d + i_0} = b^2
  CHECK(!member(lift, nf(bs1, "b^3")));
  CHECK(member(lift, nf(bs1, "ab^3")));       // stage 1 allows a b^{n_1 d + i_1} = a b^3
  CHECK(!member(lift, nf(bs1, "ab^4")));
  CHECK(!member(lift, nf(bs1, "b^2ab^3")));   // normalizes to a b^9, beyond stage 1
}

TEST_CASE("chain membership (Cn2), frozen values") {
  const EPSeq zeros = makeEPSeq(bs2, {}, {0});
  const Descriptor c0 = cn2Descriptor(bs2, zeros, 0);
  const Descriptor c1 = cn2Descriptor(bs2, zeros, 1);
  // ab distinguishes C_1 from C_0; ab^4 lies outside both.
  CHECK(member(c0, nf(bs2, "a")));
  CHECK(!member(c0, nf(bs2, "ab")));
  CHECK(member(c1, nf(bs2, "a")));
  CHECK(member(c1, nf(bs2, "ab")));
  CHECK(member(c1, nf(bs2, "ab^3")));
  CHECK(!member(c1, nf(bs2, "ab^4")));
  // The chain is increasing: every member of C_0 lies in C_1.
  for (const std::string& w : {"", "a", "aa", "ab", "aab", "b", "ab^2aab"}) {
    const PathL beta = nf(bs2, w.empty() ? "b^0" : w);
    if (member(c0, beta)) CHECK(member(c1, beta));
  }
}

TEST_CASE("membership matches the stage-enumeration oracle") {
  const std::vector<std::string> words{"",     "b",    "b^2", "a",   "ab",  "ab^2",
                                       "ab^3", "ba",   "bab", "aa",  "aab", "ab^2a",
                                       "b^3",  "b^2a", "aba", "abab"};
  std::vector<Descriptor> descriptors;
  descriptors.push_back(finiteDescriptor(nf(bs1, "bab^6")));
  descriptors.push_back(finiteDescriptor(nf(bs3, "ab^-1")));
  descriptors.push_back(cosetDescriptor(sq, {0}));
  descriptors.push_back(cosetDescriptor(bin, {0, 1}));
  descriptors.push_back(c0Descriptor(bin, makeEPSeq(bin, {0}, {1})));
  descriptors.push_back(c0Descriptor(sq, makeEPSeq(sq, {}, {0})));
  descriptors.push_back(c0Descriptor(bs3, makeEPSeq(bs3, {1}, {0})));
  descriptors.push_back(cinfDescriptor(sq, makeEPSeq(sq, {}, {0})));
  descriptors.push_back(cinfDescriptor(bs2, makeEPSeq(bs2, {0}, {1})));
  descriptors.push_back(cn1Descriptor(sq, {0, 0, 0}, {0, 0, 0}));
  descriptors.push_back(cn1Descriptor(bs1, {0, 1}, {1, 1}));
  descriptors.push_back(cn2Descriptor(bs2, makeEPSeq(bs2, {}, {0}), 1));
  for (const Descriptor& D : descriptors) {
    for (const std::string& s : words) {
      PathL beta = identityPath(D.par);
      try {
        beta = nf(D.par, s.empty() ? "b^0" : s);
      } catch (const Error&) {
        continue;  // word not in this monoid
      }
      bool lib;
      try {
        lib = member(D, beta);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DepthExceeded) continue;
        throw;
      }
      const Int absTail = beta.tail < 0 ? Int(-beta.tail) : beta.tail;
      const long long stages = beta.height() + toLong(absTail) + 4;
      const Int tailCap = (absTail + 2) * (D.par.c + D.par.d) + 5;
      const bool orc = oracle::memberStagesOracle(D, beta, stages, tailCap);
      const std::string what = descriptorToString(D) + " on " + pathToString(beta);
      CHECK_MESSAGE(lib == orc, what);
    }
  }
}

TEST_CASE("largest tails per height, frozen values") {
  // Finite: the top height reads the tail; below it the sup also counts the
  // b-powers that later tails absorb (b^5 a = b a b^6, but b^6 exceeds).
  const Descriptor fin = finiteDescriptor(nf(bs1, "bab^6"));
  CHECK(maxTail(fin, 0) == MaxTail{false, 5});
  CHECK(maxTail(fin, 1) == MaxTail{false, 6});
  CHECK_THROWS_AS((void)maxTail(fin, 2), Error);

  // Finite in the negative case: every b-power divides a taller path.
  const Descriptor fneg = finiteDescriptor(nf(bs3, "ab^-1"));
  CHECK(maxTail(fneg, 0).infinite);
  CHECK(maxTail(fneg, 1) == MaxTail{false, -1});

  // Coset tails are free at every stored height.
  const Descriptor cos = cosetDescriptor(sq, {0});
  CHECK(maxTail(cos, 0).infinite);
  CHECK(maxTail(cos, 1).infinite);
  CHECK_THROWS_AS((void)maxTail(cos, 2), Error);

  // Boundary sequences: BS1 reads the digit, saturated BS2 chains blow up.
  CHECK(maxTail(c0Descriptor(sq, makeEPSeq(sq, {}, {0})), 1) == MaxTail{false, 0});
  CHECK(maxTail(c0Descriptor(bs1, makeEPSeq(bs1, {0, 1}, {0})), 1) == MaxTail{false, 1});
  CHECK(maxTail(c0Descriptor(bin, makeEPSeq(bin, {0}, {1})), 1).infinite);
  CHECK(maxTail(cinfDescriptor(sq, makeEPSeq(sq, {}, {0})), 1).infinite);

  // Admissible tails read n_h d + i_h; chain members search the stages.
  const Descriptor lift = cn1Descriptor(bs1, {0, 1}, {1, 1});
  CHECK(maxTail(lift, 0) == MaxTail{false, 2});
  CHECK(maxTail(lift, 1) == MaxTail{false, 3});
  CHECK_THROWS_AS((void)maxTail(lift, 2), Error);
  const EPSeq zeros = makeEPSeq(bs2, {}, {0});
  CHECK(maxTail(cn2Descriptor(bs2, zeros, 0), 1) == MaxTail{false, 0});
  CHECK(maxTail(cn2Descriptor(bs2, zeros, 1), 1) == MaxTail{false, 3});
}

TEST_CASE("maxTail values are attained and not exceeded") {
  std::vector<Descriptor> descriptors;
  descriptors.push_back(finiteDescriptor(nf(bs1, "bab^6")));
  descriptors.push_back(c0Descriptor(sq, makeEPSeq(sq, {0, 1}, {0})));
  descriptors.push_back(cn1Descriptor(bs1, {0, 1}, {1, 1}));
  descriptors.push_back(cn2Descriptor(bs2, makeEPSeq(bs2, {}, {0}), 1));
  for (const Descriptor& D : descriptors) {
    for (long long h = 0; h <= 1; ++h) {
      const MaxTail mt = maxTail(D, h);
      REQUIRE(!mt.infinite);
      // Build the witness path at height h with the claimed tail.
      std::vector<long long> letters;
      for (long long l = 0; l < h; ++l)
        letters.push_back(D.tag == DescriptorTag::Finite ? D.alpha.letters[l]
                          : D.tag == DescriptorTag::Cn1  ? D.i[l]
                                                         : D.seq.at(l));
      CHECK(member(D, PathL{D.par, letters, mt.value}));
      CHECK(!member(D, PathL{D.par, letters, mt.value + 1}));
    }
  }
}

TEST_CASE("b-power saturation detector") {
  CHECK(containsB(cosetDescriptor(sq, {}), 10));
  CHECK(containsB(cosetDescriptor(sq, {0}), 10));  // free tail absorbs any b-power
  CHECK(!containsB(c0Descriptor(sq, makeEPSeq(sq, {}, {0})), 1));  // b not below a^k
  CHECK(containsB(finiteDescriptor(nf(bs1, "b^3")), 3));
  CHECK(!containsB(finiteDescriptor(nf(bs1, "b^3")), 4));
  CHECK(containsB(c0Descriptor(bin, makeEPSeq(bin, {0}, {1})), 6));
  CHECK(containsB(cinfDescriptor(sq, makeEPSeq(sq, {}, {0})), 6));
  CHECK(containsB(finiteDescriptor(nf(bs3, "ab^-1")), 8));  // comparability
}

TEST_CASE("BS1 admissibility and the sigma shift") {
  CHECK(validateSeqBS1(sq, {0, 0}, {0, 0}));
  CHECK(!validateSeqBS1(sq, {0, 0}, {0, 1}));
  CHECK(validateSeqBS1(bs1, {0, 1}, {1, 1}));
  CHECK(validateSeqBS1(bs1, {0, 1}, {1, 2}));
  CHECK(!validateSeqBS1(bs1, {0, 1}, {1, 3}));

  // (2,2): phi fixes digits and every carry is 1, so n = (0,0) transports
  // to n + r = (1,1).
  const Tuple shifted = sigmaShiftBS1(sq, {0, 0}, {0, 0});
  CHECK(shifted == Tuple{1, 1});
  CHECK(validateSeqBS1(sq, {0, 0}, shifted));

  // Transport realizes b^d C_n(phi(i)) inside C_{n + r(i)}(i): push members
  // of the source through b^d and re-test.
  const Tuple i{0, 1};
  const Tuple j = phi(bs1, i).out;
  const Tuple n{0, 0};
  REQUIRE(validateSeqBS1(bs1, j, n));
  const Descriptor before = cn1Descriptor(bs1, j, n);
  const Descriptor after = cn1Descriptor(bs1, i, sigmaShiftBS1(bs1, i, n));
  for (const std::string& s : {"b", "b^2", "a", "ab", "ab^2", "ba", "bab^2"}) {
    PathL beta = identityPath(bs1);
    try {
      beta = nf(bs1, s);
    } catch (const Error&) {
      continue;
    }
    bool inBefore;
    try {
      inBefore = member(before, beta);
    } catch (const Error&) {
      continue;
    }
    if (inBefore) CHECK(member(after, compose(bPower(bs1, bs1.d), beta)));
  }
}

TEST_CASE("BS2 chain data, frozen values") {
  CHECK(chainBS2(bs2, makeEPSeq(bs2, {}, {0})).s == 0);
  CHECK(chainBS2(bs2, makeEPSeq(bs2, {}, {0})).m == 2);
  CHECK(chainBS2(bin, makeEPSeq(bin, {}, {0})).m == 1);
  CHECK(chainBS2(bin, makeEPSeq(bin, {0}, {1})).s == 1);
  CHECK(chainBS2(bin, makeEPSeq(bin, {0}, {1})).m == 0);  // saturated
  // Digits in the preperiod do not affect the limsup.
  CHECK(chainBS2(bs2, makeEPSeq(bs2, {2, 2, 2}, {1})).s == 1);
  CHECK(chainBS2(bs2, makeEPSeq(bs2, {2, 2, 2}, {1})).m == 1);
  CHECK_THROWS_AS((void)chainBS2(bs1, makeEPSeq(bs1, {}, {0})), Error);  // BS2 only
}

TEST_CASE("sigma classification of boundary sequences") {
  const SigmaClassification a = classifySigma(sq, makeEPSeq(sq, {}, {0}), 3);
  CHECK(a.groupCase == GroupCase::BS1);
  CHECK(a.greedyN == Tuple{0, 0, 0});
  CHECK(validateSeqBS1(sq, {0, 0, 0}, a.greedyN));

  const SigmaClassification b = classifySigma(bs2, makeEPSeq(bs2, {}, {0}), 3);
  CHECK(b.groupCase == GroupCase::BS2);
  CHECK(b.s == 0);
  CHECK(b.m == 2);

  const SigmaClassification c = classifySigma(bs3, makeEPSeq(bs3, {}, {0}), 3);
  CHECK(c.groupCase == GroupCase::BS3);
  CHECK(c.sigmaEmpty);

  CHECK_THROWS_AS((void)classifySigma(sq, makeEPSeq(sq, {}, {0}), 0), Error);
}

TEST_CASE("descriptor strings are distinct and informative") {
  const Descriptor a = finiteDescriptor(nf(bs1, "bab^6"));
  const Descriptor b = cosetDescriptor(sq, {0});
  const Descriptor c = cn2Descriptor(bs2, makeEPSeq(bs2, {}, {0}), 1);
  CHECK(descriptorToString(a) != descriptorToString(b));
  CHECK(descriptorToString(b) != descriptorToString(c));
  CHECK(!descriptorToString(c).empty());
}
