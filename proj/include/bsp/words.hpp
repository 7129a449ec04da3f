#pragma once

#include <string>
#include <vector>

#include "bsp/params.hpp"

namespace bsp {

// One syllable of a word in the generators: gen is 'a' or 'b', exp its
// exponent.  b-exponents may be any integer at the word level (the monoid
// sweep decides whether they are legal); a-exponents must be positive.
struct Token {
  char gen = 'b';
  Int exp = 0;

  bool operator==(const Token& o) const { return gen == o.gen && exp == o.exp; }
};

using Word = std::vector<Token>;

// Grammar: juxtaposed atoms `a`, `b`, `a^INT`, `b^INT` with optional
// whitespace; `e` (alone) or the empty string denotes the identity.
// Negative a-exponents are rejected: every context here is a monoid context.
Word parseWord(const std::string& text);

std::string wordToString(const Word& w);

// Word with tokens reversed (each syllable kept intact).  Under the
// anti-isomorphism that reverses words, the relation a b^c = b^{±d} a maps to
// the same family with c and d exchanged.
Word reversedWord(const Word& w);

}  // namespace bsp
