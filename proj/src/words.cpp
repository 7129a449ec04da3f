#include "bsp/words.hpp"

#include <cctype>

namespace bsp {

namespace {

void skipSpace(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

Int parseInt(const std::string& s, size_t& pos) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = (s[pos] == '-');
    ++pos;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    fail(ErrorCode::Syntax, "expected an integer at position " + std::to_string(start));
  Int value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + (s[pos] - '0');
    ++pos;
  }
  return neg ? Int(-value) : value;
}

}  // namespace

Word parseWord(const std::string& text) {
  Word out;
  size_t pos = 0;
  skipSpace(text, pos);
  if (pos < text.size() && text[pos] == 'e') {
    size_t probe = pos + 1;
    skipSpace(text, probe);
    if (probe == text.size()) return out;  // identity
  }
  while (pos < text.size()) {
    skipSpace(text, pos);
    if (pos == text.size()) break;
    char g = text[pos];
    if (g != 'a' && g != 'b')
      fail(ErrorCode::Syntax, std::string("unexpected character '") + g + "' at position " +
                                  std::to_string(pos));
    ++pos;
    Int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parseInt(text, pos);
    }
    if (g == 'a' && exp < 0)
      fail(ErrorCode::NegativeAExponent, "a^" + exp.str() + " is not a monoid word");
    // Syllables are kept exactly as written: merging b^-1 b to the empty
    // word would change which prefixes the membership check sees.
    if (exp == 0) continue;
    out.push_back(Token{g, exp});
  }
  return out;
}

std::string wordToString(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Token& t : w) {
    out += t.gen;
    if (t.exp != 1) out += "^" + t.exp.str();
  }
  return out;
}

Word reversedWord(const Word& w) {
  Word out(w.rbegin(), w.rend());
  return out;
}

}  // namespace bsp
