#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "torusbook/numeric.hpp"

namespace torusbook {

// Words in the two Dehn-twist generators of the once-punctured torus.
// `x` and `y` are right-handed twists about dual non-separating curves;
// negative exponents are left-handed twists.

enum class Generator { X, Y };

inline char generator_char(Generator g) { return g == Generator::X ? 'x' : 'y'; }
inline Generator other_generator(Generator g) {
  return g == Generator::X ? Generator::Y : Generator::X;
}

// One syllable x^e or y^e. In a normalized word e != 0 and adjacent
// letters use distinct generators.
struct Letter {
  Generator gen;
  Int exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A free word in x, y, kept in syllable-merged form. The empty word is
// the identity monodromy. Immutable after construction; all operations
// below are pure.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Total number of single-exponent letters, i.e. sum of |exp|.
  Int unit_length() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Thrown on malformed input text; offset() is the byte position of the
// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar: tokens `x`, `y`, `d` (the boundary twist, = (xy)^6) and
// `w` (= xyxyxy), each optionally followed by `^` and a signed decimal
// integer (default exponent 1). `*` and whitespace separate tokens.
// Case-insensitive. Example: "d^-1 * x y^3 x y^-2".
TwistWord parse_word(std::string_view text);

// Inverse of parse_word on syllable-merged words.
std::string format_word(const TwistWord& word);

Int exponent_sum(const TwistWord& word);

TwistWord concat(const TwistWord& a, const TwistWord& b);
TwistWord invert(const TwistWord& a);

// Moves `positions` single-exponent letters from the front to the back,
// splitting syllables as needed; negative values rotate the other way.
TwistWord cyclic_rotate(const TwistWord& a, const Int& positions);

// The first `units` single-exponent letters as a word (used to express
// the conjugator realizing a cyclic rotation).
TwistWord prefix_units(const TwistWord& a, const Int& units);

// Building blocks.
TwistWord single_twist(Generator g, const Int& exp);
TwistWord delta_power(const Int& k);  // (xy)^{6k}
TwistWord w_power(const Int& k);      // (xyxyxy)^k

bool all_exponents_positive(const TwistWord& word);

}  // namespace torusbook
