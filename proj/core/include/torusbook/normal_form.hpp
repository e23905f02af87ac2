#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusbook/mcg.hpp"
#include "torusbook/twist_word.hpp"

namespace torusbook {

// Normal forms for open books (S, phi) where S is the genus-one surface
// with one boundary component. Every stage of the pipeline preserves the
// open book, hence preserves (trace, exponent sum) exactly.

// M(k; b_1,...,b_n) denotes the open book d^k * x y^{b_1} * ... * x y^{b_n},
// where d is the boundary twist.
struct MForm {
  Int k;
  std::vector<Int> b;

  friend bool operator==(const MForm&, const MForm&) = default;
};

std::string format_m_form(const MForm& form);

// The six intermediate shapes the word-move iteration stops at.
// T2, T3, T4 and T6 carry implicit 2-entry prefixes:
//   T1 = M(d; p...)          all p_i >= 4
//   T2 = M(d; 2,2, p...)     all p_i >= 4
//   T3 = M(d; 2, p1)         p1 >= 2
//   T4 = M(d; 2,2,2, p1)     p1 >= 2
//   T5 = M(d; p1)            p1 >= 1
//   T6 = M(d; 2,2, p1)       p1 >= 1
enum class SixVariant { T1, T2, T3, T4, T5, T6 };

struct SixType {
  SixVariant variant;
  Int d;
  std::vector<Int> p;

  friend bool operator==(const SixType&, const SixType&) = default;
};

std::string format_six_type(const SixType& six);

// The six canonical monodromy shapes:
//   A = d^d * x^{a_1} y^{-b_1} ... x^{a_n} y^{-b_n}   (trace > 2)
//   B = d^d * w * x^{a_1} y^{-b_1} ... x^{a_n} y^{-b_n}  (trace < -2)
//   C = d^d * y^m          (trace 2)
//   D = d^d * w * y^m      (trace -2)
//   E = d^d * x^m y^{-1}   (m in {-1,-2,-3}, periodic)
//   F = d^d * w * x^m y^{-1}
enum class CanonicalVariant { A, B, C, D, E, F };

const char* canonical_variant_name(CanonicalVariant v);

class CanonicalType {
 public:
  // A/B form: entries nonnegative, some a nonzero and some b nonzero.
  CanonicalType(CanonicalVariant v, Int d, std::vector<Int> a, std::vector<Int> b);
  // C/D/E/F form; for E/F, m must lie in {-1,-2,-3}.
  CanonicalType(CanonicalVariant v, Int d, Int m);

  CanonicalVariant variant() const { return variant_; }
  const Int& d() const { return d_; }
  const std::vector<Int>& a() const { return a_; }
  const std::vector<Int>& b() const { return b_; }
  const Int& m() const { return m_; }

  bool is_pseudo_anosov() const {
    return variant_ == CanonicalVariant::A || variant_ == CanonicalVariant::B;
  }

  friend bool operator==(const CanonicalType&, const CanonicalType&) = default;

 private:
  CanonicalVariant variant_;
  Int d_;
  std::vector<Int> a_, b_;  // A/B only
  Int m_ = 0;               // C/D/E/F only
};

std::string format_canonical(const CanonicalType& ct);

// Word moves that preserve the open book:
//   1  cyclic rotation by `pos` entries
//   2  absorb an entry equal to 1 at `pos` into its neighbours
//   3  delete four consecutive 2's starting at `pos`; k increases by 1
//   4  slide `amount` past the 2 at `pos` (left neighbour gains, right loses)
//   5  move the adjacent pair (2,2) at `pos` to the front
//   6  delete the 3 at `pos`, decrement both neighbours, prepend (2,2)
// Neighbours are cyclic. Moves 2-6 require the stated entry values.
struct MoveSpec {
  int move = 1;
  std::size_t pos = 0;
  Int amount = 0;  // move 4 only
};

class MoveError : public std::runtime_error {
 public:
  MoveError(int move, std::size_t pos, const std::string& reason);
};

MForm apply_move(const MForm& form, const MoveSpec& move);

// x^m = d^{-1} * xyxyxyxyx * y^{m+1} * xy, the identity every x-power
// substitution in the pipeline rests on.
TwistWord x_power_identity(const Int& m);

// Word -> M-form, via the x-power identity applied to every syllable pair
// and compressed:  n pairs give M(-n/2; a_1+2, b_1+2, ...) for even n and
// M(-(n+1)/2; 2,2, a_1+2, b_1+2, ...) for odd n.
MForm to_m_form(const TwistWord& word);

// M-form with every entry >= 3 (the empty entry list qualifies), reached
// by repeated x-power substitutions.
MForm to_p_form(const MForm& form);

// The step iteration of the partial reduction; requires all entries >= 3,
// or such a list behind a leading (2,2).
SixType reduce_six(const MForm& form);

// Substitute the six-type into its canonical shape, re-classifying
// degenerate outputs (all-zero exponent lists collapse to C/D; single-entry
// shapes with large p re-emit as pseudo-Anosov A/B or as C/D at p = 4).
CanonicalType to_canonical(const SixType& six);

// Full pipeline.
CanonicalType normalize(const TwistWord& word);

TwistWord expand_to_word(const MForm& form);
TwistWord expand_to_word(const SixType& six);
TwistWord expand_to_word(const CanonicalType& ct);

DynamicsClass dynamics_of(const CanonicalType& ct);

}  // namespace torusbook
