#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "torusbook/normal_form.hpp"

namespace torusbook {

// Tight / overtwisted decision for the contact structure compatible with
// the open book, decided from the canonical type:
//   A tight iff d >= 1        B tight iff d >= 0
//   C tight iff d > 0 or (d = 0 and m >= 0)
//   D tight iff d >= 0        E tight iff d >= 1      F tight iff d >= 0

// A word of strictly right-handed twists presenting the same open book;
// witnesses Stein fillability, hence tightness.
struct SteinWord {
  TwistWord word;
};

// Records the induction used when no single positive word is produced:
// a Stein-fillable base open book, the number of surgery-triangle
// injectivity steps that raise the negative twisting to the target, and
// the number of positive twists appended afterwards. grading_argument
// marks the cases that additionally need the absolute-grading obstruction.
struct InvariantChain {
  TwistWord base;
  Int lspace_steps = 0;
  Int naturality_steps = 0;
  bool grading_argument = false;
};

// Arc certificate for overtwistedness: in the expanded word every twist
// about `curve` is left-handed, so an arc crossing `curve` once has
// intersection data (i_alg, i_geom, i_delta) summing to <= 0.
struct SoberingForm {
  Generator curve;
  std::array<Int, 3> triple;  // (i_alg, i_geom, i_delta)
};

using Certificate = std::variant<SteinWord, InvariantChain, SoberingForm>;

enum class TightnessStatus { Tight, Overtwisted };

struct Verdict {
  TightnessStatus status;
  Certificate certificate;
};

Verdict decide(const CanonicalType& ct);

// The sobering certificate for an overtwisted canonical type; throws on
// tight input.
SoberingForm sobering_certificate(const CanonicalType& ct);

// A positive word presenting the same open book, when one of the
// implemented rewritings reaches one:
//   - the canonical expansion is already positive (C/D with d, m >= 0)
//   - B(0; a1; 1) = the lens family, giving y x^{a1+4}
//   - E with d >= 1, giving d^{d-1} y x^2 y x^2 y x^{4+m}
//   - F with d >= 0, giving d^d y x^{4+m}
std::optional<SteinWord> stein_witness(const CanonicalType& ct);

// Exponent-sum obstruction: a product of right-handed twists about
// non-separating curves has positive exponent sum, so sum <= 0 proves the
// word is not such a product. Returns true when obstructed; false is
// inconclusive.
bool dehn_obstruction(const TwistWord& word);

// True when the monodromy is tight but provably not a product of
// right-handed Dehn twists (the d^k w x^{a_1} y^{-b_1}... family with
// 6 + 12k + sum(a) <= sum(b), and any tight word of nonpositive
// exponent sum).
bool tight_minus_dehn(const CanonicalType& ct);

const char* tightness_name(TightnessStatus s);
std::string format_certificate(const Certificate& c);

}  // namespace torusbook
