#include "torusbook/mcg.hpp"

namespace torusbook {

SL2Matrix multiply(const SL2Matrix& lhs, const SL2Matrix& rhs) {
  return SL2Matrix{lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                   lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

const char* dynamics_name(DynamicsClass c) {
  switch (c) {
    case DynamicsClass::PseudoAnosov: return "pseudo-Anosov";
    case DynamicsClass::Reducible: return "reducible";
    case DynamicsClass::Periodic: return "periodic";
  }
  return "?";
}

SL2Matrix rep_of_word(const TwistWord& word) {
  SL2Matrix acc;
  for (const Letter& l : word.letters()) {
    SL2Matrix gen = l.gen == Generator::X ? SL2Matrix{1, l.exp, 0, 1}
                                          : SL2Matrix{1, 0, -l.exp, 1};
    acc = multiply(acc, gen);
  }
  return acc;
}

DynamicsClass dynamics_of_trace(const Int& trace) {
  Int t = abs(trace);
  if (t > 2) return DynamicsClass::PseudoAnosov;
  if (t == 2) return DynamicsClass::Reducible;
  return DynamicsClass::Periodic;
}

DynamicsClass dynamics_class(const TwistWord& word) {
  return dynamics_of_trace(rep_of_word(word).trace());
}

bool equal_in_mcg(const TwistWord& a, const TwistWord& b) {
  return exponent_sum(a) == exponent_sum(b) && rep_of_word(a) == rep_of_word(b);
}

std::pair<Int, Int> open_book_invariants(const TwistWord& word) {
  return {rep_of_word(word).trace(), exponent_sum(word)};
}

}  // namespace torusbook
