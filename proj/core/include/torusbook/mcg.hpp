#pragma once

#include <utility>

#include "torusbook/twist_word.hpp"

namespace torusbook {

// Action of a monodromy on first homology of the punctured torus,
// with basis ([x], [y]):  x^m acts by [[1,m],[0,1]], y^m by [[1,0],[-m,1]].
// The word is read left to right and matrices multiply in reading order.
struct SL2Matrix {
  Int a = 1, b = 0, c = 0, d = 1;  // row-major [[a,b],[c,d]]

  Int trace() const { return a + d; }
  Int det() const { return a * d - b * c; }
  SL2Matrix inverse() const { return SL2Matrix{d, -b, -c, a}; }  // det = 1

  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

SL2Matrix multiply(const SL2Matrix& lhs, const SL2Matrix& rhs);

enum class DynamicsClass { PseudoAnosov, Reducible, Periodic };

const char* dynamics_name(DynamicsClass c);

SL2Matrix rep_of_word(const TwistWord& word);

// |trace| > 2 pseudo-Anosov, = 2 reducible (including the identity),
// < 2 periodic.
DynamicsClass dynamics_class(const TwistWord& word);
DynamicsClass dynamics_of_trace(const Int& trace);

// Complete equality oracle for the boundary-fixing mapping class group.
// The group is <x, y | xyx = yxy> (a braid group on three strands); its
// homology representation onto SL(2,Z) has kernel the infinite cyclic
// center generated by the boundary twist d = (xy)^6, and d has exponent
// sum 12 != 0, so the pair (matrix, exponent sum) separates elements.
bool equal_in_mcg(const TwistWord& a, const TwistWord& b);

// The pair (trace, exponent sum); invariant under every open-book
// preserving move used by the normal-form pipeline.
std::pair<Int, Int> open_book_invariants(const TwistWord& word);

}  // namespace torusbook
