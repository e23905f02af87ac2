#pragma once

#include <string>
#include <vector>

#include "torusbook/normal_form.hpp"

namespace torusbook {

// Closed-form invariant arithmetic. Everything here is exact rational
// arithmetic; the obstruction in step3_obstruction is a divisibility
// argument and would be meaningless in floating point.

enum class LSpaceStatus { LSpace, NotLSpace, OutOfScope };

const char* lspace_name(LSpaceStatus s);

// Hopf invariant of the two-plane field of the contact structure with
// monodromy w x^{a_1} y^{-b_1} ... x^{a_n} y^{-b_n}:
//   h = -1 + (1/4) * sum(b_i - a_i).
// Requires nonnegative entries with some a and some b nonzero.
Rational hopf_invariant_B(const std::vector<Int>& a, const std::vector<Int>& b);

// Absolute gradings of the m generators of the lens space L(m, 1):
// ((2j - m)^2 - m) / (4m) for 0 <= j < m.
std::vector<Rational> lens_gradings(const Int& m);

// Grading shift of a cobordism map: (c1^2 - 3*sigma - 2*chi) / 4.
Rational grading_shift(const Rational& c1_sq, const Int& sigma, const Int& chi);

// Square of the characteristic vector (a, b) on the two-handle cobordism
// with intersection form [[m,-2],[-2,-1]]: (a^2 - 4ab - m b^2) / (m + 4).
// Requires a = m (mod 2) and b odd.
Rational c1_squared(const Int& m, const Int& a, const Int& b);

// For odd m, no lens-space generator maps onto the contact class for
// grading reasons: verifies by brute force over 0 <= j < m and
// |a|, |b| <= bound (with the characteristic-vector parities) that
//   lens_grading(j) + (-m^2 b^2 - 4abm - 4a^2)/(4m(m+4)) = (m-5)/4
// has no solution, and checks the mod-4 argument (m^2 b^2 is odd for odd
// m and odd b, so it is never divisible by 4).
bool step3_obstruction(const Int& m, const Int& bound);

// L-space classification of the underlying three-manifold, keyed on the
// canonical type: A is an L-space iff d = 0, B iff d is -1 or 0; other
// pseudo-Anosov values of d carry co-orientable taut foliations. Non-pA
// types are out of scope.
LSpaceStatus is_l_space(const CanonicalType& ct);

// |H_1| of the manifold with monodromy w x y^{-b_1} x y^{-b_2} ... as the
// closed form 4 + sum_i (n - i + 1) sigma_i(b_1, ..., b_n), sigma_i the
// elementary symmetric polynomials. Requires nonnegative entries, some
// nonzero.
Int h1_closed_form(const std::vector<Int>& b);

// |H_1| of the open book's manifold: |det(phi_# - I)| = |2 - trace|,
// which is independent of boundary-twist powers (the page boundary is
// null-homologous, so all these fillings share first homology). Zero
// means infinite H_1.
Int h1_order_from_trace(const Int& trace);

// For type B with d in {-1, 0} (the L-space families), reports whether
// the manifold can be an integer homology sphere; |H_1| = |2 - trace| is
// at least 5 there, so the answer is always negative, but the branch for
// |H_1| = 1 is kept explicit.
std::string integer_homology_sphere_report(const CanonicalType& ct);

// The report text keyed on a precomputed |H_1| and L-space status.
std::string homology_sphere_text(const Int& h1, LSpaceStatus status);

}  // namespace torusbook
