#include "torusbook/floer.hpp"

#include <set>
#include <stdexcept>

#include "torusbook/mcg.hpp"

namespace torusbook {

const char* lspace_name(LSpaceStatus s) {
  switch (s) {
    case LSpaceStatus::LSpace: return "L-space";
    case LSpaceStatus::NotLSpace: return "not an L-space";
    case LSpaceStatus::OutOfScope: return "out of scope";
  }
  return "?";
}

Rational hopf_invariant_B(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || a.size() != b.size()) {
    throw std::invalid_argument("hopf_invariant_B needs equal-length nonempty lists");
  }
  bool some_a = false, some_b = false;
  Int diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || b[i] < 0) {
      throw std::invalid_argument("hopf_invariant_B needs nonnegative entries");
    }
    if (a[i] != 0) some_a = true;
    if (b[i] != 0) some_b = true;
    diff += b[i] - a[i];
  }
  if (!some_a || !some_b) {
    throw std::invalid_argument("hopf_invariant_B needs a nonzero a and a nonzero b entry");
  }
  return Rational(-1) + make_rational(diff, 4);
}

std::vector<Rational> lens_gradings(const Int& m) {
  if (m < 1) throw std::invalid_argument("lens_gradings needs m >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(checked_long(m, "lens_gradings")));
  for (Int j = 0; j < m; ++j) {
    Int t = 2 * j - m;
    out.push_back(make_rational(t * t - m, 4 * m));
  }
  return out;
}

Rational grading_shift(const Rational& c1_sq, const Int& sigma, const Int& chi) {
  Rational q = (c1_sq - Rational(3 * sigma) - Rational(2 * chi)) / Rational(4);
  q.canonicalize();
  return q;
}

Rational c1_squared(const Int& m, const Int& a, const Int& b) {
  if (m < 1) throw std::invalid_argument("c1_squared needs m >= 1");
  if ((a - m) % 2 != 0) {
    throw std::invalid_argument("characteristic vector needs a = m (mod 2)");
  }
  if (is_even(b)) {
    throw std::invalid_argument("characteristic vector needs b odd");
  }
  return make_rational(a * a - 4 * a * b - m * b * b, m + 4);
}

bool step3_obstruction(const Int& m, const Int& bound) {
  if (m < 1 || is_even(m)) throw std::invalid_argument("step3_obstruction needs odd m >= 1");
  if (bound < 1) throw std::invalid_argument("step3_obstruction needs bound >= 1");

  // The mod-4 argument: the equation forces 4 | m^2 b^2 with b odd, which
  // fails for every odd m.
  for (long mr : {1L, 3L}) {
    for (long br : {1L, 3L}) {
      if ((mr * mr * br * br) % 4 == 0) return false;
    }
  }

  // Brute force. Clearing denominators, a solution (j, a, b) satisfies
  //   (m+4)((2j-m)^2 - m) + (-m^2 b^2 - 4abm - 4a^2) = m(m+4)(m-5).
  std::set<Int> targets;
  for (Int j = 0; j < m; ++j) {
    Int t = 2 * j - m;
    targets.insert(m * (m + 4) * (m - 5) - (m + 4) * (t * t - m));
  }
  Int a_start = -bound;
  if ((a_start - m) % 2 != 0) a_start += 1;
  Int b_start = -bound;
  if (is_even(b_start)) b_start += 1;
  for (Int a = a_start; a <= bound; a += 2) {
    for (Int b = b_start; b <= bound; b += 2) {
      Int delta = -m * m * b * b - 4 * a * b * m - 4 * a * a;
      if (targets.count(delta)) return false;
    }
  }
  return true;
}

LSpaceStatus is_l_space(const CanonicalType& ct) {
  switch (ct.variant()) {
    case CanonicalVariant::A:
      return ct.d() == 0 ? LSpaceStatus::LSpace : LSpaceStatus::NotLSpace;
    case CanonicalVariant::B:
      return (ct.d() == 0 || ct.d() == -1) ? LSpaceStatus::LSpace : LSpaceStatus::NotLSpace;
    default:
      return LSpaceStatus::OutOfScope;
  }
}

Int h1_closed_form(const std::vector<Int>& b) {
  if (b.empty()) throw std::invalid_argument("h1_closed_form needs a nonempty list");
  bool some = false;
  for (const Int& e : b) {
    if (e < 0) throw std::invalid_argument("h1_closed_form needs nonnegative entries");
    if (e != 0) some = true;
  }
  if (!some) throw std::invalid_argument("h1_closed_form needs a nonzero entry");

  // sigma[i] after processing j entries holds the i-th elementary
  // symmetric polynomial of those entries.
  const std::size_t n = b.size();
  std::vector<Int> sigma(n + 1);
  sigma[0] = 1;
  std::size_t used = 0;
  for (const Int& e : b) {
    ++used;
    for (std::size_t i = used; i >= 1; --i) {
      sigma[i] += sigma[i - 1] * e;
    }
  }
  Int total = 4;
  for (std::size_t i = 1; i <= n; ++i) {
    total += Int(static_cast<long>(n - i + 1)) * sigma[i];
  }
  return total;
}

Int h1_order_from_trace(const Int& trace) { return abs(Int(2) - trace); }

std::string homology_sphere_text(const Int& h1, LSpaceStatus status) {
  if (h1 == 1 && status == LSpaceStatus::LSpace) {
    return "integer homology sphere L-space: can only be S^3 or +-Sigma(2,3,5) "
           "(surgery on a trefoil)";
  }
  return "not an integer homology sphere in scope (|H_1| = " + h1.get_str() + ")";
}

std::string integer_homology_sphere_report(const CanonicalType& ct) {
  if (ct.variant() != CanonicalVariant::B || (ct.d() != 0 && ct.d() != -1)) {
    throw std::invalid_argument("report covers type B with d in {-1, 0}");
  }
  Int trace = rep_of_word(expand_to_word(ct)).trace();
  return homology_sphere_text(h1_order_from_trace(trace), is_l_space(ct));
}

}  // namespace torusbook
