#include <doctest.h>

#include "test_util.hpp"
#include "torusbook/normal_form.hpp"

using namespace torusbook;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

void check_same_invariants(const TwistWord& a, const TwistWord& b) {
  CHECK(open_book_invariants(a) == open_book_invariants(b));
}

}  // namespace

TEST_CASE("x power identity") {
  CHECK(x_power_identity(1) == parse_word("d^-1 x y x y x y x y x y^2 x y"));
  CHECK(equal_in_mcg(x_power_identity(1), parse_word("x")));
  CHECK(equal_in_mcg(x_power_identity(0), TwistWord{}));
  CHECK(equal_in_mcg(x_power_identity(-2), parse_word("x^-2")));
  for (long m = -6; m <= 6; ++m) {
    CHECK(equal_in_mcg(x_power_identity(m), single_twist(Generator::X, m)));
  }
}

TEST_CASE("to_m_form worked examples") {
  CHECK(to_m_form(parse_word("x^3 y^4")) == MForm{-1, ints({2, 2, 5, 6})});
  CHECK(to_m_form(parse_word("x^2 y^-1 x^4 y^3")) == MForm{-1, ints({4, 1, 6, 5})});
  CHECK(to_m_form(TwistWord{}) == MForm{0, {}});
  CHECK(to_m_form(parse_word("y^-4")) == MForm{-1, ints({2, 2, 2, -2})});
  CHECK(to_m_form(parse_word("y^2 x^3")) == MForm{-1, ints({2, 4, 5, 2})});
}

TEST_CASE("to_m_form preserves open book invariants") {
  testing::WordGen gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    TwistWord u = gen.random_word(16, 6, true);
    check_same_invariants(u, expand_to_word(to_m_form(u)));
  }
}

TEST_CASE("word moves") {
  MForm base{0, ints({5, 1, 7})};
  CHECK(apply_move(base, {2, 1}) == MForm{0, ints({6, 8})});
  CHECK(apply_move(MForm{0, ints({2, 2, 2, 2})}, {3, 0}) == MForm{1, {}});
  CHECK(apply_move(MForm{0, ints({5, 3, 6})}, {6, 1}) == MForm{0, ints({2, 2, 4, 5})});
  CHECK(apply_move(MForm{3, ints({4, 5, 6})}, {1, 1}) == MForm{3, ints({5, 6, 4})});
  CHECK(apply_move(MForm{0, ints({7, 2, 5})}, {4, 1, 3}) == MForm{0, ints({10, 2, 2})});
  CHECK(apply_move(MForm{0, ints({4, 2, 2, 9})}, {5, 1}) == MForm{0, ints({2, 2, 4, 9})});

  CHECK_THROWS_AS(apply_move(base, MoveSpec{2, 0}), MoveError);      // entry is 5, not 1
  CHECK_THROWS_AS(apply_move(base, MoveSpec{2, 9}), MoveError);      // out of range
  CHECK_THROWS_AS(apply_move(MForm{0, ints({3})}, MoveSpec{6, 0}), MoveError);
  CHECK_THROWS_AS(apply_move(MForm{0, ints({2, 2, 2})}, MoveSpec{3, 0}), MoveError);
  CHECK_THROWS_AS(apply_move(base, MoveSpec{7, 0}), MoveError);
}

TEST_CASE("interior moves are exact mapping class relations") {
  // Applied away from the ends, moves 2-6 do not rotate the word, so the
  // homology matrices agree exactly (not merely up to conjugation).
  auto exact = [](const MForm& before, const MForm& after) {
    CHECK(rep_of_word(expand_to_word(before)) == rep_of_word(expand_to_word(after)));
    CHECK(exponent_sum(expand_to_word(before)) == exponent_sum(expand_to_word(after)));
  };
  MForm m2{2, ints({6, 1, 9, 4})};
  exact(m2, apply_move(m2, {2, 1}));
  MForm m3{0, ints({5, 2, 2, 2, 2, 8})};
  exact(m3, apply_move(m3, {3, 1}));
  MForm m4{-1, ints({6, 2, 9, 4})};
  exact(m4, apply_move(m4, {4, 1, 5}));
  MForm m5{0, ints({5, 2, 2, 8})};
  exact(m5, apply_move(m5, {5, 1}));
  MForm m6{1, ints({5, 3, 6})};
  exact(m6, apply_move(m6, {6, 1}));
}

TEST_CASE("moves preserve open book invariants with cyclic wrap") {
  auto same = [](const MForm& before, const MForm& after) {
    check_same_invariants(expand_to_word(before), expand_to_word(after));
  };
  MForm wrap2{0, ints({1, 5, 7})};
  same(wrap2, apply_move(wrap2, {2, 0}));
  MForm wrap6{0, ints({3, 5, 6})};
  same(wrap6, apply_move(wrap6, {6, 0}));
  MForm wrap6b{2, ints({9, 4, 3})};
  same(wrap6b, apply_move(wrap6b, {6, 2}));
  MForm two6{0, ints({5, 3})};
  same(two6, apply_move(two6, {6, 1}));
  MForm rot{1, ints({2, 7, -4})};
  same(rot, apply_move(rot, {1, 2}));
  MForm wrap3{0, ints({2, 2, 9, 6, 2, 2})};
  same(wrap3, apply_move(wrap3, {3, 4}));
}

TEST_CASE("to_p_form worked examples") {
  CHECK(to_p_form(MForm{5, ints({4, 7})}) == MForm{4, ints({3, 6, 3, 9})});
  CHECK(to_p_form(MForm{0, ints({1, 1})}) == MForm{-1, ints({3, 3, 3, 3})});
  CHECK(to_p_form(MForm{0, {}}) == MForm{0, {}});
  CHECK(to_p_form(MForm{-2, ints({5, 8, 4, 6})}) ==
        MForm{-4, ints({3, 7, 3, 10, 3, 6, 3, 8})});

  MForm zeros = to_p_form(MForm{0, ints({0, 0})});
  for (const Int& e : zeros.b) CHECK(e >= 3);
  check_same_invariants(expand_to_word(MForm{0, ints({0, 0})}), expand_to_word(zeros));
  CHECK(rep_of_word(expand_to_word(zeros)).trace() == 2);
}

TEST_CASE("to_p_form handles odd lists, deep negatives, and random forms") {
  testing::WordGen gen(47);

  MForm odd{0, ints({5})};
  MForm odd_p = to_p_form(odd);
  for (const Int& e : odd_p.b) CHECK(e >= 3);
  check_same_invariants(expand_to_word(odd), expand_to_word(odd_p));

  MForm deep{0, ints({-40, 4})};
  MForm deep_p = to_p_form(deep);
  for (const Int& e : deep_p.b) CHECK(e >= 3);
  check_same_invariants(expand_to_word(deep), expand_to_word(deep_p));
  CHECK(deep_p.b.size() < 200);  // raised entry-by-entry, not by doubling

  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Int> b;
    int n = gen.integer(0, 8);
    for (int i = 0; i < n; ++i) b.emplace_back(gen.integer(-7, 9));
    MForm form{Int(gen.integer(-3, 3)), b};
    MForm p = to_p_form(form);
    for (const Int& e : p.b) CHECK(e >= 3);
    check_same_invariants(expand_to_word(form), expand_to_word(p));
  }
}

TEST_CASE("reduce_six worked examples") {
  CHECK(reduce_six(MForm{0, ints({4, 5, 6})}) == SixType{SixVariant::T1, 0, ints({4, 5, 6})});
  CHECK(reduce_six(MForm{0, ints({3, 5})}) == SixType{SixVariant::T6, 0, ints({3})});
  CHECK(reduce_six(MForm{0, ints({4, 3, 4})}) == SixType{SixVariant::T5, 1, ints({1})});
  CHECK(reduce_six(MForm{0, ints({3, 3, 3})}) == SixType{SixVariant::T4, 0, ints({2})});
  CHECK(reduce_six(MForm{0, ints({2, 2, 3, 3, 3})}) == SixType{SixVariant::T3, 1, ints({2})});
  CHECK(reduce_six(MForm{2, {}}) == SixType{SixVariant::T1, 2, {}});
  CHECK(reduce_six(MForm{0, ints({2, 2, 4, 5})}) == SixType{SixVariant::T2, 0, ints({4, 5})});
  CHECK(reduce_six(MForm{0, ints({3})}) == SixType{SixVariant::T5, 0, ints({3})});
  CHECK(reduce_six(MForm{0, ints({2, 2, 3})}) == SixType{SixVariant::T6, 0, ints({3})});
  CHECK_THROWS_AS(reduce_six(MForm{0, ints({4, 1})}), std::invalid_argument);
}

TEST_CASE("reduce_six preserves invariants and lands in a valid six type") {
  testing::WordGen gen(61);
  for (int trial = 0; trial < 200; ++trial) {
    TwistWord u = gen.random_word(12, 5);
    MForm p = to_p_form(to_m_form(u));
    SixType six = reduce_six(p);
    check_same_invariants(u, expand_to_word(six));
    switch (six.variant) {
      case SixVariant::T1:
      case SixVariant::T2:
        for (const Int& e : six.p) CHECK(e >= 4);
        break;
      case SixVariant::T3:
      case SixVariant::T4:
        REQUIRE(six.p.size() == 1);
        CHECK(six.p[0] >= 2);
        break;
      case SixVariant::T5:
      case SixVariant::T6:
        REQUIRE(six.p.size() == 1);
        CHECK(six.p[0] >= 1);
        break;
    }
  }
}

TEST_CASE("to_canonical substitution table") {
  CHECK(to_canonical({SixVariant::T3, 0, ints({2})}) ==
        CanonicalType(CanonicalVariant::D, 0, 0));
  CHECK(to_canonical({SixVariant::T6, 0, ints({1})}) ==
        CanonicalType(CanonicalVariant::E, 1, -3));
  CHECK(to_canonical({SixVariant::T1, 0, ints({5, 5})}) ==
        CanonicalType(CanonicalVariant::A, 1, ints({1, 1}), ints({1, 1})));
  CHECK(to_canonical({SixVariant::T5, 0, ints({1})}) ==
        CanonicalType(CanonicalVariant::F, 0, -3));
  CHECK(to_canonical({SixVariant::T5, 0, ints({4})}) ==
        CanonicalType(CanonicalVariant::D, 0, -1));
  CHECK(to_canonical({SixVariant::T5, 0, ints({9})}) ==
        CanonicalType(CanonicalVariant::B, 0, ints({5}), ints({1})));
  CHECK(to_canonical({SixVariant::T6, 0, ints({4})}) ==
        CanonicalType(CanonicalVariant::C, 1, -1));
  CHECK(to_canonical({SixVariant::T6, 0, ints({9})}) ==
        CanonicalType(CanonicalVariant::A, 1, ints({5}), ints({1})));
  CHECK(to_canonical({SixVariant::T4, 2, ints({6})}) ==
        CanonicalType(CanonicalVariant::C, 3, 4));
  // All p = 4 collapses to the reducible types.
  CHECK(to_canonical({SixVariant::T1, 0, ints({4, 4})}) ==
        CanonicalType(CanonicalVariant::C, 1, -2));
  CHECK(to_canonical({SixVariant::T1, 0, ints({4, 4, 4})}) ==
        CanonicalType(CanonicalVariant::D, 1, -3));
  CHECK(to_canonical({SixVariant::T2, 0, {}}) == CanonicalType(CanonicalVariant::D, 0, 0));
  // Zero x powers merge the adjacent y^-1 factors.
  CHECK(to_canonical({SixVariant::T1, 0, ints({4, 6, 4, 4})}) ==
        CanonicalType(CanonicalVariant::A, 2, ints({2}), ints({4})));
  CHECK_THROWS_AS(to_canonical({SixVariant::T3, 0, ints({1})}), std::invalid_argument);
}

TEST_CASE("to_canonical preserves invariants from random pipelines") {
  testing::WordGen gen(71);
  for (int trial = 0; trial < 200; ++trial) {
    TwistWord u = gen.random_word(12, 5);
    SixType six = reduce_six(to_p_form(to_m_form(u)));
    CanonicalType ct = to_canonical(six);
    check_same_invariants(u, expand_to_word(ct));
  }
}

TEST_CASE("normalize worked examples") {
  CHECK(normalize(parse_word("y x^5")).variant() == CanonicalVariant::B);
  CHECK(rep_of_word(parse_word("y x^5")).trace() == -3);
  CHECK(normalize(TwistWord{}) == CanonicalType(CanonicalVariant::C, 0, 0));
  CHECK(normalize(parse_word("y^-4")) == CanonicalType(CanonicalVariant::C, 0, -4));
  CHECK(normalize(parse_word("y^7")) == CanonicalType(CanonicalVariant::C, 0, 7));
  CHECK(normalize(parse_word("d^3")) == CanonicalType(CanonicalVariant::C, 3, 0));
  CHECK(normalize(parse_word("w")) == CanonicalType(CanonicalVariant::D, 0, 0));
  CHECK(normalize(parse_word("w y^-2")) == CanonicalType(CanonicalVariant::D, 0, -2));
  CHECK(normalize(parse_word("d x y^-1")) ==
        CanonicalType(CanonicalVariant::A, 1, ints({1}), ints({1})));
  CHECK(normalize(parse_word("x y^-1")) ==
        CanonicalType(CanonicalVariant::A, 0, ints({1}), ints({1})));
}

TEST_CASE("normalize recovers the boundary-twist exponent exactly") {
  // Pairs with the same (trace, exponent sum) but different canonical d,
  // where the classification would flip.
  CHECK(normalize(parse_word("d x y^-7")) ==
        CanonicalType(CanonicalVariant::A, 1, ints({1}), ints({7})));
  CHECK(normalize(parse_word("x^7 y^-1")) ==
        CanonicalType(CanonicalVariant::A, 0, ints({7}), ints({1})));
  CHECK(normalize(parse_word("y^12")) == CanonicalType(CanonicalVariant::C, 0, 12));
  CHECK(normalize(parse_word("d")) == CanonicalType(CanonicalVariant::C, 1, 0));
  CHECK(normalize(parse_word("d y^-100")) == CanonicalType(CanonicalVariant::C, 1, -100));
  CHECK(normalize(parse_word("d^-1 w y^10")) == CanonicalType(CanonicalVariant::D, -1, 10));
  CHECK(normalize(parse_word("d^-2 x^2 y^-5")) ==
        CanonicalType(CanonicalVariant::A, -2, ints({2}), ints({5})));
  CHECK(normalize(parse_word("d^2 x^-1 y^-1")) == CanonicalType(CanonicalVariant::E, 2, -1));
  CHECK(normalize(parse_word("d^2 w x^3 y^-2 x y^-1")) ==
        CanonicalType(CanonicalVariant::B, 2, ints({1, 3}), ints({1, 2})));
}

TEST_CASE("huge exponents stay exact") {
  Int big("123456789012345678901234567890");
  TwistWord word = concat(single_twist(Generator::X, big), single_twist(Generator::Y, -1));
  CHECK(exponent_sum(word) == big - 1);
  CHECK(rep_of_word(word).trace() == big + 2);
  CanonicalType ct = normalize(word);
  CHECK(ct == CanonicalType(CanonicalVariant::A, 0, {big}, {Int(1)}));
  CHECK(parse_word("x^123456789012345678901234567890 y^-1") == word);
}

TEST_CASE("normalize: trace law, invariants, idempotence") {
  testing::WordGen gen(2024);
  for (int trial = 0; trial < 300; ++trial) {
    TwistWord u = gen.random_word(14, 6, true);
    CanonicalType ct = normalize(u);
    TwistWord expanded = expand_to_word(ct);
    check_same_invariants(u, expanded);

    Int trace = rep_of_word(u).trace();
    switch (ct.variant()) {
      case CanonicalVariant::A: CHECK(trace > 2); break;
      case CanonicalVariant::B: CHECK(trace < -2); break;
      case CanonicalVariant::C: CHECK(trace == 2); break;
      case CanonicalVariant::D: CHECK(trace == -2); break;
      default: CHECK(abs(trace) < 2); break;
    }
    CHECK(dynamics_of(ct) == dynamics_class(u));

    CHECK(normalize(expanded) == ct);
  }
}

TEST_CASE("expand_to_word shapes") {
  CHECK(expand_to_word(MForm{1, ints({2})}) == parse_word("d x y^2"));
  CHECK(expand_to_word(CanonicalType(CanonicalVariant::A, 0, ints({1}), ints({1}))) ==
        parse_word("x y^-1"));
  CHECK(expand_to_word(CanonicalType(CanonicalVariant::D, 0, -1)) == parse_word("w y^-1"));
  CHECK(expand_to_word(SixType{SixVariant::T4, 0, ints({3})}) == parse_word("x y^2 x y^2 x y^2 x y^3"));
  CHECK(expand_to_word(SixType{SixVariant::T6, 1, ints({1})}) == parse_word("d x y^2 x y^2 x y"));
}

TEST_CASE("canonical type validation") {
  CHECK_THROWS_AS(CanonicalType(CanonicalVariant::E, 0, -4), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalType(CanonicalVariant::F, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalType(CanonicalVariant::A, 0, ints({0}), ints({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(CanonicalType(CanonicalVariant::B, 0, ints({1}), ints({-1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(CanonicalType(CanonicalVariant::A, 0, ints({1}), ints({1, 2})),
                  std::invalid_argument);
}
