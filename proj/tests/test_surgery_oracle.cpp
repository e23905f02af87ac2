#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "torusbook/floer.hpp"
#include "torusbook/surgery_oracle.hpp"

using namespace torusbook;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

IntSymMatrix grid(std::vector<std::vector<long>> rows) {
  IntSymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

}  // namespace

TEST_CASE("linking matrix for the basic family") {
  CHECK(matrix_A(ints({1})) == grid({{-3, 1, -1}, {1, 3, 2}, {-1, 2, 1}}));
  CHECK(det_exact(matrix_A(ints({1}))) == -5);
  CHECK(abs(det_exact(matrix_A(ints({2})))) == 6);
  CHECK_THROWS_AS(matrix_A(ints({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(matrix_A({}), std::invalid_argument);
}

TEST_CASE("bordered variants") {
  IntSymMatrix a1 = matrix_A(ints({1}));
  IntSymMatrix minus = matrix_bordered(a1, -1);
  REQUIRE(minus.size() == 4);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(minus.at(3, j) == 1);
    CHECK(minus.at(j, 3) == 1);
  }
  CHECK(minus.at(3, 3) == -1);
  CHECK(det_exact(minus) == 6);

  IntSymMatrix zero = matrix_bordered(a1, 0);
  CHECK(zero.at(3, 3) == 0);
  CHECK(abs(det_exact(zero)) == 1);

  CHECK_THROWS_AS(matrix_bordered(a1, 2), std::invalid_argument);
}

TEST_CASE("exact determinants") {
  CHECK(det_exact(grid({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(det_exact(grid({{2, 1}, {1, 2}})) == 3);
  CHECK(det_exact(grid({{0, 1}, {1, 0}})) == -1);
  CHECK(det_exact(grid({{0, 0}, {0, 5}})) == 0);
  CHECK(det_exact(IntSymMatrix(0)) == 1);
}

TEST_CASE("fraction-free elimination matches cofactor expansion") {
  testing::WordGen gen(404);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    IntSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m.set(i, j, gen.integer(-5, 5));
    }
    CHECK(det_exact(m) == testing::det_cofactor(m));
  }
  for (const auto& b : testing::all_b_vectors(3, 3)) {
    IntSymMatrix a = matrix_A(b);
    CHECK(det_exact(a) == testing::det_cofactor(a));
    IntSymMatrix bm = matrix_bordered(a, -1);
    CHECK(det_exact(bm) == testing::det_cofactor(bm));
  }
}

TEST_CASE("reduction matrices C and D") {
  CHECK(matrix_D(ints({4})) == grid({{5}}));
  CHECK(matrix_C(ints({4})) == grid({{8}}));
  CHECK(matrix_D(ints({1, 1})) == grid({{2, 1}, {1, 3}}));
  CHECK(det_exact(matrix_D(ints({1, 1}))) == 5);

  // det D(b1, b2) = b1 b2 + b1 + 2 b2 + 1
  for (long b1 = 0; b1 <= 4; ++b1) {
    for (long b2 = 0; b2 <= 4; ++b2) {
      CHECK(det_exact(matrix_D(ints({b1, b2}))) == b1 * b2 + b1 + 2 * b2 + 1);
    }
  }

  // det A = -det C
  for (const auto& b : testing::all_b_vectors(4, 3)) {
    CHECK(verify_A_equals_minus_C(b));
  }
}

TEST_CASE("homology sum identity") {
  CHECK(verify_h1_sum(ints({1})));
  CHECK(verify_h1_sum(ints({2})));
  CHECK(verify_h1_sum(ints({1, 1})));
  for (const auto& b : testing::all_b_vectors(4, 3)) {
    CHECK(verify_h1_sum(b));
  }
}

TEST_CASE("companion triangle identity, recorded outcomes") {
  // Modeling |H1(Q(c))| as |det bordered(A(c), 0)| does not satisfy the
  // triangle identity: that quantity is insensitive to the last parameter
  // (recorded below), so the companion manifolds' parameters must be
  // shifted relative to A's. Outcomes are recorded, not asserted as a
  // property of the model.
  CHECK_FALSE(verify_claim_q(ints({1, 1})));
  CHECK_FALSE(verify_claim_q(ints({2, 1})));
  CHECK_FALSE(verify_claim_q(ints({1, 1, 1})));

  auto q = [](const std::vector<Int>& c) {
    return Int(abs(det_exact(matrix_bordered(matrix_A(c), 0))));
  };
  CHECK(q(ints({1, 1})) == 3);
  CHECK(q(ints({1, 2})) == 3);
  CHECK(q(ints({1, 3})) == 3);
  CHECK(q(ints({2, 1})) == 4);
  CHECK(q(ints({2, 5})) == 4);

  CHECK_THROWS_AS(verify_claim_q(ints({1})), std::invalid_argument);
}

TEST_CASE("D determinant recursion, positivity, monotonicity") {
  // det D(1,1) = det D(2) + 1 * det D(1) = 3 + 2
  CHECK(det_exact(matrix_D(ints({2}))) == 3);
  CHECK(det_exact(matrix_D(ints({1}))) == 2);
  CHECK(verify_D_recursion(ints({1, 1})));
  CHECK(verify_D_positivity(ints({0, 0, 0})));
  CHECK(det_exact(matrix_D(ints({0, 0, 0}))) == 1);
  for (const auto& b : testing::all_b_vectors(4, 3)) {
    CHECK(verify_D_positivity(b));
    if (b.size() >= 2) {
      CHECK(verify_D_recursion(b));
      CHECK(verify_D_monotonicity(b));
    }
  }
}

TEST_CASE("C determinants positive and increasing") {
  CHECK(det_exact(matrix_C(ints({1}))) == 5);
  CHECK(det_exact(matrix_C(ints({2}))) == 6);
  CHECK(verify_C_positive_increasing(ints({1})));
  for (const auto& b : testing::all_b_vectors(4, 3)) {
    CHECK(verify_C_positive_increasing(b));
  }
}

TEST_CASE("identity sweep emits machine-parsable lines") {
  std::ostringstream out;
  CHECK(run_identity_sweep(2, 2, out));
  std::istringstream in(out.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    auto first = line.find('\t');
    auto second = line.find('\t', first + 1);
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    CHECK(line.find('\t', second + 1) == std::string::npos);
    std::string status = line.substr(second + 1);
    CHECK(status == "pass");
    CHECK(line.substr(first + 1, second - first - 1).rfind("b=", 0) == 0);
  }
  CHECK(lines > 0);
}
