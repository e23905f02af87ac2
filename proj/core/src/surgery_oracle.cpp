#include "torusbook/surgery_oracle.hpp"

#include <stdexcept>

#include "torusbook/floer.hpp"

namespace torusbook {

IntSymMatrix::IntSymMatrix(std::size_t size) : size_(size), entries_(size * size) {}

const Int& IntSymMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_) throw std::out_of_range("matrix index");
  return entries_[i * size_ + j];
}

void IntSymMatrix::set(std::size_t i, std::size_t j, const Int& v) {
  if (i >= size_ || j >= size_) throw std::out_of_range("matrix index");
  entries_[i * size_ + j] = v;
  entries_[j * size_ + i] = v;
}

namespace {

void require_b(const std::vector<Int>& b, bool need_nonzero) {
  if (b.empty()) throw std::invalid_argument("empty parameter list");
  bool some = false;
  for (const Int& e : b) {
    if (e < 0) throw std::invalid_argument("parameters must be nonnegative");
    if (e != 0) some = true;
  }
  if (need_nonzero && !some) throw std::invalid_argument("some parameter must be nonzero");
}

// partial[j] = S_j = b_n + ... + b_{n-j+1}, 1 <= j <= n (partial[0] = 0).
std::vector<Int> partial_sums(const std::vector<Int>& b) {
  const std::size_t n = b.size();
  std::vector<Int> s(n + 1);
  for (std::size_t j = 1; j <= n; ++j) s[j] = s[j - 1] + b[n - j];
  return s;
}

std::vector<Int> bump_last(const std::vector<Int>& b) {
  std::vector<Int> out = b;
  out.back() += 1;
  return out;
}

}  // namespace

IntSymMatrix matrix_A(const std::vector<Int>& b) {
  require_b(b, true);
  const std::size_t n = b.size();
  const std::vector<Int> s = partial_sums(b);
  IntSymMatrix m(n + 2);
  m.set(0, 0, s[n] - 4);
  for (std::size_t j = 1; j <= n; ++j) m.set(0, j, s[j]);
  m.set(0, n + 1, s[n] - 2);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      m.set(i, j, s[i] + (i == j ? 2 : 1));
    }
  }
  for (std::size_t j = 1; j <= n; ++j) m.set(n + 1, j, s[j] + 1);
  m.set(n + 1, n + 1, s[n]);
  return m;
}

IntSymMatrix matrix_bordered(const IntSymMatrix& base, const Int& corner) {
  if (corner != 0 && corner != -1) {
    throw std::invalid_argument("bordered corner must be -1 or 0");
  }
  const std::size_t n = base.size();
  IntSymMatrix m(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, base.at(i, j));
    m.set(i, n, 1);
  }
  m.set(n, n, corner);
  return m;
}

IntSymMatrix matrix_C(const std::vector<Int>& b) {
  require_b(b, false);
  const std::size_t n = b.size();
  const std::vector<Int> s = partial_sums(b);
  IntSymMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      Int v;
      if (i == j) {
        v = i == n ? s[n] + 4 : s[i] + 2;
      } else {
        v = j == n ? s[i] + 2 : s[i] + 1;
      }
      m.set(i - 1, j - 1, v);
    }
  }
  return m;
}

IntSymMatrix matrix_D(const std::vector<Int>& b) {
  require_b(b, false);
  const std::size_t n = b.size();
  const std::vector<Int> s = partial_sums(b);
  IntSymMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      m.set(i - 1, j - 1, i == j ? s[i] + 1 : s[i]);
    }
  }
  return m;
}

Int det_exact(const IntSymMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = matrix.at(i, j);
  }
  // Bareiss: every division below is exact.
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool verify_h1_sum(const std::vector<Int>& b) {
  IntSymMatrix a = matrix_A(b);
  Int det_a = det_exact(a);
  Int det_m1 = det_exact(matrix_bordered(a, -1));
  Int det_0 = det_exact(matrix_bordered(a, 0));
  Int det_next = det_exact(matrix_A(bump_last(b)));
  return det_m1 + det_a == det_0 && det_m1 == -det_next &&
         abs(det_m1) == abs(det_a) + abs(det_0);
}

bool verify_claim_q(const std::vector<Int>& b) {
  if (b.size() < 2) throw std::invalid_argument("claim needs n >= 2");
  require_b(b, true);
  auto q = [](const std::vector<Int>& c) {
    return abs(det_exact(matrix_bordered(matrix_A(c), 0)));
  };
  std::vector<Int> shorter(b.begin(), b.end() - 1);
  return q(bump_last(b)) == q(b) + q(bump_last(shorter));
}

bool verify_D_recursion(const std::vector<Int>& b) {
  if (b.size() < 2) throw std::invalid_argument("recursion needs n >= 2");
  require_b(b, false);
  const std::size_t n = b.size();
  std::vector<Int> merged(b.begin(), b.end() - 2);
  merged.push_back(b[n - 1] + b[n - 2]);
  std::vector<Int> shorter(b.begin(), b.end() - 1);
  return det_exact(matrix_D(b)) ==
         det_exact(matrix_D(merged)) + b[n - 1] * det_exact(matrix_D(shorter));
}

bool verify_D_positivity(const std::vector<Int>& b) {
  require_b(b, false);
  return det_exact(matrix_D(b)) > 0;
}

bool verify_D_monotonicity(const std::vector<Int>& b) {
  if (b.size() < 2) throw std::invalid_argument("monotonicity needs n >= 2");
  require_b(b, false);
  std::vector<Int> tail(b.begin() + 1, b.end());
  return det_exact(matrix_D(b)) - det_exact(matrix_D(tail)) >= 0;
}

bool verify_C_positive_increasing(const std::vector<Int>& b) {
  require_b(b, false);
  Int here = det_exact(matrix_C(b));
  Int bumped = det_exact(matrix_C(bump_last(b)));
  return here > 0 && bumped > here;
}

bool verify_A_equals_minus_C(const std::vector<Int>& b) {
  require_b(b, true);
  return det_exact(matrix_A(b)) == -det_exact(matrix_C(b));
}

std::string format_b_vector(const std::vector<Int>& b) {
  std::string s = "b=";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += b[i].get_str();
  }
  return s;
}

bool run_identity_sweep(int nmax, int bmax, std::ostream& out) {
  if (nmax < 1 || bmax < 0) throw std::invalid_argument("sweep needs nmax >= 1, bmax >= 0");
  bool all_pass = true;
  auto emit = [&](const char* identity, const std::vector<Int>& b, bool ok) {
    out << identity << '\t' << format_b_vector(b) << '\t' << (ok ? "pass" : "fail") << '\n';
    if (!ok) all_pass = false;
  };
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Int> b(static_cast<std::size_t>(n), Int(0));
    while (true) {
      bool some = false;
      for (const Int& e : b) {
        if (e != 0) some = true;
      }
      if (some) {
        emit("closed_form", b, abs(det_exact(matrix_A(b))) == h1_closed_form(b));
        emit("h1_sum", b, verify_h1_sum(b));
        emit("a_equals_minus_c", b, verify_A_equals_minus_C(b));
      }
      emit("d_positivity", b, verify_D_positivity(b));
      emit("c_positive_increasing", b, verify_C_positive_increasing(b));
      if (n >= 2) {
        emit("d_recursion", b, verify_D_recursion(b));
        emit("d_monotonicity", b, verify_D_monotonicity(b));
      }
      // next vector
      int i = n - 1;
      while (i >= 0) {
        b[static_cast<std::size_t>(i)] += 1;
        if (b[static_cast<std::size_t>(i)] <= bmax) break;
        b[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return all_pass;
}

}  // namespace torusbook
