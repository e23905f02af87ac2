#include "torusbook/twist_word.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace torusbook {

long checked_long(const Int& n, const char* context) {
  if (!n.fits_slong_p()) {
    throw std::length_error(std::string(context) + ": value does not fit in a machine word");
  }
  return n.get_si();
}

namespace {

// Largest number of single letters a sugar token (d, w) may expand to.
constexpr long kMaxExpansionUnits = 1L << 22;

void push_merged(std::vector<Letter>& out, Generator g, const Int& exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == g) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(Letter{g, exp});
}

void push_word(std::vector<Letter>& out, const TwistWord& w) {
  for (const Letter& l : w.letters()) push_merged(out, l.gen, l.exp);
}

}  // namespace

TwistWord::TwistWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push_merged(letters_, l.gen, l.exp);
}

Int TwistWord::unit_length() const {
  Int total = 0;
  for (const Letter& l : letters_) total += abs(l.exp);
  return total;
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

TwistWord single_twist(Generator g, const Int& exp) {
  std::vector<Letter> ls;
  push_merged(ls, g, exp);
  return TwistWord(std::move(ls));
}

TwistWord delta_power(const Int& k) {
  long reps = checked_long(6 * abs(k), "delta power expansion");
  if (reps > kMaxExpansionUnits / 2) {
    throw std::length_error("delta power too large to expand into letters");
  }
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(2 * reps));
  for (long i = 0; i < reps; ++i) {
    if (k > 0) {
      ls.push_back(Letter{Generator::X, 1});
      ls.push_back(Letter{Generator::Y, 1});
    } else {
      ls.push_back(Letter{Generator::Y, -1});
      ls.push_back(Letter{Generator::X, -1});
    }
  }
  return TwistWord(std::move(ls));
}

TwistWord w_power(const Int& k) {
  long reps = checked_long(3 * abs(k), "w power expansion");
  if (reps > kMaxExpansionUnits / 2) {
    throw std::length_error("w power too large to expand into letters");
  }
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(2 * reps));
  for (long i = 0; i < reps; ++i) {
    if (k > 0) {
      ls.push_back(Letter{Generator::X, 1});
      ls.push_back(Letter{Generator::Y, 1});
    } else {
      ls.push_back(Letter{Generator::Y, -1});
      ls.push_back(Letter{Generator::X, -1});
    }
  }
  return TwistWord(std::move(ls));
}

TwistWord parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    char gen = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (gen != 'x' && gen != 'y' && gen != 'd' && gen != 'w') {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    std::size_t tok = i;
    ++i;
    Int exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      std::size_t num_start = i;
      if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
      std::size_t digits_start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits_start) {
        throw ParseError("expected integer exponent after '^'", num_start);
      }
      exp = Int(std::string(text.substr(num_start, i - num_start)), 10);
    }
    switch (gen) {
      case 'x':
        push_merged(out, Generator::X, exp);
        break;
      case 'y':
        push_merged(out, Generator::Y, exp);
        break;
      case 'd':
        try {
          push_word(out, delta_power(exp));
        } catch (const std::length_error&) {
          throw ParseError("d power too large to expand", tok);
        }
        break;
      case 'w':
        try {
          push_word(out, w_power(exp));
        } catch (const std::length_error&) {
          throw ParseError("w power too large to expand", tok);
        }
        break;
    }
  }
  return TwistWord(std::move(out));
}

std::string format_word(const TwistWord& word) {
  std::string out;
  for (const Letter& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += generator_char(l.gen);
    if (l.exp != 1) {
      out += '^';
      out += l.exp.get_str();
    }
  }
  return out;
}

Int exponent_sum(const TwistWord& word) {
  Int total = 0;
  for (const Letter& l : word.letters()) total += l.exp;
  return total;
}

TwistWord concat(const TwistWord& a, const TwistWord& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  push_word(out, a);
  push_word(out, b);
  return TwistWord(std::move(out));
}

TwistWord invert(const TwistWord& a) {
  std::vector<Letter> out;
  out.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    out.push_back(Letter{it->gen, -it->exp});
  }
  return TwistWord(std::move(out));
}

TwistWord prefix_units(const TwistWord& a, const Int& units) {
  Int remaining = units;
  std::vector<Letter> out;
  for (const Letter& l : a.letters()) {
    if (remaining <= 0) break;
    Int mag = abs(l.exp);
    Int sign = l.exp > 0 ? 1 : -1;
    if (remaining >= mag) {
      push_merged(out, l.gen, l.exp);
      remaining -= mag;
    } else {
      push_merged(out, l.gen, sign * remaining);
      remaining = 0;
    }
  }
  return TwistWord(std::move(out));
}

TwistWord cyclic_rotate(const TwistWord& a, const Int& positions) {
  Int len = a.unit_length();
  if (len == 0) return a;
  Int r = positions % len;
  if (r < 0) r += len;
  if (r == 0) return a;
  TwistWord head = prefix_units(a, r);
  // Suffix: drop the first r units.
  Int remaining = r;
  std::vector<Letter> tail;
  for (const Letter& l : a.letters()) {
    if (remaining == 0) {
      push_merged(tail, l.gen, l.exp);
      continue;
    }
    Int mag = abs(l.exp);
    if (remaining >= mag) {
      remaining -= mag;
    } else {
      Int sign = l.exp > 0 ? 1 : -1;
      push_merged(tail, l.gen, sign * (mag - remaining));
      remaining = 0;
    }
  }
  return concat(TwistWord(std::move(tail)), head);
}

bool all_exponents_positive(const TwistWord& word) {
  for (const Letter& l : word.letters()) {
    if (l.exp <= 0) return false;
  }
  return true;
}

}  // namespace torusbook
