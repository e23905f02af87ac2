#include "torusbook/normal_form.hpp"

#include <algorithm>
#include <list>
#include <set>
#include <utility>

namespace torusbook {

namespace {

void push_letter(std::vector<Letter>& out, Generator g, const Int& exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == g) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(Letter{g, exp});
}

void push_word(std::vector<Letter>& out, const TwistWord& w) {
  for (const Letter& l : w.letters()) push_letter(out, l.gen, l.exp);
}

std::string join_ints(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s;
}

}  // namespace

std::string format_m_form(const MForm& form) {
  return "M(" + form.k.get_str() + "; " + join_ints(form.b) + ")";
}

std::string format_six_type(const SixType& six) {
  static const char* names[] = {"T1", "T2", "T3", "T4", "T5", "T6"};
  return std::string(names[static_cast<int>(six.variant)]) + "(d=" + six.d.get_str() +
         "; p=" + join_ints(six.p) + ")";
}

const char* canonical_variant_name(CanonicalVariant v) {
  static const char* names[] = {"A", "B", "C", "D", "E", "F"};
  return names[static_cast<int>(v)];
}

CanonicalType::CanonicalType(CanonicalVariant v, Int d, std::vector<Int> a, std::vector<Int> b)
    : variant_(v), d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {
  if (v != CanonicalVariant::A && v != CanonicalVariant::B) {
    throw std::invalid_argument("exponent-list constructor is for variants A and B");
  }
  if (a_.size() != b_.size() || a_.empty()) {
    throw std::invalid_argument("A/B forms need equal-length nonempty exponent lists");
  }
  bool some_a = false, some_b = false;
  for (const Int& e : a_) {
    if (e < 0) throw std::invalid_argument("A/B exponents must be nonnegative");
    if (e != 0) some_a = true;
  }
  for (const Int& e : b_) {
    if (e < 0) throw std::invalid_argument("A/B exponents must be nonnegative");
    if (e != 0) some_b = true;
  }
  if (!some_a || !some_b) {
    throw std::invalid_argument("A/B forms need a nonzero a entry and a nonzero b entry");
  }
}

CanonicalType::CanonicalType(CanonicalVariant v, Int d, Int m)
    : variant_(v), d_(std::move(d)), m_(std::move(m)) {
  switch (v) {
    case CanonicalVariant::C:
    case CanonicalVariant::D:
      break;
    case CanonicalVariant::E:
    case CanonicalVariant::F:
      if (m_ > -1 || m_ < -3) {
        throw std::invalid_argument("E/F forms need m in {-1,-2,-3}");
      }
      break;
    default:
      throw std::invalid_argument("single-parameter constructor is for variants C-F");
  }
}

std::string format_canonical(const CanonicalType& ct) {
  std::string s = canonical_variant_name(ct.variant());
  s += "(d=" + ct.d().get_str();
  if (ct.is_pseudo_anosov()) {
    s += "; a=" + join_ints(ct.a()) + "; b=" + join_ints(ct.b());
  } else {
    s += "; m=" + ct.m().get_str();
  }
  s += ")";
  return s;
}

MoveError::MoveError(int move, std::size_t pos, const std::string& reason)
    : std::runtime_error("move " + std::to_string(move) + " inapplicable at position " +
                         std::to_string(pos) + ": " + reason) {}

MForm apply_move(const MForm& form, const MoveSpec& mv) {
  const std::vector<Int>& b = form.b;
  const std::size_t n = b.size();
  auto need = [&](bool cond, const char* reason) {
    if (!cond) throw MoveError(mv.move, mv.pos, reason);
  };
  switch (mv.move) {
    case 1: {
      if (n == 0) return form;
      std::size_t r = mv.pos % n;
      MForm out{form.k, {}};
      out.b.reserve(n);
      for (std::size_t i = 0; i < n; ++i) out.b.push_back(b[(i + r) % n]);
      return out;
    }
    case 2: {
      need(mv.pos < n, "position out of range");
      need(n >= 2, "needs a neighbour");
      need(b[mv.pos] == 1, "entry is not 1");
      MForm out{form.k, b};
      out.b[(mv.pos + n - 1) % n] += 1;
      out.b[(mv.pos + 1) % n] += 1;
      out.b.erase(out.b.begin() + static_cast<std::ptrdiff_t>(mv.pos));
      return out;
    }
    case 3: {
      need(mv.pos < n, "position out of range");
      need(n >= 4, "needs four entries");
      std::vector<std::size_t> idx;
      for (std::size_t t = 0; t < 4; ++t) {
        std::size_t i = (mv.pos + t) % n;
        need(b[i] == 2, "entries are not four consecutive 2's");
        idx.push_back(i);
      }
      std::sort(idx.rbegin(), idx.rend());
      MForm out{form.k + 1, b};
      for (std::size_t i : idx) out.b.erase(out.b.begin() + static_cast<std::ptrdiff_t>(i));
      return out;
    }
    case 4: {
      need(mv.pos < n, "position out of range");
      need(n >= 2, "needs neighbours");
      need(b[mv.pos] == 2, "entry is not 2");
      MForm out{form.k, b};
      out.b[(mv.pos + n - 1) % n] += mv.amount;
      out.b[(mv.pos + 1) % n] -= mv.amount;
      return out;
    }
    case 5: {
      need(mv.pos < n, "position out of range");
      need(n >= 2, "needs two entries");
      std::size_t second = (mv.pos + 1) % n;
      need(b[mv.pos] == 2 && b[second] == 2, "entries are not an adjacent (2,2)");
      MForm out{form.k, {}};
      out.b.reserve(n);
      out.b.push_back(2);
      out.b.push_back(2);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == mv.pos || i == second) continue;
        out.b.push_back(b[i]);
      }
      return out;
    }
    case 6: {
      need(mv.pos < n, "position out of range");
      need(n >= 2, "needs neighbours");
      need(b[mv.pos] == 3, "entry is not 3");
      MForm out{form.k, b};
      out.b[(mv.pos + n - 1) % n] -= 1;
      out.b[(mv.pos + 1) % n] -= 1;
      out.b.erase(out.b.begin() + static_cast<std::ptrdiff_t>(mv.pos));
      out.b.insert(out.b.begin(), {Int(2), Int(2)});
      return out;
    }
    default:
      throw MoveError(mv.move, mv.pos, "no such move");
  }
}

TwistWord x_power_identity(const Int& m) {
  std::vector<Letter> ls;
  push_word(ls, delta_power(-1));
  for (int i = 0; i < 4; ++i) {
    push_letter(ls, Generator::X, 1);
    push_letter(ls, Generator::Y, 1);
  }
  push_letter(ls, Generator::X, 1);
  push_letter(ls, Generator::Y, m + 1);
  push_letter(ls, Generator::X, 1);
  push_letter(ls, Generator::Y, 1);
  return TwistWord(std::move(ls));
}

MForm to_m_form(const TwistWord& word) {
  // Split into syllable pairs x^{a_i} y^{b_i}; a leading y or trailing x
  // syllable pads with a zero exponent.
  std::vector<std::pair<Int, Int>> pairs;
  const auto& ls = word.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    Int a = 0, b = 0;
    if (ls[i].gen == Generator::X) {
      a = ls[i].exp;
      ++i;
      if (i < ls.size()) {
        b = ls[i].exp;  // must be a y syllable: letters alternate
        ++i;
      }
    } else {
      b = ls[i].exp;
      ++i;
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }
  const std::size_t n = pairs.size();
  MForm out{0, {}};
  if (n == 0) return out;
  if (n % 2 == 0) {
    out.k = -Int(static_cast<long>(n)) / 2;
  } else {
    out.k = -(Int(static_cast<long>(n)) + 1) / 2;
    out.b = {Int(2), Int(2)};
  }
  for (auto& [a, b] : pairs) {
    out.b.push_back(a + 2);
    out.b.push_back(b + 2);
  }
  return out;
}

MForm to_p_form(const MForm& form) {
  Int k = form.k;
  std::list<Int> entries(form.b.begin(), form.b.end());

  auto interleave = [&]() {
    // M(k; b_1..b_{2n}) = M(k-n; 3, b_1+2, ..., 3, b_{2n}+2)
    k -= Int(static_cast<long>(entries.size())) / 2;
    std::list<Int> out;
    for (Int& e : entries) {
      out.push_back(3);
      out.push_back(e + 2);
    }
    entries.swap(out);
  };

  // The substitution move runs at least once on a nonempty list, then
  // repeats until every entry is >= 3.
  bool substituted = false;
  while (!entries.empty()) {
    Int mn = entries.front();
    for (const Int& e : entries) {
      if (e < mn) mn = e;
    }
    if (mn >= 3 && substituted) break;

    if (entries.size() % 2 == 1) {
      // d^k (x y^{b_1}) ... (x y^{b_n}) with n odd is
      // M(k-(n+1)/2; 2,2, 3,b_1+2, ..., 3,b_n+2).
      k -= (Int(static_cast<long>(entries.size())) + 1) / 2;
      std::list<Int> out{Int(2), Int(2)};
      for (Int& e : entries) {
        out.push_back(3);
        out.push_back(e + 2);
      }
      entries.swap(out);
      substituted = true;
      continue;
    }

    if (mn <= -6) {
      // Raise deep negatives one at a time instead of doubling the whole
      // list. Substituting at the x in front of entry t replaces
      // (..., u, t, ...) by a leading (2,2) plus (..., u+1, 3, t+1, ...)
      // and drops k by one; four leading 2's collapse into a delta.
      while (true) {
        auto it = std::find_if(entries.begin(), entries.end(),
                               [](const Int& e) { return e <= 0; });
        if (it == entries.end()) break;
        auto left = it == entries.begin() ? std::prev(entries.end()) : std::prev(it);
        *left += 1;
        *it += 1;
        entries.insert(it, Int(3));
        entries.push_front(2);
        entries.push_front(2);
        k -= 1;
        if (entries.size() >= 4) {
          auto stop = std::next(entries.begin(), 4);
          if (std::all_of(entries.begin(), stop, [](const Int& e) { return e == 2; })) {
            entries.erase(entries.begin(), stop);
            k += 1;
          }
        }
      }
      continue;
    }

    interleave();
    substituted = true;
  }

  return MForm{k, std::vector<Int>(entries.begin(), entries.end())};
}

namespace {

struct ReduceNode {
  Int v;
  long label;
};

}  // namespace

SixType reduce_six(const MForm& form) {
  bool prefix = false;
  std::size_t start = 0;
  const std::vector<Int>& b = form.b;
  if (b.size() >= 2 && b[0] == 2 && b[1] == 2) {
    prefix = true;
    start = 2;
  }
  for (std::size_t i = start; i < b.size(); ++i) {
    if (b[i] < 3) {
      throw std::invalid_argument("reduce_six needs entries >= 3 (optionally behind a (2,2))");
    }
  }

  Int d = form.k;
  std::list<ReduceNode> entries;
  std::vector<std::list<ReduceNode>::iterator> by_label;
  std::set<long> threes;
  for (std::size_t i = start; i < b.size(); ++i) {
    long label = static_cast<long>(i - start);
    entries.push_back(ReduceNode{b[i], label});
    by_label.push_back(std::prev(entries.end()));
    if (b[i] == 3) threes.insert(label);
  }

  auto set_value = [&](std::list<ReduceNode>::iterator it, const Int& v) {
    it->v = v;
    if (v == 3) {
      threes.insert(it->label);
    } else {
      threes.erase(it->label);
    }
  };
  auto erase_node = [&](std::list<ReduceNode>::iterator it) {
    threes.erase(it->label);
    entries.erase(it);
  };
  auto cyc_next = [&](std::list<ReduceNode>::iterator it) {
    auto nx = std::next(it);
    return nx == entries.end() ? entries.begin() : nx;
  };
  auto cyc_prev = [&](std::list<ReduceNode>::iterator it) {
    return it == entries.begin() ? std::prev(entries.end()) : std::prev(it);
  };
  auto toggle_prefix = [&]() {
    // A gained (2,2) joins an existing one into a full boundary twist.
    if (prefix) {
      prefix = false;
      d += 1;
    } else {
      prefix = true;
    }
  };
  auto collect = [&]() {
    std::vector<Int> out;
    out.reserve(entries.size());
    for (const ReduceNode& nd : entries) out.push_back(nd.v);
    return out;
  };

  while (true) {
    const std::size_t m = entries.size();
    if (threes.empty()) {
      // Step 1 halt: everything >= 4 (vacuously so when empty).
      return SixType{prefix ? SixVariant::T2 : SixVariant::T1, d, collect()};
    }
    if (m == 1) {
      return SixType{prefix ? SixVariant::T6 : SixVariant::T5, d, {Int(3)}};
    }
    if (m == 2) {
      // M(d; 3, v) = M(d; 2,2, v-2); an existing prefix merges into a delta.
      auto it3 = by_label[static_cast<std::size_t>(*threes.begin())];
      Int v = cyc_next(it3)->v;
      if (prefix) return SixType{SixVariant::T5, d + 1, {v - 2}};
      return SixType{SixVariant::T6, d, {v - 2}};
    }

    // Step 2: delete the leftmost 3, decrement its cyclic neighbours,
    // gain a (2,2).
    auto it3 = by_label[static_cast<std::size_t>(*threes.begin())];
    auto left = cyc_prev(it3);
    auto right = cyc_next(it3);
    set_value(left, left->v - 1);
    set_value(right, right->v - 1);
    erase_node(it3);
    toggle_prefix();

    const bool l2 = left->v == 2;
    const bool r2 = right->v == 2;
    const std::size_t m2 = entries.size();
    if (!l2 && !r2) continue;

    if (l2 && r2) {
      if (m2 == 2) {
        // Remaining list (2,2): M(d; 2,2) is T3 with p1 = 2, and behind a
        // prefix M(d; 2,2,2,2) is T4 with p1 = 2.
        if (prefix) return SixType{SixVariant::T4, d, {Int(2)}};
        return SixType{SixVariant::T3, d, {Int(2)}};
      }
      // Step 3: the decremented neighbours form an adjacent (2,2); extract it.
      erase_node(left);
      erase_node(right);
      toggle_prefix();
      continue;
    }

    if (m2 == 2) {
      Int v = l2 ? right->v : left->v;
      if (prefix) return SixType{SixVariant::T4, d, {v}};
      return SixType{SixVariant::T3, d, {v}};
    }

    // Step 4: slide the entry beyond the 2 through it, leaving (2,2) to
    // extract and one merged entry.
    if (l2) {
      auto u = cyc_prev(left);
      set_value(right, right->v + u->v - 2);
      erase_node(u);
      erase_node(left);
    } else {
      auto u = cyc_next(right);
      set_value(left, left->v + u->v - 2);
      erase_node(u);
      erase_node(right);
    }
    toggle_prefix();
  }
}

namespace {

// Collapse a list of x-exponents alpha (the y-exponents are all 1) into the
// canonical (a, b) pairs: zero x-powers merge the adjacent y^{-1} factors.
CanonicalType ab_candidate(bool type_a, Int d, const std::vector<Int>& alpha) {
  const std::size_t m = alpha.size();
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < m; ++i) {
    if (alpha[i] != 0) nz.push_back(i);
  }
  if (nz.empty()) {
    // d^d y^{-m} (resp. with w in front): reducible, type C (resp. D).
    return CanonicalType(type_a ? CanonicalVariant::C : CanonicalVariant::D, d,
                         -Int(static_cast<long>(m)));
  }
  const std::size_t cnt = nz.size();
  std::vector<Int> a, bb;
  a.reserve(cnt);
  bb.reserve(cnt);
  for (std::size_t t = 0; t < cnt; ++t) {
    std::size_t i = nz[t];
    std::size_t j = nz[(t + 1) % cnt];
    std::size_t gap = (j + m - i) % m;
    if (gap == 0) gap = m;
    a.push_back(alpha[i]);
    bb.push_back(Int(static_cast<long>(gap)));
  }
  // Canonical representative: lexicographically minimal rotation of the
  // interleaved sequence (a_1, b_1, ..., a_n, b_n).
  std::size_t best = 0;
  for (std::size_t r = 1; r < cnt; ++r) {
    for (std::size_t t = 0; t < cnt; ++t) {
      const Int& ar = a[(r + t) % cnt];
      const Int& ab = a[(best + t) % cnt];
      if (ar != ab) {
        if (ar < ab) best = r;
        break;
      }
      const Int& br = bb[(r + t) % cnt];
      const Int& bbst = bb[(best + t) % cnt];
      if (br != bbst) {
        if (br < bbst) best = r;
        break;
      }
    }
  }
  std::vector<Int> ra, rb;
  ra.reserve(cnt);
  rb.reserve(cnt);
  for (std::size_t t = 0; t < cnt; ++t) {
    ra.push_back(a[(best + t) % cnt]);
    rb.push_back(bb[(best + t) % cnt]);
  }
  return CanonicalType(type_a ? CanonicalVariant::A : CanonicalVariant::B, d,
                       std::move(ra), std::move(rb));
}

}  // namespace

CanonicalType to_canonical(const SixType& six) {
  const Int& d = six.d;
  const std::vector<Int>& p = six.p;
  auto check = [&](bool cond) {
    if (!cond) throw std::invalid_argument("malformed six-type " + format_six_type(six));
  };
  switch (six.variant) {
    case SixVariant::T1:
    case SixVariant::T2: {
      for (const Int& e : p) check(e >= 4);
      const bool even = p.size() % 2 == 0;
      std::vector<Int> alpha;
      alpha.reserve(p.size());
      for (const Int& e : p) alpha.push_back(e - 4);
      Int half = Int(static_cast<long>(p.size())) / 2;  // floor
      if (six.variant == SixVariant::T1) {
        // M(d; p...) = d^{d+m/2} x^{p1-4} y^-1 ... (even m), with a w for odd m.
        if (even) return ab_candidate(true, d + half, alpha);
        return ab_candidate(false, d + half, alpha);
      }
      // M(d; 2,2, p...) = d^{d+m/2} w x^{p1-4} y^-1 ... (even m); odd m
      // absorbs the w into an extra delta half.
      if (even) return ab_candidate(false, d + half, alpha);
      return ab_candidate(true, d + half + 1, alpha);
    }
    case SixVariant::T3:
      check(p.size() == 1 && p[0] >= 2);
      // M(d; 2, p1) = d^d w y^{p1-2}
      return CanonicalType(CanonicalVariant::D, d, p[0] - 2);
    case SixVariant::T4:
      check(p.size() == 1 && p[0] >= 2);
      // M(d; 2,2,2, p1) = d^{d+1} y^{p1-2}
      return CanonicalType(CanonicalVariant::C, d + 1, p[0] - 2);
    case SixVariant::T5: {
      check(p.size() == 1 && p[0] >= 1);
      // M(d; p1) = d^d w x^{p1-4} y^-1
      Int q = p[0] - 4;
      if (q >= 1) return CanonicalType(CanonicalVariant::B, d, {q}, {Int(1)});
      if (q == 0) return CanonicalType(CanonicalVariant::D, d, Int(-1));
      return CanonicalType(CanonicalVariant::F, d, q);
    }
    case SixVariant::T6: {
      check(p.size() == 1 && p[0] >= 1);
      // M(d; 2,2, p1) = d^{d+1} x^{p1-4} y^-1
      Int q = p[0] - 4;
      if (q >= 1) return CanonicalType(CanonicalVariant::A, d + 1, {q}, {Int(1)});
      if (q == 0) return CanonicalType(CanonicalVariant::C, d + 1, Int(-1));
      return CanonicalType(CanonicalVariant::E, d + 1, q);
    }
  }
  throw std::invalid_argument("unknown six-type variant");
}

CanonicalType normalize(const TwistWord& word) {
  return to_canonical(reduce_six(to_p_form(to_m_form(word))));
}

TwistWord expand_to_word(const MForm& form) {
  std::vector<Letter> ls;
  push_word(ls, delta_power(form.k));
  for (const Int& bi : form.b) {
    push_letter(ls, Generator::X, 1);
    push_letter(ls, Generator::Y, bi);
  }
  return TwistWord(std::move(ls));
}

TwistWord expand_to_word(const SixType& six) {
  MForm form{six.d, {}};
  switch (six.variant) {
    case SixVariant::T1:
    case SixVariant::T5:
      break;
    case SixVariant::T2:
    case SixVariant::T6:
      form.b = {Int(2), Int(2)};
      break;
    case SixVariant::T3:
      form.b = {Int(2)};
      break;
    case SixVariant::T4:
      form.b = {Int(2), Int(2), Int(2)};
      break;
  }
  form.b.insert(form.b.end(), six.p.begin(), six.p.end());
  return expand_to_word(form);
}

TwistWord expand_to_word(const CanonicalType& ct) {
  std::vector<Letter> ls;
  push_word(ls, delta_power(ct.d()));
  switch (ct.variant()) {
    case CanonicalVariant::B:
    case CanonicalVariant::D:
    case CanonicalVariant::F:
      push_word(ls, w_power(1));
      break;
    default:
      break;
  }
  switch (ct.variant()) {
    case CanonicalVariant::A:
    case CanonicalVariant::B:
      for (std::size_t i = 0; i < ct.a().size(); ++i) {
        push_letter(ls, Generator::X, ct.a()[i]);
        push_letter(ls, Generator::Y, -ct.b()[i]);
      }
      break;
    case CanonicalVariant::C:
    case CanonicalVariant::D:
      push_letter(ls, Generator::Y, ct.m());
      break;
    case CanonicalVariant::E:
    case CanonicalVariant::F:
      push_letter(ls, Generator::X, ct.m());
      push_letter(ls, Generator::Y, -1);
      break;
  }
  return TwistWord(std::move(ls));
}

DynamicsClass dynamics_of(const CanonicalType& ct) {
  switch (ct.variant()) {
    case CanonicalVariant::A:
    case CanonicalVariant::B:
      return DynamicsClass::PseudoAnosov;
    case CanonicalVariant::C:
    case CanonicalVariant::D:
      return DynamicsClass::Reducible;
    default:
      return DynamicsClass::Periodic;
  }
}

}  // namespace torusbook
