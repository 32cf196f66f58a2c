#ifndef BROVER_GRIG_HPP
#define BROVER_GRIG_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brover/recursion.hpp"

namespace brover {

// ---------------------------------------------------------------------------
// Reduced expressions z_1 a^{k_1} z_2 ... a^{k_l} z_{l+1} with z_i = b^m c^n,
// the normal form of Z * Z^2. d is eliminated through d = (bc)^-1. Interior
// z's are nonzero, all a exponents are nonzero.
// ---------------------------------------------------------------------------
class ReducedWord {
public:
  using ZTerm = std::pair<long long, long long>; // (exponent of b, exponent of c)

  ReducedWord() : z_{{0, 0}} {}

  // Appends a^e, merging with a pending a run when the top z is trivial.
  void append_a(long long e) {
    if (e == 0) return;
    if (!k_.empty() && z_.back() == ZTerm{0, 0}) {
      z_.pop_back();
      k_.back() += e;
      if (k_.back() == 0)
        k_.pop_back(); // the run vanished; the previous z is terminal again
      else
        z_.push_back({0, 0});
    } else {
      k_.push_back(e);
      z_.push_back({0, 0});
    }
  }

  void append_z(long long m, long long n) {
    z_.back().first += m;
    z_.back().second += n;
  }

  void append(const ReducedWord& o) {
    for (std::size_t i = 0; i < o.k_.size(); ++i) {
      append_z(o.z_[i].first, o.z_[i].second);
      append_a(o.k_[i]);
    }
    append_z(o.z_.back().first, o.z_.back().second);
  }

  const std::vector<ZTerm>& z_terms() const { return z_; }
  const std::vector<long long>& a_terms() const { return k_; }

  long long a_exponent() const {
    long long s = 0;
    for (long long k : k_) s += k;
    return s;
  }

  // The alternating-product length statistic: 2l-1, 2l, or 2l+1.
  int length() const {
    int l = static_cast<int>(k_.size());
    if (l == 0) return z_[0] == ZTerm{0, 0} ? 0 : 1;
    int len = 2 * l - 1;
    if (z_.front() != ZTerm{0, 0}) ++len;
    if (z_.back() != ZTerm{0, 0}) ++len;
    return len;
  }

  bool trivial() const { return k_.empty() && z_[0] == ZTerm{0, 0}; }

  bool operator==(const ReducedWord& o) const { return z_ == o.z_ && k_ == o.k_; }
  bool operator!=(const ReducedWord& o) const { return !(*this == o); }

  std::string str() const {
    if (trivial()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* sym, long long e) {
      if (e == 0) return;
      if (!first) os << ' ';
      first = false;
      os << sym;
      if (e != 1) os << '^' << e;
    };
    for (std::size_t i = 0; i < k_.size(); ++i) {
      emit("b", z_[i].first);
      emit("c", z_[i].second);
      emit("a", k_[i]);
    }
    emit("b", z_.back().first);
    emit("c", z_.back().second);
    return os.str();
  }

private:
  std::vector<ZTerm> z_; // always k_.size() + 1 entries
  std::vector<long long> k_;
};

namespace grig_detail {

inline void require_brgrig_alphabet(const GroupWord& w) {
  const auto& t = *w.table();
  if (!(t.has_symbol("a") && t.has_symbol("b") && t.has_symbol("c") &&
        t.has_symbol("d")))
    throw std::invalid_argument("word is not over an a,b,c,d alphabet");
}

} // namespace grig_detail

// Rewrites a word over {a,b,c,d} into reduced form; d^s contributes b^-s c^-s.
inline ReducedWord grig_reduce(const GroupWord& w) {
  grig_detail::require_brgrig_alphabet(w);
  const auto& t = *w.table();
  int ga = t.generator_index("a");
  int gb = t.generator_index("b");
  int gc = t.generator_index("c");
  int gd = t.generator_index("d");
  ReducedWord r;
  for (const auto& [gen, sign] : w.letters()) {
    if (gen == ga)
      r.append_a(sign);
    else if (gen == gb)
      r.append_z(sign, 0);
    else if (gen == gc)
      r.append_z(0, sign);
    else if (gen == gd)
      r.append_z(-sign, -sign);
    else
      throw std::invalid_argument("foreign symbol in braided Grigorchuk word");
  }
  return r;
}

inline long long grig_a_exponent(const GroupWord& w) {
  return grig_reduce(w).a_exponent();
}

inline GroupWord grig_word(const TablePtr& table, const ReducedWord& r) {
  int ga = table->generator_index("a");
  int gb = table->generator_index("b");
  int gc = table->generator_index("c");
  GroupWord w(table);
  auto push_pow = [&](int gen, long long e) {
    int sign = e >= 0 ? 1 : -1;
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) w.push(gen, sign);
  };
  const auto& z = r.z_terms();
  const auto& k = r.a_terms();
  for (std::size_t i = 0; i < k.size(); ++i) {
    push_pow(gb, z[i].first);
    push_pow(gc, z[i].second);
    push_pow(ga, k[i]);
  }
  push_pow(gb, z.back().first);
  push_pow(gc, z.back().second);
  return w;
}

// The contraction step: (b^k c^m) a^n = zeta^n (a^{k-m}, b^{-m} c^{k-m}) for
// n even, with the two entries swapped for n odd. Applied pair by pair,
// routing through the running parity; each pair feeds at most one term to
// each side, which is the whole length bound.
inline std::pair<ReducedWord, ReducedWord> grig_reduced_sections(const ReducedWord& w) {
  ReducedWord s1, s2;
  const auto& z = w.z_terms();
  const auto& k = w.a_terms();
  auto feed = [&](long long m, long long n, bool odd) {
    // pair sections: A = a^{m-n} and B = b^{-n} c^{m-n}
    if (odd) std::swap(s1, s2);
    ReducedWord& a_side = odd ? s2 : s1;
    ReducedWord& b_side = odd ? s1 : s2;
    a_side.append_a(m - n);
    b_side.append_z(-n, m - n);
  };
  for (std::size_t i = 0; i < k.size(); ++i)
    feed(z[i].first, z[i].second, ((k[i] % 2) + 2) % 2 == 1);
  feed(z.back().first, z.back().second, false);
  return {std::move(s1), std::move(s2)};
}

namespace grig_detail {

inline bool identity_rec(const ReducedWord& w) {
  if (w.a_exponent() != 0) return false;
  if (w.length() == 0) return true;
  auto [s1, s2] = grig_reduced_sections(w);
  return identity_rec(s1) && identity_rec(s2);
}

} // namespace grig_detail

// Exact word problem for the braided Grigorchuk group.
inline bool grig_is_identity(const GroupWord& w) {
  return grig_detail::identity_rec(grig_reduce(w));
}

// The endomorphism sigma: a -> a^-1 c^-1 a, b -> d, c -> b, d -> c.
inline GroupWord sigma_endo(const GroupWord& w) {
  grig_detail::require_brgrig_alphabet(w);
  const auto& t = *w.table();
  int ga = t.generator_index("a");
  int gb = t.generator_index("b");
  int gc = t.generator_index("c");
  int gd = t.generator_index("d");
  GroupWord out(w.table());
  for (const auto& [gen, sign] : w.letters()) {
    if (gen == ga) {
      if (sign > 0) {
        out.push(ga, -1); out.push(gc, -1); out.push(ga, 1);
      } else {
        out.push(ga, -1); out.push(gc, 1); out.push(ga, 1);
      }
    } else if (gen == gb) {
      out.push(gd, sign);
    } else if (gen == gc) {
      out.push(gb, sign);
    } else {
      out.push(gc, sign);
    }
  }
  return out;
}

// Smallest n <= max_n with every depth-n iterated reduced section literally
// trivial; the K_n filtration level of a kernel element.
inline std::optional<int> k_level(const GroupWord& w, int max_n) {
  if (!grig_is_identity(w))
    throw std::invalid_argument("k_level requires a kernel element");
  std::vector<ReducedWord> level{grig_reduce(w)};
  for (int n = 0; n <= max_n; ++n) {
    bool all_trivial = true;
    for (const auto& r : level)
      if (!r.trivial()) {
        all_trivial = false;
        break;
      }
    if (all_trivial) return n;
    std::vector<ReducedWord> next;
    next.reserve(level.size() * 2);
    for (const auto& r : level) {
      auto [s1, s2] = grig_reduced_sections(r);
      next.push_back(std::move(s1));
      next.push_back(std::move(s2));
    }
    level = std::move(next);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The classical Grigorchuk group: torsion rules a^2 = x^2 = 1 and xy = z for
// {x,y,z} = {b,c,d}, then the usual recursion on sections.
// ---------------------------------------------------------------------------

namespace grig_detail {

// letters 0 = a, 1 = b, 2 = c, 3 = d
inline void sym_push(std::vector<int>& w, int x) {
  while (true) {
    if (w.empty()) {
      w.push_back(x);
      return;
    }
    int top = w.back();
    if (top == x) {
      w.pop_back();
      return;
    }
    if (top != 0 && x != 0) {
      w.pop_back();
      x = 6 - top - x; // product of two distinct involutions in {b,c,d}
      continue;
    }
    w.push_back(x);
    return;
  }
}

inline std::vector<int> sym_normalize(const std::vector<int>& letters) {
  std::vector<int> w;
  for (int x : letters) sym_push(w, x);
  return w;
}

inline bool sym_identity_rec(const std::vector<int>& w) {
  int a_count = 0;
  for (int x : w)
    if (x == 0) ++a_count;
  if (a_count % 2 != 0) return false;
  if (w.empty()) return true;
  if (w.size() == 1) return false;
  // sections per the table b = (a,c), c = (a,d), d = (1,b)
  std::vector<int> s1, s2;
  bool swapped = false;
  for (int x : w) {
    if (x == 0) {
      swapped = !swapped;
      continue;
    }
    std::vector<int>& left = swapped ? s2 : s1;
    std::vector<int>& right = swapped ? s1 : s2;
    if (x == 1) {
      left.push_back(0); right.push_back(2);
    } else if (x == 2) {
      left.push_back(0); right.push_back(3);
    } else {
      right.push_back(1);
    }
  }
  return sym_identity_rec(sym_normalize(s1)) && sym_identity_rec(sym_normalize(s2));
}

} // namespace grig_detail

// Exact word problem for the classical Grigorchuk group.
inline bool grig_is_identity_symmetric(const GroupWord& w) {
  grig_detail::require_brgrig_alphabet(w);
  const auto& t = *w.table();
  int idx[4] = {t.generator_index("a"), t.generator_index("b"),
                t.generator_index("c"), t.generator_index("d")};
  std::vector<int> letters;
  letters.reserve(w.size());
  for (const auto& [gen, sign] : w.letters()) {
    (void)sign; // every generator is an involution
    for (int j = 0; j < 4; ++j)
      if (gen == idx[j]) letters.push_back(j);
  }
  return grig_detail::sym_identity_rec(grig_detail::sym_normalize(letters));
}

// Letterwise projection to the classical Grigorchuk table.
inline GroupWord grig_project(const GroupWord& w, const TablePtr& target) {
  GroupWord out(target);
  for (const auto& [gen, sign] : w.letters())
    out.push(target->generator_index(w.table()->generator(gen).symbol), sign);
  return out;
}

} // namespace brover

#endif
