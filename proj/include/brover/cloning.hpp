#ifndef BROVER_CLONING_HPP
#define BROVER_CLONING_HPP

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brover/braid.hpp"
#include "brover/config.hpp"
#include "brover/grig.hpp"
#include "brover/recursion.hpp"

namespace brover {

// ---------------------------------------------------------------------------
// Element of B_n wr G (braided tables) or S_n wr G (symmetric tables):
// a top part of degree n and n entry words over one recursion table.
// ---------------------------------------------------------------------------
class WreathElement {
public:
  WreathElement() = default;

  WreathElement(TablePtr table, BraidWord top, std::vector<GroupWord> entries)
      : table_(std::move(table)), top_(std::move(top)), entries_(std::move(entries)) {
    if (table_->kind() != TableKind::braided)
      throw std::invalid_argument("braid top over a symmetric table");
    check();
  }

  WreathElement(TablePtr table, Permutation top, std::vector<GroupWord> entries)
      : table_(std::move(table)), top_(std::move(top)), entries_(std::move(entries)) {
    if (table_->kind() != TableKind::symmetric)
      throw std::invalid_argument("permutation top over a braided table");
    check();
  }

  static WreathElement identity(const TablePtr& table, int n) {
    std::vector<GroupWord> entries(n, GroupWord(table));
    if (table->kind() == TableKind::braided)
      return WreathElement(table, BraidWord(n), std::move(entries));
    return WreathElement(table, Permutation::identity(n), std::move(entries));
  }

  const TablePtr& table() const { return table_; }
  int degree() const { return static_cast<int>(entries_.size()); }
  TableKind kind() const { return table_->kind(); }

  const BraidWord& top_braid() const { return std::get<BraidWord>(top_); }
  const Permutation& top_perm() const { return std::get<Permutation>(top_); }
  const RootPart& top() const { return top_; }
  const std::vector<GroupWord>& entries() const { return entries_; }

  std::string str() const {
    std::ostringstream os;
    if (kind() == TableKind::braided)
      os << top_braid().str();
    else
      os << top_perm().str();
    os << " (";
    for (int i = 0; i < degree(); ++i) {
      if (i) os << ", ";
      os << entries_[i].str();
    }
    os << ')';
    return os.str();
  }

private:
  void check() const {
    int n = degree();
    int size = table_->kind() == TableKind::braided ? top_braid().strands()
                                                    : top_perm().degree();
    if (size != n)
      throw std::invalid_argument("top degree disagrees with entry count");
    for (const auto& e : entries_)
      if (e.table() != table_)
        throw std::invalid_argument("wreath entries over different tables");
  }

  TablePtr table_;
  RootPart top_;
  std::vector<GroupWord> entries_;
};

// rho_n: forget the entries, project the top to S_n.
inline Permutation wreath_rho(const WreathElement& x) {
  if (x.kind() == TableKind::braided) return perm_of(x.top_braid());
  return x.top_perm();
}

// fg = (top f)(top g)(f_{g(1)} g_1, ..., f_{g(n)} g_n), the top of g acting
// through its permutation image.
inline WreathElement wreath_mul(const WreathElement& x, const WreathElement& y) {
  if (x.table() != y.table()) throw std::invalid_argument("wreath table mismatch");
  if (x.degree() != y.degree()) throw std::invalid_argument("wreath degree mismatch");
  Permutation sigma = wreath_rho(y);
  std::vector<GroupWord> entries;
  entries.reserve(x.degree());
  for (int i = 1; i <= x.degree(); ++i)
    entries.push_back(x.entries()[sigma.of(i) - 1] * y.entries()[i - 1]);
  if (x.kind() == TableKind::braided)
    return WreathElement(x.table(), x.top_braid() * y.top_braid(), std::move(entries));
  return WreathElement(x.table(), compose(x.top_perm(), y.top_perm()),
                       std::move(entries));
}

inline WreathElement wreath_inverse(const WreathElement& x) {
  Permutation sigma_inv = wreath_rho(x).inverse();
  std::vector<GroupWord> entries;
  entries.reserve(x.degree());
  for (int i = 1; i <= x.degree(); ++i)
    entries.push_back(x.entries()[sigma_inv.of(i) - 1].inverse());
  if (x.kind() == TableKind::braided)
    return WreathElement(x.table(), x.top_braid().inverse(), std::move(entries));
  return WreathElement(x.table(), x.top_perm().inverse(), std::move(entries));
}

inline WreathElement wreath_direct_sum(const WreathElement& x, const WreathElement& y) {
  if (x.table() != y.table()) throw std::invalid_argument("wreath table mismatch");
  std::vector<GroupWord> entries = x.entries();
  entries.insert(entries.end(), y.entries().begin(), y.entries().end());
  if (x.kind() == TableKind::braided)
    return WreathElement(x.table(), direct_sum(x.top_braid(), y.top_braid()),
                         std::move(entries));
  // permutations: place y's permutation after x's
  int nx = x.degree(), ny = y.degree();
  std::vector<int> images(nx + ny);
  for (int i = 1; i <= nx; ++i) images[i - 1] = x.top_perm().of(i);
  for (int i = 1; i <= ny; ++i) images[nx + i - 1] = nx + y.top_perm().of(i);
  return WreathElement(x.table(), Permutation(images), std::move(entries));
}

inline Permutation shift_perm(const Permutation& p, int k, int n) {
  int d = p.degree();
  std::vector<int> images(n + d - 1);
  for (int i = 1; i <= n + d - 1; ++i) {
    if (i >= k && i <= k + d - 1)
      images[i - 1] = k - 1 + p.of(i - k + 1);
    else
      images[i - 1] = i;
  }
  return Permutation(images);
}

// (beta(f_1,...,f_n)) kappa_k^n =
//   (beta) theta_k^n phi^{(k)}(root f_k) (f_1,...,f_{k-1},
//                                         sections of f_k, f_{k+1},...,f_n)
inline WreathElement wreath_kappa(const WreathElement& x, int k) {
  int n = x.degree();
  int d = x.table()->degree();
  if (k < 1 || k > n) throw std::out_of_range("wreath_kappa position");
  WreathRecursion rec = wreath_recursion(x.entries()[k - 1]);
  std::vector<GroupWord> entries;
  entries.reserve(n + d - 1);
  for (int i = 0; i < k - 1; ++i) entries.push_back(x.entries()[i]);
  for (auto& s : rec.sections) entries.push_back(std::move(s));
  for (int i = k; i < n; ++i) entries.push_back(x.entries()[i]);
  if (x.kind() == TableKind::braided) {
    BraidWord top = clone_braid(x.top_braid(), k, d) *
                    shift_embed(std::get<BraidWord>(rec.root), k, n);
    return WreathElement(x.table(), std::move(top), std::move(entries));
  }
  Permutation top = compose(clone_perm(x.top_perm(), k, d),
                            shift_perm(std::get<Permutation>(rec.root), k, n));
  return WreathElement(x.table(), std::move(top), std::move(entries));
}

// Componentwise equality; exact whenever the table's solver is exact.
inline EqVerdict wreath_eq(const WreathElement& x, const WreathElement& y,
                           const Config& cfg = default_config()) {
  if (x.table() != y.table() || x.degree() != y.degree())
    return EqVerdict::unequal();
  if (x.kind() == TableKind::braided) {
    if (!braid_eq(x.top_braid(), y.top_braid())) return EqVerdict::unequal();
  } else {
    if (!(x.top_perm() == y.top_perm())) return EqVerdict::unequal();
  }
  bool any_unknown = false;
  for (int i = 0; i < x.degree(); ++i) {
    EqVerdict e = eq_in(x.entries()[i], y.entries()[i], cfg);
    if (e.is_unequal()) return EqVerdict::unequal();
    if (e.is_unknown()) any_unknown = true;
  }
  return any_unknown ? EqVerdict::unknown(cfg.depth) : EqVerdict::equal();
}

// ---------------------------------------------------------------------------
// Behavioral cloning-system interface and the randomized axiom checker.
// Systems are bundles of functions so user-defined families can be checked.
// ---------------------------------------------------------------------------
template <class El>
struct CloningSystem {
  std::string name;
  int d = 2;
  std::function<El(std::mt19937_64&, int)> random_element;      // (rng, n)
  std::function<Permutation(int, const El&)> rho;               // (n, g)
  std::function<El(int, int, const El&)> kappa;                 // (n, k, g)
  std::function<El(int, const El&, const El&)> mul;             // (n, g, h)
  std::function<EqVerdict(int, const El&, const El&)> eq;       // (n, g, h)
};

struct AxiomCounts {
  int pass = 0;
  int fail = 0;
  int unknown = 0;
  std::string first_failure;

  void tally(const EqVerdict& v, const std::string& what) {
    if (v.is_equal()) {
      ++pass;
    } else if (v.is_unequal()) {
      if (fail == 0) first_failure = what;
      ++fail;
    } else {
      ++unknown;
    }
  }
};

struct AxiomReport {
  std::string system;
  std::uint64_t seed = 0;
  AxiomCounts c1, c2, c3;

  bool all_passed() const {
    return c1.fail == 0 && c2.fail == 0 && c3.fail == 0 && c1.unknown == 0 &&
           c2.unknown == 0 && c3.unknown == 0;
  }

  std::string str() const {
    std::ostringstream os;
    auto line = [&](const char* ax, const AxiomCounts& c) {
      os << system << ' ' << ax << " pass=" << c.pass << " fail=" << c.fail
         << " unknown=" << c.unknown << " seed=" << seed << '\n';
    };
    line("C1", c1);
    line("C2", c2);
    line("C3", c3);
    return os.str();
  }
};

// Samples (g,h,k,l,i) and checks, in applied right-action form:
//   C1: (gh)k_k = (g)k_{rho(h)k} (h)k_k
//   C2: ((g)k_l)k_k = ((g)k_k)k_{l+d-1}   for k < l
//   C3: rho((g)k_k)(i) = (rho(g))s_k(i)   for i outside the cloned block
template <class El>
AxiomReport check_axioms(const CloningSystem<El>& sys, int n_max, int samples,
                         std::uint64_t seed) {
  if (n_max < 2) throw std::invalid_argument("check_axioms needs n_max >= 2");
  AxiomReport rep;
  rep.system = sys.name;
  rep.seed = seed;
  int d = sys.d;

  std::mt19937_64 rng1(seed);
  for (int s = 0; s < samples; ++s) {
    int n = 2 + static_cast<int>(rng1() % (n_max - 1));
    El g = sys.random_element(rng1, n);
    El h = sys.random_element(rng1, n);
    int k = 1 + static_cast<int>(rng1() % n);
    El lhs = sys.kappa(n, k, sys.mul(n, g, h));
    El rhs = sys.mul(n + d - 1, sys.kappa(n, sys.rho(n, h).of(k), g),
                     sys.kappa(n, k, h));
    rep.c1.tally(sys.eq(n + d - 1, lhs, rhs),
                 "C1 sample " + std::to_string(s) + " n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }

  std::mt19937_64 rng2(seed + 1);
  for (int s = 0; s < samples; ++s) {
    int n = 2 + static_cast<int>(rng2() % (n_max - 1));
    El g = sys.random_element(rng2, n);
    int k = 1 + static_cast<int>(rng2() % (n - 1)); // k < l <= n
    int l = k + 1 + static_cast<int>(rng2() % (n - k));
    El lhs = sys.kappa(n + d - 1, k, sys.kappa(n, l, g));
    El rhs = sys.kappa(n + d - 1, l + d - 1, sys.kappa(n, k, g));
    rep.c2.tally(sys.eq(n + 2 * d - 2, lhs, rhs),
                 "C2 sample " + std::to_string(s) + " n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " l=" + std::to_string(l));
  }

  std::mt19937_64 rng3(seed + 2);
  for (int s = 0; s < samples; ++s) {
    int n = 2 + static_cast<int>(rng3() % (n_max - 1));
    El g = sys.random_element(rng3, n);
    int k = 1 + static_cast<int>(rng3() % n);
    Permutation before = sys.rho(n, g);
    Permutation after = sys.rho(n + d - 1, sys.kappa(n, k, g));
    Permutation cloned = clone_perm(before, k, d);
    bool ok = true;
    for (int i = 1; i <= n + d - 1; ++i) {
      if (i >= k && i <= k + d - 1) continue;
      if (after.of(i) != cloned.of(i)) ok = false;
    }
    rep.c3.tally(ok ? EqVerdict::equal() : EqVerdict::unequal(),
                 "C3 sample " + std::to_string(s) + " n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Built-in systems and the documented broken mutants.
// ---------------------------------------------------------------------------
namespace systems {

inline int geometric_length(std::mt19937_64& rng, int cap) {
  int len = 0;
  while (len < cap && (rng() & 3u) != 0) ++len; // mean 3, capped
  return len;
}

inline BraidWord random_braid(std::mt19937_64& rng, int n, int cap = 8) {
  BraidWord b(n);
  if (n < 2) return b;
  int len = geometric_length(rng, cap);
  for (int i = 0; i < len; ++i)
    b.push(1 + static_cast<int>(rng() % (n - 1)), (rng() & 1u) ? 1 : -1);
  return b;
}

inline Permutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(v[i], v[rng() % (i + 1)]);
  return Permutation(v);
}

inline GroupWord random_word(std::mt19937_64& rng, const TablePtr& t, int cap = 8) {
  GroupWord w(t);
  if (t->num_generators() == 0) return w;
  int len = geometric_length(rng, cap);
  for (int i = 0; i < len; ++i)
    w.push(static_cast<int>(rng() % t->num_generators()), (rng() & 1u) ? 1 : -1);
  return w;
}

inline WreathElement random_wreath(std::mt19937_64& rng, const TablePtr& t, int n,
                                   int cap = 6) {
  std::vector<GroupWord> entries;
  entries.reserve(n);
  for (int i = 0; i < n; ++i) entries.push_back(random_word(rng, t, cap));
  if (t->kind() == TableKind::braided)
    return WreathElement(t, random_braid(rng, n, cap), std::move(entries));
  return WreathElement(t, random_perm(rng, n), std::move(entries));
}

// S_n with the pictorial cloning maps varsigma.
inline CloningSystem<Permutation> permutation_system(int d) {
  CloningSystem<Permutation> s;
  s.name = "perm_d" + std::to_string(d);
  s.d = d;
  s.random_element = [](std::mt19937_64& rng, int n) { return random_perm(rng, n); };
  s.rho = [](int, const Permutation& g) { return g; };
  s.kappa = [d](int, int k, const Permutation& g) { return clone_perm(g, k, d); };
  s.mul = [](int, const Permutation& a, const Permutation& b) { return compose(a, b); };
  s.eq = [](int, const Permutation& a, const Permutation& b) {
    return a == b ? EqVerdict::equal() : EqVerdict::unequal();
  };
  return s;
}

// B_n with the cabling maps vartheta.
inline CloningSystem<BraidWord> braid_system(int d) {
  CloningSystem<BraidWord> s;
  s.name = "braid_d" + std::to_string(d);
  s.d = d;
  s.random_element = [](std::mt19937_64& rng, int n) { return random_braid(rng, n); };
  s.rho = [](int, const BraidWord& g) { return perm_of(g); };
  s.kappa = [d](int, int k, const BraidWord& g) { return clone_braid(g, k, d); };
  s.mul = [](int, const BraidWord& a, const BraidWord& b) { return a * b; };
  s.eq = [](int, const BraidWord& a, const BraidWord& b) {
    return braid_eq(a, b) ? EqVerdict::equal() : EqVerdict::unequal();
  };
  return s;
}

enum class KappaMutation {
  none,
  drop_phi,         // forget the phi^{(k)}(root f_k) factor in the top
  clone_range_slot, // cable the top at rho(g)(k) instead of k
};

inline WreathElement mutated_kappa(const WreathElement& x, int k, KappaMutation m) {
  int n = x.degree();
  int d = x.table()->degree();
  WreathRecursion rec = wreath_recursion(x.entries()[k - 1]);
  std::vector<GroupWord> entries;
  for (int i = 0; i < k - 1; ++i) entries.push_back(x.entries()[i]);
  for (auto& s : rec.sections) entries.push_back(std::move(s));
  for (int i = k; i < n; ++i) entries.push_back(x.entries()[i]);
  int slot = m == KappaMutation::clone_range_slot ? wreath_rho(x).of(k) : k;
  if (x.kind() == TableKind::braided) {
    BraidWord top = clone_braid(x.top_braid(), slot, d);
    if (m != KappaMutation::drop_phi)
      top = top * shift_embed(std::get<BraidWord>(rec.root), k, n);
    return WreathElement(x.table(), std::move(top), std::move(entries));
  }
  Permutation top = clone_perm(x.top_perm(), slot, d);
  if (m != KappaMutation::drop_phi)
    top = compose(top, shift_perm(std::get<Permutation>(rec.root), k, n));
  return WreathElement(x.table(), std::move(top), std::move(entries));
}

// B_n wr G or S_n wr G over the given table.
inline CloningSystem<WreathElement> wreath_system(
    const TablePtr& table, KappaMutation mutation = KappaMutation::none) {
  CloningSystem<WreathElement> s;
  s.name = (table->kind() == TableKind::braided ? "braid_wr_" : "sym_wr_") +
           table->name();
  if (mutation == KappaMutation::drop_phi) s.name += "_mut_drop_phi";
  if (mutation == KappaMutation::clone_range_slot) s.name += "_mut_range_slot";
  s.d = table->degree();
  s.random_element = [table](std::mt19937_64& rng, int n) {
    return random_wreath(rng, table, n);
  };
  s.rho = [](int, const WreathElement& g) { return wreath_rho(g); };
  s.kappa = [mutation](int, int k, const WreathElement& g) {
    if (mutation == KappaMutation::none) return wreath_kappa(g, k);
    return mutated_kappa(g, k, mutation);
  };
  s.mul = [](int, const WreathElement& a, const WreathElement& b) {
    return wreath_mul(a, b);
  };
  s.eq = [](int, const WreathElement& a, const WreathElement& b) {
    return wreath_eq(a, b);
  };
  return s;
}

} // namespace systems

} // namespace brover

#endif
