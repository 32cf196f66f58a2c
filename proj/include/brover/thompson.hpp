#ifndef BROVER_THOMPSON_HPP
#define BROVER_THOMPSON_HPP

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brover/cloning.hpp"
#include "brover/forest.hpp"
#include "brover/grig.hpp"

namespace brover {

// ---------------------------------------------------------------------------
// Groupoid element [F_-, g, F_+]: left forest, wreath middle, right forest,
// with matching leaf counts. Thompson-like group elements have a single
// tree on each side.
// ---------------------------------------------------------------------------
struct Triple {
  Forest left;
  WreathElement middle;
  Forest right;

  Triple(Forest l, WreathElement m, Forest r)
      : left(std::move(l)), middle(std::move(m)), right(std::move(r)) {
    if (num_leaves(left) != middle.degree() || num_leaves(right) != middle.degree())
      throw std::invalid_argument("triple leaf counts disagree with middle degree");
    if (left.degree != middle.table()->degree() ||
        right.degree != middle.table()->degree())
      throw std::invalid_argument("forest degree disagrees with table degree");
  }

  const TablePtr& table() const { return middle.table(); }

  static Triple identity(const TablePtr& table, const Forest& f) {
    return Triple(f, WreathElement::identity(table, num_leaves(f)), f);
  }

  static Triple identity_on(const TablePtr& table, int roots) {
    Forest f = Forest::trivial(table->degree(), roots);
    return Triple(f, WreathElement::identity(table, roots), f);
  }
};

inline int feet(const Triple& t) { return num_roots(t.right); }

inline std::string triple_str(const Triple& t) {
  std::ostringstream os;
  os << '[' << forest_str(t.left) << ';';
  if (t.middle.kind() == TableKind::braided)
    os << t.middle.top_braid().str();
  else
    os << t.middle.top_perm().str();
  os << ";(";
  for (int i = 0; i < t.middle.degree(); ++i) {
    if (i) os << ',';
    os << t.middle.entries()[i].str();
  }
  os << ");" << forest_str(t.right) << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Expansion, inversion, multiplication.
// ---------------------------------------------------------------------------

// Expansion at right leaf k: the right forest gains a caret at k, the left
// forest at rho(g)(k), and the middle becomes (g) kappa_k.
inline Triple expand(const Triple& t, int k) {
  int n = t.middle.degree();
  if (k < 1 || k > n) throw std::out_of_range("expansion leaf index");
  int j = wreath_rho(t.middle).of(k);
  return Triple(add_caret(t.left, j), wreath_kappa(t.middle, k),
                add_caret(t.right, k));
}

// Expansion forcing the new left caret to sit at leaf j.
inline Triple expand_left(const Triple& t, int j) {
  int k = wreath_rho(t.middle).inverse().of(j);
  return Triple(add_caret(t.left, j), wreath_kappa(t.middle, k),
                add_caret(t.right, k));
}

inline Triple invert(const Triple& t) {
  return Triple(t.right, wreath_inverse(t.middle), t.left);
}

inline Triple multiply(const Triple& x, const Triple& y) {
  if (x.table() != y.table())
    throw std::invalid_argument("triples over different tables");
  if (num_roots(x.right) != num_roots(y.left))
    throw std::invalid_argument("groupoid composition undefined: root mismatch");
  CommonExpansion ce = common_expansion(x.right, y.left);
  Triple xe = x;
  for (int k : ce.carets1) xe = expand(xe, k);
  Triple ye = y;
  for (int j : ce.carets2) ye = expand_left(ye, j);
  assert(xe.right == ye.left);
  return Triple(xe.left, wreath_mul(xe.middle, ye.middle), ye.right);
}

// ---------------------------------------------------------------------------
// The unsection oracle: given a root part x and d section words, find a word
// whose wreath recursion is (x, sections). Exact for the trivial,
// self-identical and Z wr Z tables; a budgeted best-first search for the
// Grigorchuk tables; syntactic search for anything else.
// ---------------------------------------------------------------------------

enum class UnsectionStatus { found, impossible, unknown };

struct UnsectionResult {
  UnsectionStatus status = UnsectionStatus::unknown;
  GroupWord word;
};

namespace thompson_detail {

inline long long braid2_exponent(const BraidWord& b) {
  // B_2 is infinite cyclic on zeta
  long long e = 0;
  for (const auto& l : b.letters()) e += l.second;
  return e;
}

inline UnsectionResult unsection_trivial(const TablePtr& table, const RootPart& x) {
  bool root_trivial = table->kind() == TableKind::braided
                          ? braid_is_trivial(std::get<BraidWord>(x))
                          : std::get<Permutation>(x).is_identity();
  if (!root_trivial) return {UnsectionStatus::impossible, GroupWord(table)};
  return {UnsectionStatus::found, GroupWord(table)};
}

inline UnsectionResult unsection_self_identical(const TablePtr& table,
                                                const RootPart& x,
                                                const std::vector<GroupWord>& secs) {
  for (std::size_t i = 1; i < secs.size(); ++i)
    if (!eq_in(secs[0], secs[i]).is_equal())
      return {UnsectionStatus::impossible, GroupWord(table)};
  if (!braid_eq(root_braid(secs[0]), std::get<BraidWord>(x)))
    return {UnsectionStatus::impossible, GroupWord(table)};
  return {UnsectionStatus::found, secs[0]};
}

// Exact inversion through the normal form: the sections of
// (prod b_n^{p_n}) a^s have shifts (t,t) for s = 2t and (t,t+1) for s = 2t+1,
// with the level function split over odd and even positions.
inline UnsectionResult unsection_zwrz(const TablePtr& table, const RootPart& x,
                                      const std::vector<GroupWord>& secs) {
  ZwrZNormalForm u = zwrz_normal_form(secs[0]);
  ZwrZNormalForm v = zwrz_normal_form(secs[1]);
  ZwrZNormalForm w;
  if (u.shift == v.shift) {
    w.shift = 2 * u.shift;
    for (const auto& [kk, e] : u.levels) w.add_b(2 * kk - 1, e);
    for (const auto& [kk, e] : v.levels) w.add_b(2 * kk, e);
  } else if (v.shift == u.shift + 1) {
    w.shift = 2 * u.shift + 1;
    for (const auto& [kk, e] : u.levels) w.add_b(2 * kk, e);
    for (const auto& [kk, e] : v.levels) w.add_b(2 * kk - 1, e);
  } else {
    return {UnsectionStatus::impossible, GroupWord(table)};
  }
  if (w.root_exponent() != braid2_exponent(std::get<BraidWord>(x)))
    return {UnsectionStatus::impossible, GroupWord(table)};
  return {UnsectionStatus::found, zwrz_word_from_normal_form(table, w)};
}

// Best-first search over words, states deduplicated by the reduced forms of
// their sections. Sound: every hit is verified semantically. Incomplete:
// exhausting the node budget yields unknown.
inline UnsectionResult unsection_search(const TablePtr& table, const RootPart& x,
                                        const std::vector<GroupWord>& secs,
                                        const Config& cfg) {
  const int d = table->degree();
  const bool brgrig = table->solver() == TableSolver::brgrig;
  const bool grig = table->solver() == TableSolver::grig;

  // root targets
  long long target_exp = 0;
  if (table->kind() == TableKind::braided) {
    if (d == 2) target_exp = braid2_exponent(std::get<BraidWord>(x));
  } else {
    target_exp = std::get<Permutation>(x).is_identity() ? 0 : 1;
  }

  std::vector<long long> target_aexp(d, 0);
  if (brgrig)
    for (int j = 0; j < d; ++j) target_aexp[j] = grig_reduce(secs[j]).a_exponent();

  auto section_key = [&](const std::vector<GroupWord>& ss, long long rexp) {
    std::ostringstream os;
    for (const auto& s : ss) {
      if (brgrig)
        os << grig_reduce(s).str();
      else
        os << s.str();
      os << '|';
    }
    os << rexp;
    return os.str();
  };

  auto heuristic = [&](const std::vector<GroupWord>& ss, long long rexp) {
    long long h = 0;
    if (brgrig) {
      long long a1 = grig_reduce(ss[0]).a_exponent();
      long long a2 = grig_reduce(ss[1]).a_exponent();
      long long straight = std::abs(a1 - target_aexp[0]) + std::abs(a2 - target_aexp[1]);
      long long crossed = std::abs(a1 - target_aexp[1]) + std::abs(a2 - target_aexp[0]);
      h += std::min(straight, crossed);
      if (((rexp - target_exp) % 2 + 2) % 2 != 0) h += 1;
    } else if (grig) {
      if (((rexp - target_exp) % 2 + 2) % 2 != 0) h += 1;
    }
    return h;
  };

  auto semantically_done = [&](const std::vector<GroupWord>& ss, long long rexp) {
    if (brgrig) {
      if (((rexp - target_exp) % 2 + 2) % 2 != 0) return false;
      for (int j = 0; j < d; ++j)
        if (!grig_is_identity(ss[j] * secs[j].inverse())) return false;
      return true;
    }
    if (grig) {
      if (rexp % 2 != target_exp % 2) return false;
      for (int j = 0; j < d; ++j)
        if (!grig_is_identity_symmetric(ss[j] * secs[j].inverse())) return false;
      return true;
    }
    // generic: syntactic sections, exact root comparison
    for (int j = 0; j < d; ++j)
      if (!ss[j].same_letters(secs[j])) return false;
    return true;
  };

  struct Node {
    long long priority;
    int cost;
    std::vector<GroupWord::Letter> word;
    std::vector<GroupWord> secs;
    long long rexp;
    BraidWord root_b;
    Permutation root_p;
  };
  auto cmp = [](const Node& a, const Node& b) { return a.priority > b.priority; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
  std::set<std::string> seen;

  Node start;
  start.cost = 0;
  start.secs.assign(d, GroupWord(table));
  start.rexp = 0;
  start.root_b = BraidWord(d);
  start.root_p = Permutation::identity(d);
  start.priority = heuristic(start.secs, 0);
  open.push(start);

  auto finish = [&](const Node& n) {
    GroupWord w(table, n.word);
    if (brgrig) {
      long long delta = target_exp - n.rexp; // even by the goal test
      int ga = table->generator_index("a");
      int sign = delta >= 0 ? 1 : -1;
      for (long long i = 0; i < (delta >= 0 ? delta : -delta); ++i) w.push(ga, sign);
    }
    return w;
  };

  int budget = cfg.unsection_nodes;
  while (!open.empty() && budget-- > 0) {
    Node n = open.top();
    open.pop();
    std::string key = section_key(n.secs, n.rexp);
    if (seen.count(key)) continue;
    seen.insert(key);
    bool root_ok = true;
    if (!brgrig && !grig) {
      // generic tables carry the full root part
      if (table->kind() == TableKind::braided)
        root_ok = braid_eq(n.root_b, std::get<BraidWord>(x));
      else
        root_ok = n.root_p == std::get<Permutation>(x);
    }
    if (root_ok && semantically_done(n.secs, n.rexp))
      return {UnsectionStatus::found, finish(n)};
    for (int g = 0; g < table->num_generators(); ++g) {
      for (int sign : {1, -1}) {
        Node child;
        child.cost = n.cost + 1;
        child.word = n.word;
        child.word.emplace_back(g, sign);
        WreathRecursion rec = detail::letter_recursion(*table, g, sign);
        Permutation sigma = detail::root_perm_of(rec.root);
        child.secs.reserve(d);
        for (int i = 1; i <= d; ++i)
          child.secs.push_back(n.secs[sigma.of(i) - 1] * rec.sections[i - 1]);
        if (table->kind() == TableKind::braided) {
          child.root_b = n.root_b * std::get<BraidWord>(rec.root);
          child.rexp = d == 2 ? braid2_exponent(child.root_b) : 0;
          child.root_p = n.root_p;
        } else {
          child.root_p = compose(n.root_p, std::get<Permutation>(rec.root));
          child.rexp = child.root_p.is_identity() ? 0 : 1;
          child.root_b = n.root_b;
        }
        child.priority = child.cost + heuristic(child.secs, child.rexp);
        if (!seen.count(section_key(child.secs, child.rexp)))
          open.push(std::move(child));
      }
    }
  }
  return {UnsectionStatus::unknown, GroupWord(table)};
}

} // namespace thompson_detail

inline UnsectionResult unsection(const TablePtr& table, const RootPart& x,
                                 const std::vector<GroupWord>& secs,
                                 const Config& cfg = default_config()) {
  if (static_cast<int>(secs.size()) != table->degree())
    throw std::invalid_argument("unsection needs exactly d sections");
  switch (table->solver()) {
    case TableSolver::trivial:
      return thompson_detail::unsection_trivial(table, x);
    case TableSolver::self_identical_braid:
      return thompson_detail::unsection_self_identical(table, x, secs);
    case TableSolver::zwrz:
      return thompson_detail::unsection_zwrz(table, x, secs);
    default:
      return thompson_detail::unsection_search(table, x, secs, cfg);
  }
}

// ---------------------------------------------------------------------------
// Reduction: the reverse of an expansion at right-caret position k.
// ---------------------------------------------------------------------------

namespace thompson_detail {

// Leftmost-leaf indices of carets whose children are all leaves.
inline void reducible_rec(const Tree& t, int& next_leaf, std::vector<int>& out) {
  if (t.is_leaf()) {
    ++next_leaf;
    return;
  }
  bool all_leaves = true;
  for (const auto& c : t.children)
    if (!c.is_leaf()) all_leaves = false;
  if (all_leaves) {
    out.push_back(next_leaf);
    next_leaf += static_cast<int>(t.children.size());
    return;
  }
  for (const auto& c : t.children) reducible_rec(c, next_leaf, out);
}

inline std::vector<int> reducible_blocks(const Forest& f) {
  std::vector<int> out;
  int next_leaf = 1;
  for (const auto& t : f.trees) reducible_rec(t, next_leaf, out);
  return out;
}

inline bool remove_caret_rec(Tree& t, int& next_leaf, int target) {
  if (t.is_leaf()) {
    ++next_leaf;
    return false;
  }
  bool all_leaves = true;
  for (const auto& c : t.children)
    if (!c.is_leaf()) all_leaves = false;
  if (all_leaves) {
    if (next_leaf == target) {
      t = leaf();
      return true;
    }
    next_leaf += static_cast<int>(t.children.size());
    return false;
  }
  for (auto& c : t.children)
    if (remove_caret_rec(c, next_leaf, target)) return true;
  return false;
}

inline std::optional<Forest> remove_caret(const Forest& f, int leaf_start) {
  Forest out = f;
  int next_leaf = 1;
  for (auto& t : out.trees)
    if (remove_caret_rec(t, next_leaf, leaf_start)) return out;
  return std::nullopt;
}

// Collapse of a permutation along a parallel block: the block at k maps to
// the block at j; everything else is relabeled.
inline std::optional<Permutation> perm_uncone(const Permutation& p, int k, int j,
                                              int d) {
  int nn = p.degree();
  int n = nn - d + 1;
  std::vector<int> images(n);
  auto collapse = [&](int v) {
    if (v < j) return v;
    if (v <= j + d - 1) return j;
    return v - d + 1;
  };
  for (int q = 1; q <= n; ++q) {
    int src = q < k ? q : (q == k ? k : q + d - 1);
    images[q - 1] = collapse(p.of(src));
  }
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) return std::nullopt;
    seen[v - 1] = true;
  }
  return Permutation(images);
}

} // namespace thompson_detail

// Attempts the reduction whose expansion added the right caret at leaf k.
// Empty means "not reducible here"; when the only obstruction was an
// inconclusive unsection oracle, *oracle_unknown is set.
inline std::optional<Triple> reduce_at(const Triple& t, int k,
                                       const Config& cfg = default_config(),
                                       bool* oracle_unknown = nullptr) {
  const TablePtr& table = t.table();
  int d = table->degree();
  int nn = t.middle.degree();
  int n = nn - d + 1;
  if (n < 1) return std::nullopt;

  auto right_blocks = thompson_detail::reducible_blocks(t.right);
  if (std::find(right_blocks.begin(), right_blocks.end(), k) == right_blocks.end())
    return std::nullopt;

  // the right block must map to a parallel left block
  Permutation rho = wreath_rho(t.middle);
  int j = nn + 1;
  std::set<int> images;
  for (int i = k; i <= k + d - 1; ++i) {
    images.insert(rho.of(i));
    j = std::min(j, rho.of(i));
  }
  if (static_cast<int>(images.size()) != d || *images.rbegin() != j + d - 1)
    return std::nullopt;
  auto left_blocks = thompson_detail::reducible_blocks(t.left);
  if (std::find(left_blocks.begin(), left_blocks.end(), j) == left_blocks.end())
    return std::nullopt;

  // collapse the top part
  std::optional<BraidWord> local_braid;
  std::optional<Permutation> local_perm;
  BraidWord top_b(1);
  Permutation top_p;
  if (table->kind() == TableKind::braided) {
    std::set<int> clones;
    for (int i = k + 1; i <= k + d - 1; ++i) clones.insert(i);
    BraidWord cand = delete_strands(t.middle.top_braid(), clones);
    BraidWord residue = clone_braid(cand, k, d).inverse() * t.middle.top_braid();
    local_braid = supported_on_block(residue, k, d);
    if (!local_braid) return std::nullopt;
    top_b = std::move(cand);
  } else {
    auto cand = thompson_detail::perm_uncone(t.middle.top_perm(), k, j, d);
    if (!cand) return std::nullopt;
    std::vector<int> block(d);
    for (int q = 1; q <= d; ++q) block[q - 1] = t.middle.top_perm().of(k + q - 1) - j + 1;
    Permutation local(block);
    if (!(compose(clone_perm(*cand, k, d), shift_perm(local, k, n)) ==
          t.middle.top_perm()))
      return std::nullopt;
    local_perm = local;
    top_p = std::move(*cand);
  }

  // the entries k..k+d-1 must be the sections of a single table element
  std::vector<GroupWord> block_secs(t.middle.entries().begin() + (k - 1),
                                    t.middle.entries().begin() + (k - 1) + d);
  RootPart local_root;
  if (table->kind() == TableKind::braided)
    local_root = *local_braid;
  else
    local_root = *local_perm;
  UnsectionResult un = unsection(table, local_root, block_secs, cfg);
  if (un.status == UnsectionStatus::unknown) {
    if (oracle_unknown) *oracle_unknown = true;
    return std::nullopt;
  }
  if (un.status == UnsectionStatus::impossible) return std::nullopt;

  std::vector<GroupWord> entries;
  entries.reserve(n);
  for (int i = 0; i < k - 1; ++i) entries.push_back(t.middle.entries()[i]);
  entries.push_back(un.word);
  for (int i = k + d - 1; i < nn; ++i) entries.push_back(t.middle.entries()[i]);

  auto new_left = thompson_detail::remove_caret(t.left, j);
  auto new_right = thompson_detail::remove_caret(t.right, k);
  if (!new_left || !new_right) return std::nullopt;
  if (table->kind() == TableKind::braided)
    return Triple(*new_left, WreathElement(table, top_b, std::move(entries)),
                  *new_right);
  return Triple(*new_left, WreathElement(table, top_p, std::move(entries)),
                *new_right);
}

// Greedy reduction to a fixpoint, leftmost reducible caret first.
inline Triple reduce_fully(const Triple& t, const Config& cfg = default_config(),
                           bool* oracle_unknown = nullptr) {
  Triple cur = t;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int k : thompson_detail::reducible_blocks(cur.right)) {
      if (auto r = reduce_at(cur, k, cfg, oracle_unknown)) {
        cur = std::move(*r);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Equality. Representatives of the identity are exactly the [U, 1, U], so
// after normalization the verdict only needs shape equality plus an exact
// middle check; unknown can only come from an inexact entry solver.
// ---------------------------------------------------------------------------

inline EqVerdict identity_test(const Triple& t, const Config& cfg = default_config()) {
  bool partial = false;
  Triple cur = reduce_fully(t, cfg, &partial);
  if (!(cur.left == cur.right)) return EqVerdict::unequal();
  if (cur.middle.kind() == TableKind::braided) {
    if (!braid_is_trivial(cur.middle.top_braid())) return EqVerdict::unequal();
  } else {
    if (!cur.middle.top_perm().is_identity()) return EqVerdict::unequal();
  }
  bool any_unknown = false;
  for (const auto& e : cur.middle.entries()) {
    EqVerdict v = is_identity_word(e, cfg);
    if (v.is_unequal()) return EqVerdict::unequal();
    if (v.is_unknown()) any_unknown = true;
  }
  return any_unknown ? EqVerdict::unknown(cfg.depth) : EqVerdict::equal();
}

inline EqVerdict eq(const Triple& x, const Triple& y,
                    const Config& cfg = default_config()) {
  return identity_test(multiply(x, invert(y)), cfg);
}

// ---------------------------------------------------------------------------
// The pi projection onto the symmetric-kind groupoid.
// ---------------------------------------------------------------------------

inline WreathElement project_pi(const WreathElement& x) {
  const TablePtr& target = x.table()->pi_image();
  if (!target)
    throw std::invalid_argument("table has no registered pi image");
  std::vector<GroupWord> entries;
  entries.reserve(x.degree());
  for (const auto& e : x.entries()) entries.push_back(grig_project(e, target));
  return WreathElement(target, perm_of(x.top_braid()), std::move(entries));
}

inline Triple project_pi(const Triple& t) {
  return Triple(t.left, project_pi(t.middle), t.right);
}

// ---------------------------------------------------------------------------
// Purification (the section 5 calculus over the braided Grigorchuk group):
// expand until every entry lies in Z = <b,c,d>, i.e. its reduced form has no
// a terms. The halving bound on reduced sections forces termination.
// ---------------------------------------------------------------------------

struct Purification {
  Forest forest;  // F with [1,g,1][F,1,1] = [F',g',1]
  Triple result;  // [F',g',1]
};

inline Purification purify(const WreathElement& g,
                           const Config& cfg = default_config()) {
  (void)cfg;
  if (g.table()->solver() != TableSolver::brgrig)
    throw std::invalid_argument("purify expects entries over the braided Grigorchuk table");
  int q = g.degree();
  Triple t(Forest::trivial(2, q), g, Forest::trivial(2, q));
  while (true) {
    int pick = 0;
    for (int i = 1; i <= t.middle.degree(); ++i) {
      if (!grig_reduce(t.middle.entries()[i - 1]).a_terms().empty()) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    t = expand(t, pick);
  }
  Forest f = t.right;
  Triple result(t.left, t.middle, Forest::trivial(2, t.middle.degree()));
  return {std::move(f), std::move(result)};
}

// x ~_Z y: their quotient reduces to a forest-free element of B_m wr Z.
inline EqVerdict eq_mod_Z(const Triple& x, const Triple& y,
                          const Config& cfg = default_config()) {
  if (x.table()->solver() != TableSolver::brgrig)
    throw std::invalid_argument("eq_mod_Z expects the braided Grigorchuk table");
  bool partial = false;
  Triple z = reduce_fully(multiply(invert(x), y), cfg, &partial);
  if (is_trivial(z.left) && is_trivial(z.right)) {
    for (const auto& e : z.middle.entries())
      if (!grig_reduce(e).a_terms().empty()) return EqVerdict::unequal();
    return EqVerdict::equal();
  }
  return partial ? EqVerdict::unknown(cfg.unsection_nodes) : EqVerdict::unequal();
}

// ---------------------------------------------------------------------------
// Text format: [ <forest> ; <top> ; <g1>, <g2>, ... ; <forest> ], the top
// field optional for a trivial top part.
// ---------------------------------------------------------------------------

inline Triple parse_triple(const std::string& text, const TablePtr& table) {
  std::string s = text;
  auto first = s.find('[');
  auto last = s.rfind(']');
  if (first == std::string::npos || last == std::string::npos || last <= first)
    throw std::invalid_argument("triple literal needs [ ... ]");
  s = s.substr(first + 1, last - first - 1);
  std::vector<std::string> fields;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ';' && depth == 0) {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 3 && fields.size() != 4)
    throw std::invalid_argument("triple literal needs 3 or 4 fields");
  int d = table->degree();
  Forest left = parse_forest(fields.front(), d);
  Forest right = parse_forest(fields.back(), d);
  int n = num_leaves(left);
  std::string top_text = fields.size() == 4 ? fields[1] : "";
  std::string entries_text = fields[fields.size() == 4 ? 2 : 1];

  // strip optional parentheses around the entry list
  {
    auto b = entries_text.find_first_not_of(" \t");
    auto e = entries_text.find_last_not_of(" \t");
    if (b != std::string::npos && entries_text[b] == '(' && entries_text[e] == ')')
      entries_text = entries_text.substr(b + 1, e - b - 1);
  }
  std::vector<GroupWord> entries;
  {
    std::string w;
    for (char c : entries_text) {
      if (c == ',') {
        entries.push_back(table->word(w));
        w.clear();
      } else {
        w += c;
      }
    }
    entries.push_back(table->word(w));
  }
  if (static_cast<int>(entries.size()) != n)
    throw std::invalid_argument("entry count disagrees with leaf count");
  if (table->kind() == TableKind::braided) {
    BraidWord top = top_text.find_first_not_of(" \t") == std::string::npos
                        ? BraidWord(n)
                        : parse_braid("B" + std::to_string(n) + ":" + top_text);
    return Triple(left, WreathElement(table, top, std::move(entries)), right);
  }
  Permutation top = top_text.find_first_not_of(" \t") == std::string::npos
                        ? Permutation::identity(n)
                        : parse_permutation(top_text, n);
  return Triple(left, WreathElement(table, top, std::move(entries)), right);
}

// Figure-style strand diagram: left tree on top, right tree below, strands
// labeled by the middle entries.
inline std::string triple_dot(const Triple& t) {
  std::ostringstream os;
  os << "digraph triple {\n";
  os << "  label=\"top: "
     << (t.middle.kind() == TableKind::braided ? t.middle.top_braid().str()
                                               : t.middle.top_perm().str())
     << "\";\n";
  int next_id = 0;
  int next_leaf = 1;
  os << "  subgraph cluster_left {\n    label=\"domain tree\";\n";
  std::ostringstream left_os;
  std::vector<int> left_leaf_ids;
  {
    struct Walk {
      static int rec(std::ostream& o, const Tree& tr, int& id, int& leafno,
                     std::vector<int>& leaf_ids, const char* prefix) {
        int me = id++;
        if (tr.is_leaf()) {
          o << "    " << prefix << me << " [shape=point];\n";
          leaf_ids.push_back(me);
          ++leafno;
          return me;
        }
        o << "    " << prefix << me << " [shape=circle, label=\"\"];\n";
        for (const auto& c : tr.children) {
          int cid = rec(o, c, id, leafno, leaf_ids, prefix);
          o << "    " << prefix << me << " -> " << prefix << cid << ";\n";
        }
        return me;
      }
    };
    for (const auto& tr : t.left.trees)
      Walk::rec(left_os, tr, next_id, next_leaf, left_leaf_ids, "L");
  }
  os << left_os.str() << "  }\n";
  next_id = 0;
  next_leaf = 1;
  std::ostringstream right_os;
  std::vector<int> right_leaf_ids;
  {
    struct Walk {
      static int rec(std::ostream& o, const Tree& tr, int& id, int& leafno,
                     std::vector<int>& leaf_ids, const char* prefix) {
        int me = id++;
        if (tr.is_leaf()) {
          o << "    " << prefix << me << " [shape=point];\n";
          leaf_ids.push_back(me);
          ++leafno;
          return me;
        }
        o << "    " << prefix << me << " [shape=circle, label=\"\"];\n";
        for (const auto& c : tr.children) {
          int cid = rec(o, c, id, leafno, leaf_ids, prefix);
          o << "    " << prefix << me << " -> " << prefix << cid << ";\n";
        }
        return me;
      }
    };
    for (const auto& tr : t.right.trees)
      Walk::rec(right_os, tr, next_id, next_leaf, right_leaf_ids, "R");
  }
  os << "  subgraph cluster_right {\n    label=\"range tree\";\n"
     << right_os.str() << "  }\n";
  Permutation rho = wreath_rho(t.middle);
  for (int i = 1; i <= t.middle.degree(); ++i) {
    os << "  L" << left_leaf_ids[rho.of(i) - 1] << " -> R" << right_leaf_ids[i - 1]
       << " [style=dashed, label=\"" << t.middle.entries()[i - 1].str() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace brover

#endif
