#ifndef BROVER_FOREST_HPP
#define BROVER_FOREST_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brover {

// ---------------------------------------------------------------------------
// Finite d-ary trees and forests. Leaves are numbered 1..m left to right
// across the whole forest.
// ---------------------------------------------------------------------------
struct Tree {
  std::vector<Tree> children; // empty for a leaf, else exactly d children

  bool is_leaf() const { return children.empty(); }

  bool operator==(const Tree& o) const { return children == o.children; }
  bool operator!=(const Tree& o) const { return !(*this == o); }
};

inline Tree leaf() { return Tree{}; }

inline Tree caret(int d) {
  Tree t;
  t.children.resize(d);
  return t;
}

inline int num_leaves(const Tree& t) {
  if (t.is_leaf()) return 1;
  int n = 0;
  for (const auto& c : t.children) n += num_leaves(c);
  return n;
}

inline int num_carets(const Tree& t) {
  if (t.is_leaf()) return 0;
  int n = 1;
  for (const auto& c : t.children) n += num_carets(c);
  return n;
}

inline void validate_tree(const Tree& t, int d) {
  if (t.is_leaf()) return;
  if (static_cast<int>(t.children.size()) != d)
    throw std::invalid_argument("internal node without exactly d children");
  for (const auto& c : t.children) validate_tree(c, d);
}

struct Forest {
  int degree = 2;
  std::vector<Tree> trees;

  Forest() = default;
  Forest(int d, std::vector<Tree> ts) : degree(d), trees(std::move(ts)) {
    if (trees.empty()) throw std::invalid_argument("forest must be nonempty");
    for (const auto& t : trees) validate_tree(t, d);
  }

  static Forest trivial(int d, int roots) {
    return Forest(d, std::vector<Tree>(roots, Tree{}));
  }

  static Forest single(int d, Tree t) {
    std::vector<Tree> v;
    v.push_back(std::move(t));
    return Forest(d, std::move(v));
  }

  bool operator==(const Forest& o) const {
    return degree == o.degree && trees == o.trees;
  }
  bool operator!=(const Forest& o) const { return !(*this == o); }
};

inline int num_leaves(const Forest& f) {
  int n = 0;
  for (const auto& t : f.trees) n += num_leaves(t);
  return n;
}

inline int num_roots(const Forest& f) { return static_cast<int>(f.trees.size()); }

inline int num_carets(const Forest& f) {
  int n = 0;
  for (const auto& t : f.trees) n += num_carets(t);
  return n;
}

inline bool is_trivial(const Forest& f) {
  for (const auto& t : f.trees)
    if (!t.is_leaf()) return false;
  return true;
}

namespace forest_detail {

// Replaces leaf number k by a d-caret, counting leaves down through k.
inline bool add_caret_rec(Tree& t, int d, int& k) {
  if (t.is_leaf()) {
    if (--k == 0) {
      t = caret(d);
      return true;
    }
    return false;
  }
  for (auto& c : t.children)
    if (add_caret_rec(c, d, k)) return true;
  return false;
}

} // namespace forest_detail

inline Forest add_caret(const Forest& f, int k) {
  if (k < 1 || k > num_leaves(f)) throw std::out_of_range("leaf index");
  Forest out = f;
  int kk = k;
  for (auto& t : out.trees)
    if (forest_detail::add_caret_rec(t, f.degree, kk)) return out;
  throw std::logic_error("unreachable: leaf index not found");
}

inline Forest direct_sum(const Forest& a, const Forest& b) {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  Forest out = a;
  out.trees.insert(out.trees.end(), b.trees.begin(), b.trees.end());
  return out;
}

// ---------------------------------------------------------------------------
// Common expansion: the leafwise union of two forests with equal root
// counts, plus the caret scripts that rebuild it from either input.
// ---------------------------------------------------------------------------

namespace forest_detail {

inline Tree tree_union(const Tree& a, const Tree& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  Tree t;
  t.children.reserve(a.children.size());
  for (std::size_t i = 0; i < a.children.size(); ++i)
    t.children.push_back(tree_union(a.children[i], b.children[i]));
  return t;
}

// First leaf of `cur` (counting from base+1) that is internal in `target`.
inline std::optional<int> first_deficit(const Tree& cur, const Tree& target, int& base) {
  if (cur.is_leaf()) {
    ++base;
    if (!target.is_leaf()) return base;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < cur.children.size(); ++i)
    if (auto r = first_deficit(cur.children[i], target.children[i], base)) return r;
  return std::nullopt;
}

} // namespace forest_detail

struct CommonExpansion {
  Forest common;
  std::vector<int> carets1; // leaf indices replayable through add_caret
  std::vector<int> carets2;
};

inline CommonExpansion common_expansion(const Forest& f1, const Forest& f2) {
  if (f1.degree != f2.degree) throw std::invalid_argument("degree mismatch");
  if (num_roots(f1) != num_roots(f2))
    throw std::invalid_argument("common_expansion needs equal root counts");
  Forest common;
  common.degree = f1.degree;
  for (int i = 0; i < num_roots(f1); ++i)
    common.trees.push_back(forest_detail::tree_union(f1.trees[i], f2.trees[i]));
  auto script = [&](const Forest& from) {
    std::vector<int> steps;
    Forest cur = from;
    while (true) {
      int base = 0;
      std::optional<int> k;
      for (int i = 0; i < num_roots(cur) && !k; ++i)
        k = forest_detail::first_deficit(cur.trees[i], common.trees[i], base);
      if (!k) break;
      steps.push_back(*k);
      cur = add_caret(cur, *k);
    }
    return steps;
  };
  return {common, script(f1), script(f2)};
}

// ---------------------------------------------------------------------------
// Elementary forests and d-matchings of the linear graph L_{m-1}.
// ---------------------------------------------------------------------------

inline bool is_elementary(const Tree& t) {
  if (t.is_leaf()) return true;
  for (const auto& c : t.children)
    if (!c.is_leaf()) return false;
  return true;
}

inline bool is_elementary(const Forest& f) {
  for (const auto& t : f.trees)
    if (!is_elementary(t)) return false;
  return true;
}

// A d-matching on L_{m-1}: disjoint paths on d consecutive vertices,
// recorded by their left endpoints.
struct Matching {
  int d = 2;
  int m = 1;
  std::vector<int> starts;

  Matching() = default;
  Matching(int d_, int m_, std::vector<int> s) : d(d_), m(m_), starts(std::move(s)) {
    int prev_end = 0;
    for (int s0 : starts) {
      if (s0 <= prev_end) throw std::invalid_argument("matching paths overlap");
      if (s0 + d - 1 > m) throw std::invalid_argument("matching path out of range");
      prev_end = s0 + d - 1;
    }
  }

  bool operator==(const Matching& o) const {
    return d == o.d && m == o.m && starts == o.starts;
  }
};

inline Matching forest_to_matching(const Forest& e) {
  if (!is_elementary(e))
    throw std::invalid_argument("forest_to_matching needs an elementary forest");
  Matching mt;
  mt.d = e.degree;
  mt.m = num_leaves(e);
  int pos = 1;
  for (const auto& t : e.trees) {
    if (t.is_leaf()) {
      ++pos;
    } else {
      mt.starts.push_back(pos);
      pos += e.degree;
    }
  }
  return mt;
}

inline Forest matching_to_forest(const Matching& mt) {
  std::vector<Tree> trees;
  int pos = 1;
  std::size_t next = 0;
  while (pos <= mt.m) {
    if (next < mt.starts.size() && mt.starts[next] == pos) {
      trees.push_back(caret(mt.d));
      pos += mt.d;
      ++next;
    } else {
      if (next < mt.starts.size() && mt.starts[next] < pos)
        throw std::invalid_argument("matching starts not sorted");
      trees.push_back(leaf());
      ++pos;
    }
  }
  if (next != mt.starts.size() || pos != mt.m + 1)
    throw std::invalid_argument("matching does not fit its vertex count");
  return Forest(mt.d, std::move(trees));
}

// ---------------------------------------------------------------------------
// Text notation. A leaf is the empty string, a caret wraps its children in
// parentheses: binary caret `(,)`, ternary `(,,)`. Trees of a forest are
// separated by `|`. `^` abbreviates the binary caret and `^2` the left-leaning
// two-caret tree.
// ---------------------------------------------------------------------------

namespace forest_detail {

inline Tree parse_tree_body(const std::string& s, std::size_t& pos);

inline void skip_space(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline Tree parse_tree_body(const std::string& s, std::size_t& pos) {
  skip_space(s, pos);
  if (pos >= s.size() || s[pos] == ',' || s[pos] == ')') return leaf();
  if (s[pos] == '^') {
    ++pos;
    if (pos < s.size() && s[pos] == '2') {
      ++pos;
      Tree t = caret(2);
      t.children[0] = caret(2);
      return t;
    }
    return caret(2);
  }
  if (s[pos] != '(') throw std::invalid_argument("bad tree syntax near: " + s.substr(pos));
  ++pos;
  Tree t;
  while (true) {
    t.children.push_back(parse_tree_body(s, pos));
    skip_space(s, pos);
    if (pos >= s.size()) throw std::invalid_argument("unterminated tree: " + s);
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] == ')') {
      ++pos;
      return t;
    }
    throw std::invalid_argument("bad tree syntax near: " + s.substr(pos));
  }
}

inline std::string replace_wedges(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, 3, "\xe2\x88\xa7") == 0) { // the wedge glyph
      out += '^';
      i += 3;
    } else {
      out += s[i++];
    }
  }
  return out;
}

} // namespace forest_detail

inline Tree parse_tree(const std::string& text, int d) {
  std::string s = forest_detail::replace_wedges(text);
  std::size_t pos = 0;
  Tree t = forest_detail::parse_tree_body(s, pos);
  forest_detail::skip_space(s, pos);
  if (pos != s.size()) throw std::invalid_argument("trailing tree input: " + text);
  validate_tree(t, d);
  return t;
}

inline Forest parse_forest(const std::string& text, int d) {
  std::string s = forest_detail::replace_wedges(text);
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '|' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::vector<Tree> trees;
  for (const auto& p : parts) trees.push_back(parse_tree(p, d));
  return Forest(d, std::move(trees));
}

inline std::string tree_str(const Tree& t) {
  if (t.is_leaf()) return "";
  std::string s = "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ',';
    s += tree_str(t.children[i]);
  }
  s += ')';
  return s;
}

inline std::string forest_str(const Forest& f) {
  std::string s;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) s += '|';
    s += tree_str(f.trees[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// DOT export.
// ---------------------------------------------------------------------------

namespace forest_detail {

inline int tree_dot_rec(std::ostream& os, const Tree& t, int& next_id, int& next_leaf) {
  int id = next_id++;
  if (t.is_leaf()) {
    os << "  n" << id << " [shape=point, xlabel=\"" << next_leaf++ << "\"];\n";
    return id;
  }
  os << "  n" << id << " [shape=circle, label=\"\"];\n";
  for (const auto& c : t.children) {
    int cid = tree_dot_rec(os, c, next_id, next_leaf);
    os << "  n" << id << " -> n" << cid << ";\n";
  }
  return id;
}

} // namespace forest_detail

inline std::string forest_dot(const Forest& f, const std::string& name = "forest") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  int next_id = 0, next_leaf = 1;
  for (const auto& t : f.trees)
    forest_detail::tree_dot_rec(os, t, next_id, next_leaf);
  os << "}\n";
  return os.str();
}

inline std::string matching_dot(const Matching& mt) {
  std::ostringstream os;
  os << "graph matching {\n  rankdir=LR;\n";
  for (int v = 1; v <= mt.m; ++v)
    os << "  v" << v << " [shape=point, xlabel=\"" << v << "\"];\n";
  for (int v = 1; v < mt.m; ++v)
    os << "  v" << v << " -- v" << v + 1 << " [style=dotted];\n";
  for (int s : mt.starts)
    for (int j = 0; j < mt.d - 1; ++j)
      os << "  v" << s + j << " -- v" << s + j + 1 << " [penwidth=3];\n";
  os << "}\n";
  return os.str();
}

} // namespace brover

#endif
