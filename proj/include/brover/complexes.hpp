#ifndef BROVER_COMPLEXES_HPP
#define BROVER_COMPLEXES_HPP

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brover {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Finite abstract simplicial complex, stored by its maximal facets. Vertex
// labels are arbitrary strings; simplices are sorted id lists.
// ---------------------------------------------------------------------------
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  int add_vertex(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    labels_.push_back(label);
    index_[label] = static_cast<int>(labels_.size()) - 1;
    return static_cast<int>(labels_.size()) - 1;
  }

  void add_facet_ids(std::vector<int> f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= num_vertices()) throw std::out_of_range("facet vertex id");
    facets_.push_back(std::move(f));
  }

  void add_facet(const std::vector<std::string>& labels) {
    std::vector<int> f;
    f.reserve(labels.size());
    for (const auto& l : labels) f.push_back(add_vertex(l));
    add_facet_ids(std::move(f));
  }

  // drops duplicated and dominated facets
  void normalize() {
    std::sort(facets_.begin(), facets_.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<int>> keep;
    for (const auto& f : facets_) {
      bool dominated = false;
      for (const auto& g : keep)
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          dominated = true;
          break;
        }
      if (!dominated) keep.push_back(f);
    }
    std::sort(keep.begin(), keep.end());
    facets_ = std::move(keep);
  }

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  bool empty() const {
    for (const auto& f : facets_)
      if (!f.empty()) return false;
    return true;
  }

  int dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  // all k-simplices, sorted
  std::vector<std::vector<int>> simplices(int k) const {
    std::set<std::vector<int>> out;
    for (const auto& f : facets_) {
      if (static_cast<int>(f.size()) < k + 1) continue;
      std::vector<int> pick;
      subsets(f, k + 1, 0, pick, out);
    }
    return {out.begin(), out.end()};
  }

  bool has_simplex(std::vector<int> s) const {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const auto& f : facets_)
      if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
    return false;
  }

  std::vector<int> face_counts() const {
    std::vector<int> counts;
    for (int k = 0; k <= dimension(); ++k)
      counts.push_back(static_cast<int>(simplices(k).size()));
    return counts;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    int sign = 1;
    for (int c : face_counts()) {
      chi += sign * c;
      sign = -sign;
    }
    return chi;
  }

private:
  static void subsets(const std::vector<int>& f, int want, std::size_t from,
                      std::vector<int>& pick, std::set<std::vector<int>>& out) {
    if (static_cast<int>(pick.size()) == want) {
      out.insert(pick);
      return;
    }
    for (std::size_t i = from; i < f.size(); ++i) {
      pick.push_back(f[i]);
      subsets(f, want, i + 1, pick, out);
      pick.pop_back();
    }
  }

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> facets_;
};

// One facet per line, space-separated vertex labels.
inline SimplicialComplex parse_complex(std::istream& in) {
  SimplicialComplex x;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::vector<std::string> f;
    std::string tok;
    while (is >> tok) f.push_back(tok);
    if (!f.empty()) x.add_facet(f);
  }
  x.normalize();
  return x;
}

// ---------------------------------------------------------------------------
// Integer Smith normal form, dense, pivoting by smallest nonzero magnitude.
// ---------------------------------------------------------------------------

using Matrix = std::vector<std::vector<BigInt>>;

struct SnfResult {
  int rank = 0;
  std::vector<BigInt> divisors; // nonzero diagonal, divisibility chain
};

inline SnfResult smith_normal_form(Matrix a) {
  SnfResult res;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero magnitude in the remaining block
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        BigInt mag = abs(a[i][j]);
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    bool clean = true;
    for (int i = t + 1; i < rows && clean; ++i)
      if (a[i][t] != 0) {
        BigInt q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false; // smaller remainder becomes the pivot
      }
    if (!clean) continue;
    for (int j = t + 1; j < cols && clean; ++j)
      if (a[t][j] != 0) {
        BigInt q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
    if (!clean) continue;
    // divisibility fixup: pivot must divide the rest of the block
    bool fixed = false;
    for (int i = t + 1; i < rows && !fixed; ++i)
      for (int j = t + 1; j < cols && !fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) {
    BigInt d = abs(a[i][i]);
    res.divisors.push_back(d);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Reduced homology over Z with lexicographic orientations.
// ---------------------------------------------------------------------------

struct HomologyGroup {
  int dim = 0;
  long long rank = 0;
  std::vector<BigInt> torsion;

  std::string str() const {
    std::ostringstream os;
    os << "dim " << dim << ": rank " << rank << ", torsion [";
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (i) os << ',';
      os << torsion[i];
    }
    os << ']';
    return os.str();
  }
};

// Boundary of the k-simplices into the (k-1)-simplices; for k = 0 the
// augmentation map onto the empty simplex.
inline Matrix boundary_matrix(const SimplicialComplex& x, int k,
                              const std::vector<std::vector<int>>& lower,
                              const std::vector<std::vector<int>>& upper) {
  if (k == 0) {
    Matrix m(1, std::vector<BigInt>(upper.size(), 1));
    return m;
  }
  std::map<std::vector<int>, int> row_index;
  for (std::size_t i = 0; i < lower.size(); ++i) row_index[lower[i]] = static_cast<int>(i);
  Matrix m(lower.size(), std::vector<BigInt>(upper.size(), 0));
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const auto& s = upper[j];
    int sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> face;
      face.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      m[row_index.at(face)][j] += sign;
      sign = -sign;
    }
  }
  (void)x;
  return m;
}

inline std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& x,
                                                   int top_dim = -1) {
  int dim = x.dimension();
  if (top_dim >= 0) dim = std::min(dim, top_dim);
  if (dim < 0) return {};
  std::vector<std::vector<std::vector<int>>> simp(dim + 2);
  for (int k = 0; k <= dim; ++k) simp[k] = x.simplices(k);
  std::vector<SnfResult> snf(dim + 2);
  // boundary D_k: C_k -> C_{k-1}; D_0 is the augmentation
  for (int k = 0; k <= dim + 1; ++k) {
    if (k > dim || simp[k].empty()) {
      snf[k] = SnfResult{};
      continue;
    }
    Matrix m = boundary_matrix(x, k, k == 0 ? std::vector<std::vector<int>>{} : simp[k - 1],
                               simp[k]);
    snf[k] = smith_normal_form(std::move(m));
  }
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= dim; ++k) {
    HomologyGroup h;
    h.dim = k;
    long long nk = static_cast<long long>(simp[k].size());
    long long rk = snf[k].rank;
    long long rk1 = k + 1 <= dim ? snf[k + 1].rank : 0;
    h.rank = nk - rk - rk1;
    if (k + 1 <= dim)
      for (const auto& d : snf[k + 1].divisors)
        if (d > 1) h.torsion.push_back(d);
    out.push_back(std::move(h));
  }
  return out;
}

inline bool homology_trivial_through(const std::vector<HomologyGroup>& h, int c) {
  for (const auto& g : h) {
    if (g.dim > c) continue;
    if (g.rank != 0 || !g.torsion.empty()) return false;
  }
  return true;
}

// Homological c-connectedness: nonempty and vanishing reduced homology
// through dimension c. For c < -1 there is no condition at all.
inline bool homologically_connected(const SimplicialComplex& x, int c) {
  if (c < -1) return true;
  if (x.num_vertices() == 0 || x.simplices(0).empty()) return false;
  if (c == -1) return true;
  return homology_trivial_through(reduced_homology(x, c + 1), c);
}

// ---------------------------------------------------------------------------
// Links and the homological wCM check.
// ---------------------------------------------------------------------------

inline SimplicialComplex link(const SimplicialComplex& x, std::vector<int> sigma) {
  std::sort(sigma.begin(), sigma.end());
  if (!sigma.empty() && !x.has_simplex(sigma))
    throw std::invalid_argument("link of a non-simplex");
  SimplicialComplex out;
  for (const auto& f : x.facets()) {
    if (!std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) continue;
    std::vector<std::string> rest;
    for (int v : f)
      if (!std::binary_search(sigma.begin(), sigma.end(), v)) rest.push_back(x.label(v));
    if (!rest.empty()) out.add_facet(rest);
  }
  out.normalize();
  return out;
}

struct WcmReport {
  bool ok = true;
  std::string violation; // empty when ok

  std::string str() const {
    return ok ? "homological wCM check: pass" : "homological wCM check: FAIL, " + violation;
  }
};

// X is wCM of dimension n when X is (n-1)-connected and links of k-simplices
// are (n-k-2)-connected; everything here is checked homologically.
inline WcmReport is_wcm_homological(const SimplicialComplex& x, int n) {
  WcmReport rep;
  if (!homologically_connected(x, n - 1)) {
    rep.ok = false;
    rep.violation = "homological connectivity failure: the complex is not " +
                    std::to_string(n - 1) + "-connected";
    return rep;
  }
  for (int k = 0; k <= x.dimension(); ++k) {
    for (const auto& s : x.simplices(k)) {
      SimplicialComplex lk = link(x, s);
      if (!homologically_connected(lk, n - k - 2)) {
        rep.ok = false;
        std::ostringstream os;
        os << "homological connectivity failure: the link of the " << k
           << "-simplex {";
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i) os << ' ';
          os << x.label(s[i]);
        }
        os << "} is not " << (n - k - 2) << "-connected";
        rep.violation = os.str();
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Simplicial maps and the complete-join check.
// ---------------------------------------------------------------------------

struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<int> vertex_map; // source id -> target id
};

struct CompleteJoinReport {
  bool ok = true;
  std::string reason;

  std::string str() const {
    return ok ? "complete join: yes" : "complete join: no, " + reason;
  }
};

inline CompleteJoinReport check_complete_join(const SimplicialMap& nu) {
  CompleteJoinReport rep;
  const auto& Y = nu.source;
  const auto& X = nu.target;
  if (static_cast<int>(nu.vertex_map.size()) != Y.num_vertices())
    throw std::invalid_argument("vertex map size disagrees with source");
  auto image = [&](const std::vector<int>& s) {
    std::vector<int> im;
    for (int v : s) im.push_back(nu.vertex_map.at(v));
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  };
  // really a simplicial map
  for (int k = 0; k <= Y.dimension(); ++k)
    for (const auto& s : Y.simplices(k))
      if (!X.has_simplex(image(s)))
        throw std::invalid_argument("not a simplicial map: image of a simplex is not a simplex");
  // simplexwise injective
  for (int k = 0; k <= Y.dimension(); ++k)
    for (const auto& s : Y.simplices(k))
      if (image(s).size() != s.size()) {
        rep.ok = false;
        rep.reason = "fails simplexwise injectivity on a " + std::to_string(k) + "-simplex";
        return rep;
      }
  // vertex fibers
  std::vector<std::vector<int>> fiber(X.num_vertices());
  for (int v = 0; v < Y.num_vertices(); ++v) fiber[nu.vertex_map[v]].push_back(v);
  for (int w = 0; w < X.num_vertices(); ++w)
    if (X.has_simplex({w}) && fiber[w].empty()) {
      rep.ok = false;
      rep.reason = "vertex " + X.label(w) + " has empty fiber (not surjective)";
      return rep;
    }
  // fibers of simplices are joins of vertex fibers: every transversal choice
  // must span a simplex of the source (the other inclusion is injectivity)
  for (int k = 0; k <= X.dimension(); ++k) {
    for (const auto& s : X.simplices(k)) {
      std::vector<int> pick(s.size(), 0);
      while (true) {
        std::vector<int> candidate;
        for (std::size_t i = 0; i < s.size(); ++i)
          candidate.push_back(fiber[s[i]][pick[i]]);
        std::sort(candidate.begin(), candidate.end());
        if (!Y.has_simplex(candidate)) {
          rep.ok = false;
          std::ostringstream os;
          os << "fiber of a " << k << "-simplex is not the join of its vertex fibers";
          rep.reason = os.str();
          return rep;
        }
        // advance the mixed-radix counter
        std::size_t i = 0;
        for (; i < s.size(); ++i) {
          if (++pick[i] < static_cast<int>(fiber[s[i]].size())) break;
          pick[i] = 0;
        }
        if (i == s.size()) break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Matching complexes of linear graphs and order complexes of finite posets.
// ---------------------------------------------------------------------------

// CM_d(L_{m-1}): vertices are the paths on d consecutive vertices of the
// linear graph on m vertices; simplices are sets of pairwise disjoint paths.
inline SimplicialComplex matching_complex(int d, int m) {
  if (d < 2 || m < 1) throw std::invalid_argument("matching_complex parameters");
  SimplicialComplex x;
  int nv = m - d + 1;
  auto label = [&](int s) {
    return "p" + std::to_string(s);
  };
  for (int s = 1; s <= nv; ++s) x.add_vertex(label(s));
  // maximal disjoint families, found greedily over all subsets of starts
  std::vector<std::vector<int>> families;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int s) {
    if (s > nv) {
      if (!cur.empty()) {
        // maximal? no start can be added
        bool maximal = true;
        for (int t = 1; t <= nv && maximal; ++t) {
          bool disjoint = true;
          for (int c : cur)
            if (!(t + d - 1 < c || c + d - 1 < t)) disjoint = false;
          if (disjoint) maximal = false;
        }
        if (maximal) families.push_back(cur);
      }
      return;
    }
    bool can = true;
    for (int c : cur)
      if (!(s > c + d - 1)) can = false;
    if (can) {
      cur.push_back(s);
      rec(s + 1);
      cur.pop_back();
    }
    rec(s + 1);
  };
  if (nv >= 1) rec(1);
  for (const auto& f : families) {
    std::vector<int> ids;
    for (int s : f) ids.push_back(s - 1);
    x.add_facet_ids(std::move(ids));
  }
  x.normalize();
  return x;
}

// Order complex of a finite poset given by its strict relations; chains
// become simplices.
inline SimplicialComplex order_complex(const std::vector<std::string>& elements,
                                       const std::vector<std::pair<int, int>>& less) {
  int n = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (auto [i, j] : less) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw std::invalid_argument("bad poset relation");
    lt[i][j] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  for (int i = 0; i < n; ++i)
    if (lt[i][i]) throw std::invalid_argument("poset relation has a cycle");
  SimplicialComplex x;
  for (const auto& e : elements) x.add_vertex(e);
  // maximal chains by depth-first extension
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int last) {
    bool extended = false;
    for (int j = 0; j < n; ++j) {
      if (last >= 0 && !lt[last][j]) continue;
      bool comparable = true;
      for (int c : chain)
        if (!(lt[c][j] || lt[j][c]) && c != j) comparable = false;
      if (last >= 0 && !comparable) continue;
      chain.push_back(j);
      extend(j);
      chain.pop_back();
      extended = true;
    }
    if (!extended && !chain.empty()) {
      std::vector<int> f = chain;
      x.add_facet_ids(std::move(f));
    }
  };
  extend(-1);
  x.normalize();
  return x;
}

} // namespace brover

#endif
