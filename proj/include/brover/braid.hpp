#ifndef BROVER_BRAID_HPP
#define BROVER_BRAID_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brover {

// ---------------------------------------------------------------------------
// Permutation of {1..n}. Composition is ordinary function composition:
// compose(a, b) applies b first, so perm_of below is a homomorphism for
// braid words read top to bottom with strands numbered at the bottom.
// ---------------------------------------------------------------------------
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }

  // one-line notation, 1-based: images[i-1] is the image of i
  explicit Permutation(const std::vector<int>& images) {
    img_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int v = images[i];
      if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation");
      seen[v - 1] = true;
      img_[i] = v - 1;
    }
  }

  static Permutation identity(int n) { return Permutation(n); }

  // the transposition (i, i+1), 1 <= i <= n-1
  static Permutation transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("transposition index");
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }

  int of(int i) const { return img_.at(i - 1) + 1; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p(degree());
    for (int i = 0; i < degree(); ++i) p.img_[img_[i]] = i;
    return p;
  }

  friend Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    Permutation p(a.degree());
    for (int i = 0; i < a.degree(); ++i) p.img_[i] = a.img_[b.img_[i]];
    return p;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  std::vector<int> one_line() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
    return v;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < degree(); ++i) {
      if (i) os << ' ';
      os << img_[i] + 1;
    }
    os << ']';
    return os.str();
  }

private:
  std::vector<int> img_;
};

// Parses cycle notation like "(1 2)(3 4 5)" or one-line form "[2 1 3]";
// "e" and "id" give the identity.
inline Permutation parse_permutation(const std::string& text, int degree) {
  const std::string& t = text;
  Permutation p = Permutation::identity(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < t.size() && isspace(static_cast<unsigned char>(t[pos]))) ++pos;
  };
  skip_ws();
  if (pos < t.size() && (t.compare(pos, 1, "e") == 0 || t.compare(pos, 2, "id") == 0))
    return p;
  if (pos < t.size() && t[pos] == '[') {
    std::string body = t.substr(pos + 1, t.rfind(']') - pos - 1);
    std::istringstream is(body);
    std::vector<int> images;
    int v;
    while (is >> v) images.push_back(v);
    if (static_cast<int>(images.size()) != degree)
      throw std::invalid_argument("one-line permutation has wrong degree: " + text);
    return Permutation(images);
  }
  while (pos < t.size()) {
    skip_ws();
    if (pos >= t.size()) break;
    if (t[pos] != '(') throw std::invalid_argument("bad cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos >= t.size()) throw std::invalid_argument("unterminated cycle: " + text);
      if (t[pos] == ')') {
        ++pos;
        break;
      }
      int v = 0;
      bool any = false;
      while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) {
        v = v * 10 + (t[pos] - '0');
        ++pos;
        any = true;
      }
      if (!any) throw std::invalid_argument("bad cycle entry: " + text);
      cyc.push_back(v);
    }
    if (cyc.size() < 2) continue;
    // cycle (c1 c2 ... ck): c1 -> c2 -> ... -> ck -> c1
    std::vector<int> images = p.one_line();
    std::vector<int> prev = images;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree) throw std::invalid_argument("cycle entry out of range");
      images[from - 1] = prev[to - 1];
    }
    p = Permutation(images);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Freely reduced word in a free group; carrier for the Artin action.
// ---------------------------------------------------------------------------
class FreeWord {
public:
  using Letter = std::pair<int, int>; // (generator index >= 1, sign +-1)

  FreeWord() = default;

  static FreeWord generator(int i, int sign = 1) {
    FreeWord w;
    w.push(i, sign);
    return w;
  }

  void push(int gen, int sign) {
    if (!letters_.empty() && letters_.back().first == gen &&
        letters_.back().second == -sign) {
      letters_.pop_back();
    } else {
      letters_.emplace_back(gen, sign);
    }
  }

  void append(const FreeWord& o) {
    for (const auto& l : o.letters_) push(l.first, l.second);
  }

  FreeWord inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.push(it->first, -it->second);
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << 'x' << letters_[i].first;
      if (letters_[i].second < 0) os << "^-1";
    }
    return letters_.empty() ? "1" : os.str();
  }

private:
  std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// Word in the Artin generators of B_n. Letters are (index i in 1..n-1, sign),
// applied left to right reading the diagram top to bottom; strands are
// numbered 1..n at the bottom. The sign convention is fixed by zeta: the
// positive crossing takes the strand entering upper-left over to lower-right.
// ---------------------------------------------------------------------------
class BraidWord {
public:
  using Letter = std::pair<int, int>;

  BraidWord() : strands_(1) {}

  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  }

  BraidWord(int strands, std::vector<Letter> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
    for (const auto& l : letters_) check_letter(l);
  }

  // the distinguished generator of B_2
  static BraidWord zeta() { return BraidWord(2, {{1, 1}}); }

  static BraidWord zeta_pow(long long k) {
    BraidWord b(2);
    int sign = k >= 0 ? 1 : -1;
    for (long long i = 0; i < (k >= 0 ? k : -k); ++i) b.push(1, sign);
    return b;
  }

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool trivial_word() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  void push(int index, int sign) {
    check_letter({index, sign});
    if (!letters_.empty() && letters_.back().first == index &&
        letters_.back().second == -sign) {
      letters_.pop_back(); // free cancellation only; braid relations stay
    } else {
      letters_.emplace_back(index, sign);
    }
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands_ != b.strands_)
      throw std::invalid_argument("strand count mismatch in braid product");
    BraidWord r = a;
    for (const auto& l : b.letters_) r.push(l.first, l.second);
    return r;
  }

  BraidWord inverse() const {
    BraidWord r(strands_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.push(it->first, -it->second);
    return r;
  }

  BraidWord pow(long long k) const {
    BraidWord r(strands_);
    BraidWord base = k >= 0 ? *this : inverse();
    for (long long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
    return r;
  }

  std::string str() const {
    if (letters_.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << 's' << letters_[i].first;
      if (letters_[i].second < 0) os << "^-1";
    }
    return os.str();
  }

private:
  void check_letter(const Letter& l) const {
    if (l.first < 1 || l.first >= strands_)
      throw std::out_of_range("Artin index out of range for strand count");
    if (l.second != 1 && l.second != -1)
      throw std::invalid_argument("letter sign must be +-1");
  }

  int strands_;
  std::vector<Letter> letters_;
};

// `s1 s2^-1 s1`, optionally prefixed `B4:` to pin the strand count. Without
// the prefix the strand count is max index + 1, or min_strands if larger.
inline BraidWord parse_braid(const std::string& text, int min_strands = 1) {
  std::string body = text;
  int strands = -1;
  auto colon = text.find(':');
  if (colon != std::string::npos && text.size() > 1 &&
      (text[0] == 'B' || text[0] == 'b')) {
    strands = std::atoi(text.substr(1, colon - 1).c_str());
    if (strands < 1) throw std::invalid_argument("bad strand count in: " + text);
    body = text.substr(colon + 1);
  }
  std::istringstream is(body);
  std::string tok;
  std::vector<std::pair<int, long long>> items; // (index, power)
  int max_index = 0;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    if (tok[0] != 's') throw std::invalid_argument("bad braid letter: " + tok);
    std::size_t caret = tok.find('^');
    int idx = std::atoi(tok.substr(1, caret == std::string::npos
                                          ? std::string::npos
                                          : caret - 1)
                            .c_str());
    if (idx < 1) throw std::invalid_argument("bad braid letter: " + tok);
    long long pw = 1;
    if (caret != std::string::npos) pw = std::atoll(tok.substr(caret + 1).c_str());
    items.emplace_back(idx, pw);
    max_index = std::max(max_index, idx);
  }
  if (strands < 0) strands = std::max(min_strands, max_index + 1);
  BraidWord b(strands);
  for (const auto& [idx, pw] : items) {
    int sign = pw >= 0 ? 1 : -1;
    for (long long i = 0; i < (pw >= 0 ? pw : -pw); ++i) b.push(idx, sign);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Projection to the symmetric group and the Artin action on a free group.
// ---------------------------------------------------------------------------

inline Permutation perm_of(const BraidWord& b) {
  // perm_of(w)(i) is the top endpoint of the strand at bottom position i
  Permutation p = Permutation::identity(b.strands());
  for (const auto& l : b.letters())
    p = compose(p, Permutation::transposition(b.strands(), l.first));
  return p;
}

inline bool is_pure(const BraidWord& b) { return perm_of(b).is_identity(); }

namespace detail {

// One Artin letter acting on one free letter, appended onto out.
inline void artin_letter_image(int i, int sign, int gen, int gsign, FreeWord& out) {
  if (sign > 0) {
    // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    if (gen == i) {
      if (gsign > 0) {
        out.push(i, 1); out.push(i + 1, 1); out.push(i, -1);
      } else {
        out.push(i, 1); out.push(i + 1, -1); out.push(i, -1);
      }
    } else if (gen == i + 1) {
      out.push(i, gsign);
    } else {
      out.push(gen, gsign);
    }
  } else {
    // inverse automorphism: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    if (gen == i) {
      out.push(i + 1, gsign);
    } else if (gen == i + 1) {
      if (gsign > 0) {
        out.push(i + 1, -1); out.push(i, 1); out.push(i + 1, 1);
      } else {
        out.push(i + 1, -1); out.push(i, -1); out.push(i + 1, 1);
      }
    } else {
      out.push(gen, gsign);
    }
  }
}

} // namespace detail

inline FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
  for (const auto& l : w.letters())
    if (l.first > b.strands())
      throw std::out_of_range("free generator index exceeds strand count");
  FreeWord cur = w;
  for (const auto& bl : b.letters()) {
    FreeWord next;
    for (const auto& l : cur.letters())
      detail::artin_letter_image(bl.first, bl.second, l.first, l.second, next);
    cur = std::move(next);
  }
  return cur;
}

// Exact equality via faithfulness of the Artin representation. Cheap
// invariants (permutation, exponent sum) run before the free-group work.
inline bool braid_eq(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("strand count mismatch in braid_eq");
  if (a.letters() == b.letters()) return true;
  long long ea = 0, eb = 0;
  for (const auto& l : a.letters()) ea += l.second;
  for (const auto& l : b.letters()) eb += l.second;
  if (ea != eb) return false;
  if (perm_of(a) != perm_of(b)) return false;
  for (int i = 1; i <= a.strands(); ++i) {
    FreeWord x = FreeWord::generator(i);
    if (artin_action(a, x) != artin_action(b, x)) return false;
  }
  return true;
}

inline bool braid_is_trivial(const BraidWord& b) {
  return braid_eq(b, BraidWord(b.strands()));
}

// ---------------------------------------------------------------------------
// Cloning maps and the shifted embedding.
// ---------------------------------------------------------------------------

// (sigma)varsigma_k^n: the arrow k -> sigma(k) becomes d parallel arrows.
inline Permutation clone_perm(const Permutation& sigma, int k, int d) {
  int n = sigma.degree();
  if (k < 1 || k > n) throw std::out_of_range("clone_perm position");
  if (d < 2) throw std::invalid_argument("cloning degree must be >= 2");
  int target = sigma.of(k);
  std::vector<int> images(n + d - 1);
  auto relabel = [&](int v) { return v < target ? v : v + d - 1; };
  for (int i = 1; i <= n + d - 1; ++i) {
    if (i < k) {
      images[i - 1] = relabel(sigma.of(i));
    } else if (i <= k + d - 1) {
      images[i - 1] = target + (i - k);
    } else {
      images[i - 1] = relabel(sigma.of(i - d + 1));
    }
  }
  return Permutation(images);
}

// (beta)vartheta_k^n: replace the strand at bottom position k by d parallel
// strands. We track the cable position level by level from the bottom, then
// rewrite each crossing: a crossing not touching the cable is re-indexed, a
// crossing of a thin strand with the cable becomes d crossings of equal sign.
inline BraidWord clone_braid(const BraidWord& b, int k, int d) {
  int n = b.strands();
  if (k < 1 || k > n) throw std::out_of_range("clone_braid position");
  if (d < 2) throw std::invalid_argument("cloning degree must be >= 2");
  const auto& ls = b.letters();
  std::size_t m = ls.size();
  // pos[t] = cable position just below crossing t (crossings 1..m top-down);
  // pos[m] = k at the bottom of the diagram.
  std::vector<int> pos(m + 1);
  pos[m] = k;
  for (std::size_t t = m; t >= 1; --t) {
    int i = ls[t - 1].first;
    int p = pos[t];
    if (p == i)
      pos[t - 1] = i + 1;
    else if (p == i + 1)
      pos[t - 1] = i;
    else
      pos[t - 1] = p;
  }
  BraidWord out(n + d - 1);
  for (std::size_t t = 1; t <= m; ++t) {
    int i = ls[t - 1].first;
    int s = ls[t - 1].second;
    int p = pos[t];
    if (p == i) {
      // cable below at i, thin strand passes it moving left-to-right downward
      for (int j = 0; j < d; ++j) out.push(i + j, s);
    } else if (p == i + 1) {
      for (int j = d - 1; j >= 0; --j) out.push(i + j, s);
    } else {
      out.push(i + 1 < p ? i : i + d - 1, s);
    }
  }
  return out;
}

// phi^{(k)}: B_d -> B_{n+d-1}, k-1 fresh strands on the left, n-k on the right.
inline BraidWord shift_embed(const BraidWord& x, int k, int n) {
  if (k < 1 || n < k) throw std::invalid_argument("shift_embed range");
  int d = x.strands();
  BraidWord out(n + d - 1);
  for (const auto& l : x.letters()) out.push(l.first + k - 1, l.second);
  return out;
}

inline BraidWord direct_sum(const BraidWord& a, const BraidWord& b) {
  BraidWord out(a.strands() + b.strands());
  for (const auto& l : a.letters()) out.push(l.first, l.second);
  for (const auto& l : b.letters()) out.push(l.first + a.strands(), l.second);
  return out;
}

// Deletes the named bottom strands, tracking them through the crossings.
// Crossings touching a deleted strand are dropped, the rest re-indexed.
inline BraidWord delete_strands(const BraidWord& b, const std::set<int>& remove) {
  int n = b.strands();
  for (int r : remove)
    if (r < 1 || r > n) throw std::out_of_range("delete_strands index");
  if (static_cast<int>(remove.size()) >= n)
    throw std::invalid_argument("must keep at least one strand");
  if (remove.empty()) return b;
  const auto& ls = b.letters();
  std::size_t m = ls.size();
  // deleted-position sets per level, built bottom-up
  std::vector<std::vector<bool>> del(m + 1, std::vector<bool>(n + 1, false));
  for (int r : remove) del[m][r] = true;
  for (std::size_t t = m; t >= 1; --t) {
    del[t - 1] = del[t];
    int i = ls[t - 1].first;
    std::swap(del[t - 1][i], del[t - 1][i + 1]);
  }
  BraidWord out(n - static_cast<int>(remove.size()));
  for (std::size_t t = 1; t <= m; ++t) {
    int i = ls[t - 1].first;
    if (del[t][i] || del[t][i + 1]) continue;
    int shift = 0;
    for (int j = 1; j < i; ++j)
      if (del[t][j]) ++shift;
    out.push(i - shift, ls[t - 1].second);
  }
  return out;
}

// If b equals phi^{(k)}(x) for some x in B_d, returns x; otherwise empty.
// Deleting the complementary strands recovers the only possible candidate,
// and the round trip through shift_embed certifies it exactly.
inline std::optional<BraidWord> supported_on_block(const BraidWord& b, int k, int d) {
  int nn = b.strands();
  if (k < 1 || d < 1 || k + d - 1 > nn)
    throw std::out_of_range("supported_on_block range");
  if (d == nn) {
    return b; // k == 1 forced
  }
  std::set<int> complement;
  for (int i = 1; i <= nn; ++i)
    if (i < k || i > k + d - 1) complement.insert(i);
  BraidWord cand = delete_strands(b, complement);
  if (braid_eq(shift_embed(cand, k, nn - d + 1), b)) return cand;
  return std::nullopt;
}

} // namespace brover

#endif
