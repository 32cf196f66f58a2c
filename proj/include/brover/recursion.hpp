#ifndef BROVER_RECURSION_HPP
#define BROVER_RECURSION_HPP

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "brover/braid.hpp"
#include "brover/config.hpp"

namespace brover {

class RecursionTable;
using TablePtr = std::shared_ptr<const RecursionTable>;

enum class TableKind { braided, symmetric };

// Which exact word-problem solver eq_in dispatches to.
enum class TableSolver {
  generic,              // semidecision through nonidentity certificates
  trivial,              // no generators at all
  self_identical_braid, // single generator beta = beta(beta,...,beta)
  zwrz,                 // wreath normal form over Z wr Z
  brgrig,               // reduced-word recursion of the braided Grigorchuk group
  grig,                 // classical Grigorchuk recursion
};

using RootPart = std::variant<BraidWord, Permutation>;

// A signed word over one table's generator symbols.
class GroupWord {
public:
  using Letter = std::pair<int, int>; // (generator index, sign +-1)

  GroupWord() = default;
  explicit GroupWord(TablePtr table) : table_(std::move(table)) {}
  GroupWord(TablePtr table, std::vector<Letter> letters)
      : table_(std::move(table)), letters_(std::move(letters)) {}

  const TablePtr& table() const { return table_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void push(int gen, int sign) {
    if (!letters_.empty() && letters_.back().first == gen &&
        letters_.back().second == -sign) {
      letters_.pop_back(); // free cancellation, sound in any group
    } else {
      letters_.emplace_back(gen, sign);
    }
  }

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    if (a.table_ != b.table_)
      throw std::invalid_argument("group words over different tables");
    GroupWord r = a;
    for (const auto& l : b.letters_) r.push(l.first, l.second);
    return r;
  }

  GroupWord inverse() const {
    GroupWord r(table_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.push(it->first, -it->second);
    return r;
  }

  GroupWord pow(long long k) const {
    GroupWord r(table_);
    GroupWord base = k >= 0 ? *this : inverse();
    for (long long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
    return r;
  }

  bool same_letters(const GroupWord& o) const { return letters_ == o.letters_; }

  std::string str() const;

private:
  TablePtr table_;
  std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// A recursion table defines a (braided) self-similar group: each generator
// carries a root part in B_d or S_d and d section words over the same table.
// ---------------------------------------------------------------------------
class RecursionTable : public std::enable_shared_from_this<RecursionTable> {
public:
  struct Generator {
    std::string symbol;
    RootPart root;
    std::vector<GroupWord> sections; // exactly d entries
  };

  static std::shared_ptr<RecursionTable> create(std::string name, int degree,
                                                TableKind kind) {
    if (degree < 2) throw std::invalid_argument("table degree must be >= 2");
    auto t = std::shared_ptr<RecursionTable>(new RecursionTable);
    t->name_ = std::move(name);
    t->degree_ = degree;
    t->kind_ = kind;
    return t;
  }

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  TableKind kind() const { return kind_; }
  TableSolver solver() const { return solver_; }
  void set_solver(TableSolver s) { solver_ = s; }

  const TablePtr& pi_image() const { return pi_image_; }
  void set_pi_image(TablePtr t) { pi_image_ = std::move(t); }

  int add_generator(const std::string& symbol, RootPart root) {
    if (index_.count(symbol))
      throw std::invalid_argument("duplicate generator symbol: " + symbol);
    if (kind_ == TableKind::braided) {
      if (!std::holds_alternative<BraidWord>(root) ||
          std::get<BraidWord>(root).strands() != degree_)
        throw std::invalid_argument("root of " + symbol + " must live in B_d");
    } else {
      if (!std::holds_alternative<Permutation>(root) ||
          std::get<Permutation>(root).degree() != degree_)
        throw std::invalid_argument("root of " + symbol + " must live in S_d");
    }
    index_[symbol] = static_cast<int>(gens_.size());
    gens_.push_back(Generator{symbol, std::move(root), {}});
    return static_cast<int>(gens_.size()) - 1;
  }

  void set_sections(int gen, std::vector<GroupWord> sections) {
    if (static_cast<int>(sections.size()) != degree_)
      throw std::invalid_argument("generator needs exactly d sections");
    // stored section words alias this table without owning it, so a table
    // holding words over itself is not a shared_ptr cycle
    std::vector<GroupWord> rebound;
    rebound.reserve(sections.size());
    for (const auto& s : sections) {
      if (s.table().get() != this)
        throw std::invalid_argument("section words must use this table");
      rebound.emplace_back(unowned_self(), s.letters());
    }
    gens_.at(gen).sections = std::move(rebound);
  }

  // non-owning handle with the same stored pointer; compares equal to the
  // owning handles that words elsewhere carry
  TablePtr unowned_self() const { return TablePtr(TablePtr(), this); }

  // Closure and degree checks: section symbols must exist and root parts
  // must live at the table degree.
  void validate() const {
    for (const auto& g : gens_) {
      if (static_cast<int>(g.sections.size()) != degree_)
        throw std::invalid_argument("generator " + g.symbol + " lacks sections");
      for (const auto& s : g.sections)
        for (const auto& l : s.letters())
          if (l.first < 0 || l.first >= num_generators())
            throw std::invalid_argument("section symbol out of table");
    }
  }

  int num_generators() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int i) const { return gens_.at(i); }

  int generator_index(const std::string& symbol) const {
    auto it = index_.find(symbol);
    if (it == index_.end())
      throw std::invalid_argument("unknown generator symbol: " + symbol);
    return it->second;
  }

  bool has_symbol(const std::string& symbol) const { return index_.count(symbol) > 0; }

  GroupWord word(const std::string& text) const;
  GroupWord empty_word() const { return GroupWord(shared_from_this()); }
  GroupWord gen_word(int i, int sign = 1) const {
    GroupWord w(shared_from_this());
    w.push(i, sign);
    return w;
  }

private:
  RecursionTable() = default;

  std::string name_;
  int degree_ = 2;
  TableKind kind_ = TableKind::braided;
  TableSolver solver_ = TableSolver::generic;
  TablePtr pi_image_;
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
};

inline std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << table_->generator(letters_[i].first).symbol;
    if (letters_[i].second < 0) os << "^-1";
  }
  return os.str();
}

// Word syntax: whitespace-separated symbols with optional ^power,
// `a^-1 d^-1 a d`; `1` stands for the empty word.
inline GroupWord RecursionTable::word(const std::string& text) const {
  GroupWord w(shared_from_this());
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1" || tok == "e") continue;
    std::size_t caret = tok.find('^');
    std::string sym = caret == std::string::npos ? tok : tok.substr(0, caret);
    long long pw = 1;
    if (caret != std::string::npos) pw = std::atoll(tok.substr(caret + 1).c_str());
    int gi = generator_index(sym);
    int sign = pw >= 0 ? 1 : -1;
    for (long long i = 0; i < (pw >= 0 ? pw : -pw); ++i) w.push(gi, sign);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Wreath recursion of a word: root part and d sections, computed letter by
// letter with the product rule fg = (root f)(root g)(f_{g(1)}g_1,...,f_{g(d)}g_d),
// where the root of g acts through its permutation image.
// ---------------------------------------------------------------------------

struct WreathRecursion {
  RootPart root;
  std::vector<GroupWord> sections;
};

namespace detail {

inline Permutation root_perm_of(const RootPart& r) {
  if (std::holds_alternative<BraidWord>(r)) return perm_of(std::get<BraidWord>(r));
  return std::get<Permutation>(r);
}

// Recursion of a single signed letter; inverse letters use the semidirect
// product inversion g^-1 = r^-1 (h_1,...,h_d), h_i = inverse of g_{perm(r)^-1(i)}.
inline WreathRecursion letter_recursion(const RecursionTable& t, int gen, int sign) {
  const auto& g = t.generator(gen);
  if (sign > 0) return {g.root, g.sections};
  WreathRecursion r;
  Permutation sigma = root_perm_of(g.root);
  if (t.kind() == TableKind::braided)
    r.root = std::get<BraidWord>(g.root).inverse();
  else
    r.root = std::get<Permutation>(g.root).inverse();
  Permutation sigma_inv = sigma.inverse();
  r.sections.reserve(t.degree());
  for (int i = 1; i <= t.degree(); ++i)
    r.sections.push_back(g.sections[sigma_inv.of(i) - 1].inverse());
  return r;
}

} // namespace detail

inline WreathRecursion wreath_recursion(const GroupWord& w) {
  const RecursionTable& t = *w.table();
  int d = t.degree();
  WreathRecursion acc;
  if (t.kind() == TableKind::braided)
    acc.root = BraidWord(d);
  else
    acc.root = Permutation::identity(d);
  acc.sections.assign(d, GroupWord(w.table()));
  for (const auto& [gen, sign] : w.letters()) {
    WreathRecursion step = detail::letter_recursion(t, gen, sign);
    Permutation sigma = detail::root_perm_of(step.root);
    std::vector<GroupWord> next;
    next.reserve(d);
    for (int i = 1; i <= d; ++i)
      next.push_back(acc.sections[sigma.of(i) - 1] * step.sections[i - 1]);
    acc.sections = std::move(next);
    if (t.kind() == TableKind::braided)
      acc.root = std::get<BraidWord>(acc.root) * std::get<BraidWord>(step.root);
    else
      acc.root = compose(std::get<Permutation>(acc.root),
                         std::get<Permutation>(step.root));
  }
  return acc;
}

inline RootPart root(const GroupWord& w) { return wreath_recursion(w).root; }

inline BraidWord root_braid(const GroupWord& w) {
  if (w.table()->kind() != TableKind::braided)
    throw std::invalid_argument("root_braid on symmetric table");
  // roots multiply on their own, no need to drag sections along
  BraidWord r(w.table()->degree());
  for (const auto& [gen, sign] : w.letters()) {
    const auto& g = std::get<BraidWord>(w.table()->generator(gen).root);
    r = r * (sign > 0 ? g : g.inverse());
  }
  return r;
}

inline Permutation root_perm(const GroupWord& w) {
  Permutation r = Permutation::identity(w.table()->degree());
  for (const auto& [gen, sign] : w.letters()) {
    Permutation g = detail::root_perm_of(w.table()->generator(gen).root);
    r = compose(r, sign > 0 ? g : g.inverse());
  }
  return r;
}

inline std::vector<GroupWord> sections(const GroupWord& w) {
  return wreath_recursion(w).sections;
}

inline bool root_is_trivial(const GroupWord& w) {
  if (w.table()->kind() == TableKind::braided)
    return braid_is_trivial(root_braid(w));
  return root_perm(w).is_identity();
}

// Breadth-first hunt for a vertex whose iterated section has nontrivial
// root. Returns the 1-based child path, or nothing within the budgets (the
// node cap keeps deep trees from exploding; absence never proves identity).
inline std::optional<std::vector<int>> nonidentity_certificate(const GroupWord& w,
                                                               int max_depth,
                                                               int max_nodes = 4096) {
  struct Node {
    std::vector<int> path;
    GroupWord word;
  };
  std::deque<Node> queue;
  queue.push_back({{}, w});
  int visited = 0;
  while (!queue.empty() && visited++ < max_nodes) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (!root_is_trivial(n.word)) return n.path;
    if (static_cast<int>(n.path.size()) >= max_depth) continue;
    auto secs = sections(n.word);
    for (int i = 0; i < static_cast<int>(secs.size()); ++i) {
      std::vector<int> p = n.path;
      p.push_back(i + 1);
      queue.push_back({std::move(p), std::move(secs[i])});
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Z wr Z normal form: finite-support exponent function plus a shift. The
// registered solver for the table a = zeta(1,a), b = zeta^2(1,b).
// ---------------------------------------------------------------------------

struct ZwrZNormalForm {
  std::map<long long, long long> levels; // position -> exponent of b_position
  long long shift = 0;                   // exponent of the trailing a power

  bool operator==(const ZwrZNormalForm& o) const {
    return shift == o.shift && levels == o.levels;
  }

  void add_b(long long position, long long exponent) {
    if (exponent == 0) return;
    auto it = levels.find(position);
    if (it == levels.end()) {
      levels[position] = exponent;
    } else {
      it->second += exponent;
      if (it->second == 0) levels.erase(it);
    }
  }

  long long root_exponent() const {
    long long s = shift;
    for (const auto& [pos, e] : levels) s += 2 * e;
    return s;
  }
};

// Requires the word's table to use symbols a, b with the zwrz recursions.
inline ZwrZNormalForm zwrz_normal_form(const GroupWord& w) {
  const auto& t = *w.table();
  int ga = t.generator_index("a");
  int gb = t.generator_index("b");
  ZwrZNormalForm nf;
  for (const auto& [gen, sign] : w.letters()) {
    if (gen == ga) {
      nf.shift += sign;
    } else if (gen == gb) {
      nf.add_b(nf.shift, sign);
    } else {
      throw std::invalid_argument("zwrz word uses a foreign symbol");
    }
  }
  return nf;
}

inline GroupWord zwrz_word_from_normal_form(const TablePtr& table,
                                            const ZwrZNormalForm& nf) {
  int ga = table->generator_index("a");
  int gb = table->generator_index("b");
  GroupWord w(table);
  auto push_pow = [&](int gen, long long e) {
    int sign = e >= 0 ? 1 : -1;
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) w.push(gen, sign);
  };
  for (const auto& [pos, e] : nf.levels) {
    push_pow(ga, pos);
    push_pow(gb, e);
    push_pow(ga, -pos);
  }
  push_pow(ga, nf.shift);
  return w;
}

// ---------------------------------------------------------------------------
// Built-in tables.
// ---------------------------------------------------------------------------

namespace tables {

TablePtr grig();

// Braided Grigorchuk group: a = zeta(1,1), b = (a,c), c = (a^-1,d), d = (1,b).
inline TablePtr brgrig() {
  static TablePtr instance = [] {
    auto t = RecursionTable::create("brgrig", 2, TableKind::braided);
    int a = t->add_generator("a", BraidWord::zeta());
    int b = t->add_generator("b", BraidWord(2));
    int c = t->add_generator("c", BraidWord(2));
    int d = t->add_generator("d", BraidWord(2));
    auto W = [&](std::vector<GroupWord::Letter> ls) {
      return GroupWord(t, std::move(ls));
    };
    t->set_sections(a, {W({}), W({})});
    t->set_sections(b, {W({{a, 1}}), W({{c, 1}})});
    t->set_sections(c, {W({{a, -1}}), W({{d, 1}})});
    t->set_sections(d, {W({}), W({{b, 1}})});
    t->set_solver(TableSolver::brgrig);
    t->set_pi_image(grig());
    t->validate();
    return TablePtr(t);
  }();
  return instance;
}

// Classical Grigorchuk group: a = (1 2)(id,id), b = (a,c), c = (a,d), d = (id,b).
inline TablePtr grig() {
  static TablePtr instance = [] {
    auto t = RecursionTable::create("grig", 2, TableKind::symmetric);
    int a = t->add_generator("a", Permutation::transposition(2, 1));
    int b = t->add_generator("b", Permutation::identity(2));
    int c = t->add_generator("c", Permutation::identity(2));
    int d = t->add_generator("d", Permutation::identity(2));
    auto W = [&](std::vector<GroupWord::Letter> ls) {
      return GroupWord(t, std::move(ls));
    };
    t->set_sections(a, {W({}), W({})});
    t->set_sections(b, {W({{a, 1}}), W({{c, 1}})});
    t->set_sections(c, {W({{a, 1}}), W({{d, 1}})});
    t->set_sections(d, {W({}), W({{b, 1}})});
    t->set_solver(TableSolver::grig);
    t->validate();
    return TablePtr(t);
  }();
  return instance;
}

// Z wr Z: a = zeta(1,a), b = zeta^2(1,b).
inline TablePtr zwrz() {
  static TablePtr instance = [] {
    auto t = RecursionTable::create("zwrz", 2, TableKind::braided);
    int a = t->add_generator("a", BraidWord::zeta());
    int b = t->add_generator("b", BraidWord::zeta_pow(2));
    auto W = [&](std::vector<GroupWord::Letter> ls) {
      return GroupWord(t, std::move(ls));
    };
    t->set_sections(a, {W({}), W({{a, 1}})});
    t->set_sections(b, {W({}), W({{b, 1}})});
    t->set_solver(TableSolver::zwrz);
    t->validate();
    return TablePtr(t);
  }();
  return instance;
}

// The braided self-identical subgroup generated by one beta = beta(beta,...,beta).
inline TablePtr self_identical(const BraidWord& beta, const std::string& name = "selfid") {
  auto t = RecursionTable::create(name, beta.strands(), TableKind::braided);
  int s = t->add_generator("f", beta);
  std::vector<GroupWord> secs;
  for (int i = 0; i < beta.strands(); ++i) secs.push_back(GroupWord(t, {{s, 1}}));
  t->set_sections(s, std::move(secs));
  t->set_solver(TableSolver::self_identical_braid);
  t->validate();
  return t;
}

// Table with no generators; the coefficient group of Thomp_d(B_*) and V_d.
// Cached per (degree, kind) so words from separate calls share one table.
inline TablePtr trivial(int degree, TableKind kind = TableKind::braided) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TablePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(degree, static_cast<int>(kind));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto make = [&](TableKind k) {
    auto t = RecursionTable::create(
        k == TableKind::braided ? "trivial" : "trivial_sym", degree, k);
    t->set_solver(TableSolver::trivial);
    t->validate();
    return t;
  };
  auto t = make(kind);
  if (kind == TableKind::braided) {
    auto skey = std::make_pair(degree, static_cast<int>(TableKind::symmetric));
    auto sit = cache.find(skey);
    if (sit == cache.end()) sit = cache.emplace(skey, make(TableKind::symmetric)).first;
    t->set_pi_image(sit->second);
  }
  cache[key] = t;
  return t;
}

} // namespace tables

// Table file format, line oriented:
//   group <name>
//   degree <d>
//   kind braided|symmetric
//   gen <sym> = <root> | <sec1>, <sec2>, ..., <secd>
// with `e` for the empty root and `1` for a trivial section.
inline TablePtr parse_table(std::istream& in) {
  std::string name = "anonymous";
  int degree = -1;
  TableKind kind = TableKind::braided;
  struct PendingGen {
    std::string symbol;
    std::string root_text;
    std::vector<std::string> section_texts;
  };
  std::vector<PendingGen> pending;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string key;
    if (!(is >> key)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("table line " + std::to_string(lineno) + ": " + msg);
    };
    if (key == "group") {
      is >> name;
    } else if (key == "degree") {
      if (!(is >> degree) || degree < 2) fail("bad degree");
    } else if (key == "kind") {
      std::string k;
      is >> k;
      if (k == "braided")
        kind = TableKind::braided;
      else if (k == "symmetric")
        kind = TableKind::symmetric;
      else
        fail("kind must be braided or symmetric");
    } else if (key == "gen") {
      std::string rest;
      std::getline(is, rest);
      auto eq = rest.find('=');
      if (eq == std::string::npos) fail("gen line needs '='");
      std::istringstream symis(rest.substr(0, eq));
      PendingGen g;
      if (!(symis >> g.symbol)) fail("gen line needs a symbol");
      std::string body = rest.substr(eq + 1);
      auto bar = body.find('|');
      if (bar == std::string::npos) fail("gen line needs '|' before sections");
      g.root_text = body.substr(0, bar);
      std::string secs = body.substr(bar + 1);
      std::string cur;
      for (char ch : secs) {
        if (ch == ',') {
          g.section_texts.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      g.section_texts.push_back(cur);
      pending.push_back(std::move(g));
    } else {
      fail("unknown directive: " + key);
    }
  }
  if (degree < 2) throw std::invalid_argument("table file lacks a degree");
  auto t = RecursionTable::create(name, degree, kind);
  for (const auto& g : pending) {
    if (kind == TableKind::braided)
      t->add_generator(g.symbol, parse_braid("B" + std::to_string(degree) + ": " + g.root_text));
    else
      t->add_generator(g.symbol, parse_permutation(g.root_text, degree));
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (static_cast<int>(pending[i].section_texts.size()) != degree)
      throw std::invalid_argument("generator " + pending[i].symbol +
                                  " needs exactly " + std::to_string(degree) +
                                  " sections");
    std::vector<GroupWord> secs;
    for (const auto& st : pending[i].section_texts) secs.push_back(t->word(st));
    t->set_sections(static_cast<int>(i), std::move(secs));
  }
  t->validate();
  return t;
}

// ---------------------------------------------------------------------------
// eq_in and the self-identical check. The exact solvers for the Grigorchuk
// tables live in grig.hpp; forward declarations keep the dispatch here.
// ---------------------------------------------------------------------------

bool grig_is_identity(const GroupWord& w);          // braided, defined in grig.hpp
bool grig_is_identity_symmetric(const GroupWord& w); // classical, ditto

inline EqVerdict eq_in(const GroupWord& a, const GroupWord& b,
                       const Config& cfg = default_config()) {
  if (a.table() != b.table())
    throw std::invalid_argument("eq_in across different tables");
  GroupWord w = a * b.inverse();
  if (w.empty()) return EqVerdict::equal();
  switch (a.table()->solver()) {
    case TableSolver::trivial:
      return EqVerdict::equal();
    case TableSolver::self_identical_braid:
      return braid_eq(root_braid(a), root_braid(b)) ? EqVerdict::equal()
                                                    : EqVerdict::unequal();
    case TableSolver::zwrz:
      return zwrz_normal_form(a) == zwrz_normal_form(b) ? EqVerdict::equal()
                                                        : EqVerdict::unequal();
    case TableSolver::brgrig:
      return grig_is_identity(w) ? EqVerdict::equal() : EqVerdict::unequal();
    case TableSolver::grig:
      return grig_is_identity_symmetric(w) ? EqVerdict::equal()
                                           : EqVerdict::unequal();
    case TableSolver::generic:
    default:
      if (nonidentity_certificate(w, cfg.depth)) return EqVerdict::unequal();
      return EqVerdict::unknown(cfg.depth);
  }
}

inline EqVerdict is_identity_word(const GroupWord& w,
                                  const Config& cfg = default_config()) {
  return eq_in(w, w.table()->empty_word(), cfg);
}

struct SelfIdenticalVerdict {
  Verdict v = Verdict::unknown;
  std::string witness; // generator symbol when v == unequal-style "no"
};

// Checks psi(g) = (g,...,g) for every generator, syntactic short circuit first.
inline SelfIdenticalVerdict is_self_identical(const TablePtr& table, int depth) {
  Config cfg = default_config();
  cfg.depth = depth;
  bool any_unknown = false;
  for (int i = 0; i < table->num_generators(); ++i) {
    const auto& g = table->generator(i);
    GroupWord gw = table->gen_word(i);
    bool syntactic = true;
    for (const auto& s : g.sections)
      if (!s.same_letters(gw)) syntactic = false;
    if (syntactic) continue;
    for (const auto& s : g.sections) {
      EqVerdict e = eq_in(s, gw, cfg);
      if (e.is_unequal()) return {Verdict::unequal, g.symbol};
      if (e.is_unknown()) any_unknown = true;
    }
  }
  if (any_unknown) return {Verdict::unknown, ""};
  return {Verdict::equal, ""};
}

} // namespace brover

#endif
