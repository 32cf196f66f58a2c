// Command-line front end for the braided self-similar group toolkit.
//
// Exit codes: 0 equal/identity/pass, 1 unequal/non-identity/fail,
// 2 unknown, 3 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brover/braid.hpp"
#include "brover/cloning.hpp"
#include "brover/complexes.hpp"
#include "brover/forest.hpp"
#include "brover/grig.hpp"
#include "brover/recursion.hpp"
#include "brover/thompson.hpp"

using namespace brover;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

struct Options {
  std::string table = "brgrig";
  std::string format = "text";
  std::string output;
  int depth = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  Config config() const {
    Config c = default_config();
    if (depth > 0) c.depth = depth;
    if (samples > 0) c.samples = samples;
    if (seed > 0) c.seed = seed;
    return c;
  }
  bool machine() const { return format == "machine"; }
};

TablePtr resolve_table(const std::string& name) {
  if (name == "brgrig") return tables::brgrig();
  if (name == "grig") return tables::grig();
  if (name == "zwrz") return tables::zwrz();
  if (name == "trivial2") return tables::trivial(2);
  if (name == "trivial3") return tables::trivial(3);
  if (name == "selfid") return tables::self_identical(BraidWord::zeta());
  if (name.rfind("selfid:", 0) == 0)
    return tables::self_identical(parse_braid(name.substr(7)));
  std::ifstream in(name);
  if (!in) throw std::invalid_argument("unknown table or unreadable file: " + name);
  return parse_table(in);
}

std::ostream& out_stream(const Options& opt, std::ofstream& file) {
  if (opt.output.empty()) return std::cout;
  file.open(opt.output);
  if (!file) throw std::invalid_argument("cannot open output file: " + opt.output);
  return file;
}

std::string path_str(const std::vector<int>& path) {
  std::string s = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(path[i]);
  }
  return s + ")";
}

int verdict_exit(const EqVerdict& v) {
  if (v.is_equal()) return kExitPass;
  if (v.is_unequal()) return kExitFail;
  return kExitUnknown;
}

std::string root_str(const RootPart& r) {
  if (std::holds_alternative<BraidWord>(r)) return std::get<BraidWord>(r).str();
  return std::get<Permutation>(r).str();
}

// ---------------------------------------------------------------------------

int cmd_wp(const Options& opt, const std::string& word_text) {
  Config cfg = opt.config();
  TablePtr t = resolve_table(opt.table);
  GroupWord w = t->word(word_text);
  EqVerdict v = is_identity_word(w, cfg);
  std::string cert;
  if (v.is_unequal()) {
    auto path = nonidentity_certificate(w, cfg.depth);
    cert = path ? path_str(*path) : "unknown";
  }
  if (opt.machine()) {
    std::cout << "wp table=" << t->name() << " word=\"" << word_text << "\" verdict="
              << (v.is_equal() ? "identity" : v.is_unequal() ? "non-identity" : "unknown");
    if (v.is_unequal()) std::cout << " certificate=" << cert;
    if (v.is_unknown()) std::cout << " depth=" << v.budget;
    std::cout << '\n';
  } else {
    if (v.is_equal())
      std::cout << "identity\n";
    else if (v.is_unequal())
      std::cout << "non-identity, certificate " << cert << '\n';
    else
      std::cout << "unknown (depth budget " << v.budget << ")\n";
  }
  return verdict_exit(v);
}

void print_sections_tree(const Options& opt, const GroupWord& w,
                         const std::vector<int>& path, int depth) {
  WreathRecursion rec = wreath_recursion(w);
  if (opt.machine()) {
    std::cout << "sections path=" << (path.empty() ? "-" : "") ;
    for (std::size_t i = 0; i < path.size(); ++i) std::cout << path[i];
    std::cout << " root=\"" << root_str(rec.root) << "\" word=\"" << w.str() << "\"\n";
  } else {
    std::cout << std::string(2 * path.size(), ' ');
    if (!path.empty()) {
      for (std::size_t i = 0; i < path.size(); ++i) std::cout << path[i];
      std::cout << ": ";
    }
    std::cout << w.str() << "  [root " << root_str(rec.root) << "]\n";
  }
  if (depth == 0) return;
  for (int i = 0; i < static_cast<int>(rec.sections.size()); ++i) {
    std::vector<int> p = path;
    p.push_back(i + 1);
    print_sections_tree(opt, rec.sections[i], p, depth - 1);
  }
}

int cmd_sections(const Options& opt, const std::string& word_text, int depth) {
  TablePtr t = resolve_table(opt.table);
  print_sections_tree(opt, t->word(word_text), {}, depth);
  return kExitPass;
}

int cmd_axioms(const Options& opt, const std::string& system, int n_max,
               const std::string& mutate) {
  Config cfg = opt.config();
  systems::KappaMutation mut = systems::KappaMutation::none;
  if (mutate == "drop_phi") mut = systems::KappaMutation::drop_phi;
  else if (mutate == "range_slot") mut = systems::KappaMutation::clone_range_slot;
  else if (!mutate.empty()) throw std::invalid_argument("unknown mutation: " + mutate);

  AxiomReport rep;
  if (system == "perm2" || system == "perm3") {
    rep = check_axioms(systems::permutation_system(system.back() - '0'), n_max,
                       cfg.samples, cfg.seed);
  } else if (system == "braid2" || system == "braid3") {
    rep = check_axioms(systems::braid_system(system.back() - '0'), n_max,
                       cfg.samples, cfg.seed);
  } else {
    rep = check_axioms(systems::wreath_system(resolve_table(system), mut), n_max,
                       cfg.samples, cfg.seed);
  }
  std::cout << rep.str();
  return rep.all_passed() ? kExitPass : kExitFail;
}

int cmd_thomp(const Options& opt, const std::string& op,
              const std::vector<std::string>& literals) {
  Config cfg = opt.config();
  TablePtr t = resolve_table(opt.table);
  auto need = [&](std::size_t n) {
    if (literals.size() != n)
      throw std::invalid_argument("thomp " + op + " expects " + std::to_string(n) +
                                  " triple literal(s)");
  };
  if (op == "eval") {
    if (literals.empty()) throw std::invalid_argument("thomp eval needs triples");
    Triple acc = parse_triple(literals[0], t);
    for (std::size_t i = 1; i < literals.size(); ++i)
      acc = multiply(acc, parse_triple(literals[i], t));
    std::cout << (opt.machine() ? "thomp op=eval result=" : "") << triple_str(acc)
              << '\n';
    return kExitPass;
  }
  if (op == "eq" || op == "eqmodz") {
    need(2);
    Triple x = parse_triple(literals[0], t);
    Triple y = parse_triple(literals[1], t);
    EqVerdict v = op == "eq" ? eq(x, y, cfg) : eq_mod_Z(x, y, cfg);
    if (opt.machine())
      std::cout << "thomp op=" << op << " verdict=" << to_string(v.v) << '\n';
    else
      std::cout << to_string(v.v) << '\n';
    return verdict_exit(v);
  }
  if (op == "reduce") {
    need(1);
    Triple x = reduce_fully(parse_triple(literals[0], t), cfg);
    std::cout << (opt.machine() ? "thomp op=reduce result=" : "") << triple_str(x)
              << '\n';
    return kExitPass;
  }
  if (op == "pi") {
    need(1);
    Triple x = project_pi(parse_triple(literals[0], t));
    std::cout << (opt.machine() ? "thomp op=pi result=" : "") << triple_str(x) << '\n';
    return kExitPass;
  }
  if (op == "purify") {
    need(1);
    Triple x = parse_triple(literals[0], t);
    if (!is_trivial(x.left) || !is_trivial(x.right))
      throw std::invalid_argument("thomp purify expects a forest-free triple [1;g;1]");
    Purification p = purify(x.middle, cfg);
    if (opt.machine())
      std::cout << "thomp op=purify forest=" << forest_str(p.forest)
                << " result=" << triple_str(p.result) << '\n';
    else
      std::cout << "forest: " << forest_str(p.forest) << '\n'
                << "result: " << triple_str(p.result) << '\n';
    return kExitPass;
  }
  throw std::invalid_argument("unknown thomp operation: " + op);
}

int cmd_homology(const Options& opt, const std::vector<std::string>& what) {
  SimplicialComplex x;
  if (what.size() == 3 && what[0] == "matching") {
    x = matching_complex(std::atoi(what[1].c_str()), std::atoi(what[2].c_str()));
  } else if (what.size() == 2 && what[0] == "file") {
    std::ifstream in(what[1]);
    if (!in) throw std::invalid_argument("cannot read complex file: " + what[1]);
    x = parse_complex(in);
  } else {
    throw std::invalid_argument("homology expects: matching <d> <m> | file <path>");
  }
  for (const auto& h : reduced_homology(x)) {
    if (opt.machine())
      std::cout << "homology dim=" << h.dim << " rank=" << h.rank << " torsion=[";
    else
      std::cout << "dim " << h.dim << ": rank " << h.rank << ", torsion [";
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << h.torsion[i];
    }
    std::cout << "]\n";
  }
  return kExitPass;
}

int cmd_render(const Options& opt, const std::string& kind,
               const std::vector<std::string>& args) {
  std::ofstream file;
  std::ostream& os = out_stream(opt, file);
  if (kind == "triple") {
    if (args.size() != 1) throw std::invalid_argument("render triple <literal>");
    os << triple_dot(parse_triple(args[0], resolve_table(opt.table)));
    return kExitPass;
  }
  if (kind == "forest") {
    if (args.size() != 2)
      throw std::invalid_argument("render forest <degree> <notation>");
    os << forest_dot(parse_forest(args[1], std::atoi(args[0].c_str())));
    return kExitPass;
  }
  if (kind == "matching") {
    if (args.size() < 2)
      throw std::invalid_argument("render matching <d> <m> [starts...]");
    int d = std::atoi(args[0].c_str());
    int m = std::atoi(args[1].c_str());
    std::vector<int> starts;
    for (std::size_t i = 2; i < args.size(); ++i)
      starts.push_back(std::atoi(args[i].c_str()));
    os << matching_dot(Matching(d, m, starts));
    return kExitPass;
  }
  throw std::invalid_argument("render expects triple|forest|matching");
}

int cmd_kseries(const Options& opt, int max_n) {
  Config cfg = opt.config();
  TablePtr t = tables::brgrig();
  GroupWord w = t->word("a^-1 d^-1 a d a d a^-1 d^-1");
  GroupWord wt = t->word("d a d^-1 a^-1 d^-1 a^-1 d a");
  auto describe = [&](const GroupWord& u) -> std::string {
    if (!grig_is_identity(u)) {
      auto path = nonidentity_certificate(u, cfg.depth);
      return "not-in-kernel" + (path ? (" certificate=" + path_str(*path)) : "");
    }
    auto lvl = k_level(u, cfg.depth);
    return lvl ? std::to_string(*lvl) : "unknown";
  };
  for (int n = 0; n <= max_n; ++n) {
    if (opt.machine())
      std::cout << "kseries n=" << n << " w=" << describe(w) << " wt=" << describe(wt)
                << '\n';
    else
      std::cout << "n=" << n << "  k_level(sigma^n(w))=" << describe(w)
                << "  k_level(sigma^n(w~))=" << describe(wt) << '\n';
    w = sigma_endo(w);
    wt = sigma_endo(wt);
  }
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"brover: braided self-similar groups, cloning systems, and "
               "Thompson-like groups"};
  app.require_subcommand(1);
  app.fallthrough();   // global flags may follow the subcommand
  app.allow_extras();  // bracketed literals fall through as raw arguments
  Options opt;
  app.add_option("--table", opt.table,
                 "recursion table: brgrig, grig, zwrz, trivial2, trivial3, "
                 "selfid[:braid], or a table file");
  app.add_option("--format", opt.format, "output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--depth", opt.depth, "depth budget override");
  app.add_option("--samples", opt.samples, "sample count override");
  app.add_option("--seed", opt.seed, "random seed override");
  app.add_option("-o,--output", opt.output, "write output to a file");

  std::string word, system, mutate, thomp_op, render_kind;

  int depth_arg = 3, n_max = 6, kseries_max = 3;

  auto* wp = app.add_subcommand("wp", "word problem verdict for a table word");
  wp->add_option("word", word, "group word, e.g. \"b c d\"")->required();

  auto* sec = app.add_subcommand("sections", "print the wreath recursion tree");
  sec->add_option("word", word, "group word")->required();
  sec->add_option("--depth", depth_arg, "tree depth");

  auto* ax = app.add_subcommand("axioms", "randomized d-ary cloning axiom check");
  ax->add_option("system", system,
                 "perm2, perm3, braid2, braid3, or a table for the wreath system")
      ->required();
  ax->add_option("--n", n_max, "largest level to sample");
  ax->add_option("--mutate", mutate, "inject a kappa bug: drop_phi or range_slot");

  // triple literals carry brackets and commas, so the trailing arguments are
  // collected raw instead of through vector options
  auto* th = app.add_subcommand("thomp", "Thompson-like group arithmetic");
  th->add_option("op", thomp_op, "eval, eq, reduce, pi, purify, eqmodz")->required();
  th->allow_extras();

  auto* ho = app.add_subcommand("homology", "reduced integral homology");
  ho->allow_extras();

  auto* re = app.add_subcommand("render", "DOT diagrams");
  re->add_option("kind", render_kind, "triple, forest, or matching")->required();
  re->allow_extras();

  auto* ks = app.add_subcommand("kseries", "K_n levels of the sigma-iterated witnesses");
  ks->add_option("--max", kseries_max, "largest sigma power");

  CLI11_PARSE(app, argc, argv);

  auto extras = [&](CLI::App* sub) {
    std::vector<std::string> v = sub->remaining();
    std::vector<std::string> up = app.remaining();
    v.insert(v.end(), up.begin(), up.end());
    return v;
  };
  try {
    if (wp->parsed()) return cmd_wp(opt, word);
    if (sec->parsed()) return cmd_sections(opt, word, depth_arg);
    if (ax->parsed()) return cmd_axioms(opt, system, n_max, mutate);
    if (th->parsed()) return cmd_thomp(opt, thomp_op, extras(th));
    if (ho->parsed()) return cmd_homology(opt, extras(ho));
    if (re->parsed()) return cmd_render(opt, render_kind, extras(re));
    if (ks->parsed()) return cmd_kseries(opt, kseries_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
