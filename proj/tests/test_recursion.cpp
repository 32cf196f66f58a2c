#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "brover/grig.hpp"
#include "brover/recursion.hpp"

using namespace brover;

namespace {

GroupWord random_word(std::mt19937_64& rng, const TablePtr& t, int len) {
  GroupWord w(t);
  for (int i = 0; i < len && t->num_generators() > 0; ++i)
    w.push(static_cast<int>(rng() % t->num_generators()), (rng() & 1u) ? 1 : -1);
  return w;
}

} // namespace

TEST_CASE("roots of the braided Grigorchuk generators") {
  auto t = tables::brgrig();
  CHECK(braid_eq(root_braid(t->word("a")), BraidWord::zeta()));
  CHECK(root_braid(t->word("b")).trivial_word());
  CHECK(braid_eq(root_braid(t->word("a^3 b")), BraidWord::zeta_pow(3)));
}

TEST_CASE("sections of the braided Grigorchuk generators") {
  auto t = tables::brgrig();
  auto sb = sections(t->word("b"));
  CHECK(sb[0].str() == "a");
  CHECK(sb[1].str() == "c");
  auto sa = sections(t->word("a"));
  CHECK(sa[0].empty());
  CHECK(sa[1].empty());
  auto sab = sections(t->word("a b"));
  CHECK(sab[0].str() == "a");
  CHECK(sab[1].str() == "c");
}

TEST_CASE("wreath recursion pairs root and sections") {
  auto t = tables::brgrig();
  auto rb = wreath_recursion(t->word("b"));
  CHECK(std::get<BraidWord>(rb.root).trivial_word());
  auto ra = wreath_recursion(t->word("a^2"));
  CHECK(braid_eq(std::get<BraidWord>(ra.root), BraidWord::zeta_pow(2)));
  CHECK(ra.sections[0].empty());
  CHECK(ra.sections[1].empty());
}

TEST_CASE("bcd expands to (1, cdb) as in the rotation argument") {
  auto t = tables::brgrig();
  auto s = sections(t->word("b c d"));
  CHECK(s[0].empty());
  CHECK(s[1].str() == "c d b");
  auto s2 = sections(s[1]);
  CHECK(s2[0].empty());
  CHECK(s2[1].str() == "d b c");
}

TEST_CASE("ZwrZ conjugation identities hold at the recursion level") {
  auto t = tables::zwrz();
  for (int k = -3; k <= 3; ++k) {
    // a^{2k} b a^{-2k} = zeta^2 (1, a^k b a^{-k})
    GroupWord even = t->word("a").pow(2 * k) * t->word("b") * t->word("a").pow(-2 * k);
    auto re = wreath_recursion(even);
    CHECK(braid_eq(std::get<BraidWord>(re.root), BraidWord::zeta_pow(2)));
    GroupWord inner = t->word("a").pow(k) * t->word("b") * t->word("a").pow(-k);
    CHECK(re.sections[0].empty());
    CHECK(eq_in(re.sections[1], inner).is_equal());
    // a^{2k-1} b a^{-(2k-1)} = zeta^2 (a^k b a^{-k}, 1)
    GroupWord odd =
        t->word("a").pow(2 * k - 1) * t->word("b") * t->word("a").pow(-(2 * k - 1));
    auto ro = wreath_recursion(odd);
    CHECK(braid_eq(std::get<BraidWord>(ro.root), BraidWord::zeta_pow(2)));
    CHECK(ro.sections[1].empty());
    CHECK(eq_in(ro.sections[0], inner).is_equal());
  }
}

TEST_CASE("recursion is a homomorphism to the wreath product") {
  std::mt19937_64 rng(29);
  for (const TablePtr& t : {tables::brgrig(), tables::zwrz()}) {
    for (int trial = 0; trial < 30; ++trial) {
      GroupWord u = random_word(rng, t, 1 + static_cast<int>(rng() % 8));
      GroupWord v = random_word(rng, t, 1 + static_cast<int>(rng() % 8));
      auto ru = wreath_recursion(u);
      auto rv = wreath_recursion(v);
      auto ruv = wreath_recursion(u * v);
      CHECK(braid_eq(std::get<BraidWord>(ruv.root),
                     std::get<BraidWord>(ru.root) * std::get<BraidWord>(rv.root)));
      Permutation sigma = perm_of(std::get<BraidWord>(rv.root));
      for (int i = 1; i <= t->degree(); ++i) {
        GroupWord expect = ru.sections[sigma.of(i) - 1] * rv.sections[i - 1];
        CHECK(eq_in(ruv.sections[i - 1], expect).is_equal());
      }
    }
  }
}

TEST_CASE("self-identical verdicts") {
  auto selfid = tables::self_identical(BraidWord::zeta());
  auto v1 = is_self_identical(selfid, 8);
  CHECK(v1.v == Verdict::equal);
  auto v2 = is_self_identical(tables::brgrig(), 8);
  CHECK(v2.v == Verdict::unequal);
  CHECK(v2.witness == "a");
  auto v3 = is_self_identical(tables::zwrz(), 8);
  CHECK(v3.v == Verdict::unequal);
  CHECK(v3.witness == "a");
}

TEST_CASE("nonidentity certificates") {
  auto t = tables::brgrig();
  auto ca = nonidentity_certificate(t->word("a"), 0);
  REQUIRE(ca.has_value());
  CHECK(ca->empty());
  CHECK_FALSE(nonidentity_certificate(t->word("b c d"), 6).has_value());
  auto cb = nonidentity_certificate(t->word("b"), 1);
  REQUIRE(cb.has_value());
  CHECK(*cb == std::vector<int>{1});
}

TEST_CASE("eq_in dispatches to exact solvers") {
  auto t = tables::brgrig();
  CHECK(eq_in(t->word("b c"), t->word("c b")).is_equal());
  CHECK(eq_in(t->word("b"), t->word("c")).is_unequal());
  auto z = tables::zwrz();
  CHECK(eq_in(z->word("b a b a^-1"), z->word("a b a^-1 b")).is_equal());
  CHECK(eq_in(z->word("a b"), z->word("b a")).is_unequal());
}

TEST_CASE("ZwrZ normal form") {
  auto z = tables::zwrz();
  ZwrZNormalForm nf = zwrz_normal_form(z->word("a^2 b a^-1 b^-1 a^-1"));
  CHECK(nf.shift == 0);
  CHECK(nf.levels.size() == 2);
  CHECK(nf.levels.at(2) == 1);
  CHECK(nf.levels.at(1) == -1);
  GroupWord back = zwrz_word_from_normal_form(z, nf);
  CHECK(zwrz_normal_form(back) == nf);
  CHECK(eq_in(back, z->word("a^2 b a^-1 b^-1 a^-1")).is_equal());
}

TEST_CASE("kernel elements have pure iterated roots") {
  auto t = tables::brgrig();
  // words whose Grigorchuk image is trivial
  for (const char* text : {"b c b^-1 c^-1", "a^2", "a^-1 d^-1 a d a d a^-1 d^-1"}) {
    GroupWord w = t->word(text);
    CHECK(grig_is_identity_symmetric(grig_project(w, tables::grig())));
    std::vector<GroupWord> level{w};
    for (int depth = 0; depth < 4; ++depth) {
      std::vector<GroupWord> next;
      for (const auto& u : level) {
        BraidWord r = root_braid(u);
        CHECK(perm_of(r).is_identity()); // even power of zeta
        auto s = sections(u);
        next.insert(next.end(), s.begin(), s.end());
      }
      level = std::move(next);
    }
  }
}

TEST_CASE("pi compatibility of roots") {
  std::mt19937_64 rng(31);
  auto t = tables::brgrig();
  auto g = tables::grig();
  for (int trial = 0; trial < 40; ++trial) {
    GroupWord w = random_word(rng, t, 1 + static_cast<int>(rng() % 10));
    CHECK(perm_of(root_braid(w)) == root_perm(grig_project(w, g)));
  }
}

TEST_CASE("table file parses to the shipped brgrig table") {
  const char* path = std::getenv("BROVER_DATA");
  std::string file = std::string(path ? path : "data") + "/brgrig.table";
  std::ifstream in(file);
  if (!in) {
    in.open("../data/brgrig.table");
  }
  REQUIRE(in.good());
  TablePtr t = parse_table(in);
  CHECK(t->name() == "brgrig");
  CHECK(t->degree() == 2);
  CHECK(t->kind() == TableKind::braided);
  CHECK(t->num_generators() == 4);
  CHECK(braid_eq(std::get<BraidWord>(t->generator(t->generator_index("a")).root),
                 BraidWord::zeta()));
  auto sc = sections(t->word("c"));
  CHECK(sc[0].str() == "a^-1");
  CHECK(sc[1].str() == "d");
  // file tables have no registered solver: certificates still refute
  CHECK(eq_in(t->word("b"), t->word("c")).is_unequal());
  CHECK(eq_in(t->word("b c d"), t->empty_word()).is_unknown());
}

TEST_CASE("table validation rejects malformed input") {
  std::istringstream bad("group x\ndegree 2\nkind braided\ngen a = s1 | 1\n");
  CHECK_THROWS(parse_table(bad));
  std::istringstream bad2("group x\ndegree 2\nkind braided\ngen a = s4 | 1, 1\n");
  CHECK_THROWS(parse_table(bad2));
}
