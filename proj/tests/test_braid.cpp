#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brover/braid.hpp"

using namespace brover;

namespace {

BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
  BraidWord b(n);
  for (int i = 0; i < len && n >= 2; ++i)
    b.push(1 + static_cast<int>(rng() % (n - 1)), (rng() & 1u) ? 1 : -1);
  return b;
}

} // namespace

TEST_CASE("permutation basics") {
  Permutation id3 = Permutation::identity(3);
  CHECK(id3.is_identity());
  Permutation t12 = Permutation::transposition(3, 1);
  CHECK(t12.of(1) == 2);
  CHECK(t12.of(2) == 1);
  CHECK(t12.of(3) == 3);
  CHECK(compose(t12, t12) == id3);
  CHECK(compose(t12, t12.inverse()) == id3);
  CHECK(parse_permutation("(1 2)(3 4)", 4).of(3) == 4);
  CHECK(parse_permutation("e", 4).is_identity());
}

TEST_CASE("perm_of sends zeta to the transposition") {
  CHECK(perm_of(BraidWord::zeta()) == Permutation::transposition(2, 1));
  CHECK(perm_of(BraidWord(3)).is_identity());
  CHECK(perm_of(BraidWord(2, {{1, 1}, {1, 1}})).is_identity());
}

TEST_CASE("perm_of is a homomorphism") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord a = random_braid(rng, n, 6);
    BraidWord b = random_braid(rng, n, 6);
    CHECK(perm_of(a * b) == compose(perm_of(a), perm_of(b)));
  }
}

TEST_CASE("artin action on generators") {
  BraidWord s1(2, {{1, 1}});
  CHECK(artin_action(s1, FreeWord::generator(2)) == FreeWord::generator(1));
  BraidWord cancel(2, {{1, 1}, {1, -1}});
  CHECK(artin_action(cancel, FreeWord::generator(1)) == FreeWord::generator(1));
  // two applications of x1 -> x1 x2 x1^-1 compose to x1 x2 x1 x2^-1 x1^-1
  BraidWord s1s1(2, {{1, 1}, {1, 1}});
  FreeWord expect;
  expect.push(1, 1);
  expect.push(2, 1);
  expect.push(1, 1);
  expect.push(2, -1);
  expect.push(1, -1);
  CHECK(artin_action(s1s1, FreeWord::generator(1)) == expect);
}

TEST_CASE("braid_eq knows the braid relations") {
  BraidWord lhs(3, {{1, 1}, {2, 1}, {1, 1}});
  BraidWord rhs(3, {{2, 1}, {1, 1}, {2, 1}});
  CHECK(braid_eq(lhs, rhs));
  CHECK_FALSE(braid_eq(BraidWord(2, {{1, 1}}), BraidWord(2, {{1, -1}})));
  CHECK(braid_eq(BraidWord(4, {{1, 1}, {3, 1}}), BraidWord(4, {{3, 1}, {1, 1}})));
  CHECK_THROWS(braid_eq(BraidWord(2), BraidWord(3)));
}

TEST_CASE("braid_eq respects products and inverses") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord a = random_braid(rng, n, 5);
    BraidWord b = random_braid(rng, n, 5);
    CHECK(braid_eq(a * a.inverse(), BraidWord(n)));
    CHECK(braid_eq((a * b).inverse(), b.inverse() * a.inverse()));
  }
}

TEST_CASE("purity") {
  CHECK(is_pure(BraidWord(2, {{1, 1}, {1, 1}})));
  CHECK_FALSE(is_pure(BraidWord::zeta()));
  BraidWord comm(3, {{1, 1}, {2, 1}, {1, -1}, {2, -1}});
  CHECK_FALSE(is_pure(comm));
  CHECK(perm_of(comm) == Permutation({3, 1, 2}));
}

TEST_CASE("clone_perm matches the pictorial rule") {
  CHECK(clone_perm(Permutation::identity(2), 1, 2) == Permutation::identity(3));
  CHECK(clone_perm(Permutation::transposition(2, 1), 1, 2) == Permutation({2, 3, 1}));
  CHECK(clone_perm(Permutation::transposition(2, 1), 2, 2) == Permutation({3, 1, 2}));
}

TEST_CASE("clone_braid basics") {
  CHECK(clone_braid(BraidWord(3), 2, 2).trivial_word());
  CHECK(clone_braid(BraidWord(3), 2, 2).strands() == 4);
  BraidWord r = clone_braid(BraidWord::zeta(), 2, 2);
  CHECK(perm_of(r) == clone_perm(Permutation::transposition(2, 1), 2, 2));
}

TEST_CASE("braid cloning satisfies C1 on random instances") {
  std::mt19937_64 rng(13);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 40; ++trial) {
      int n = 2 + static_cast<int>(rng() % 5);
      BraidWord b = random_braid(rng, n, 8);
      BraidWord g = random_braid(rng, n, 8);
      int k = 1 + static_cast<int>(rng() % n);
      BraidWord lhs = clone_braid(b * g, k, d);
      BraidWord rhs = clone_braid(b, perm_of(g).of(k), d) * clone_braid(g, k, d);
      CHECK(braid_eq(lhs, rhs));
    }
  }
}

TEST_CASE("braid cloning satisfies C2 and C3 on random instances") {
  std::mt19937_64 rng(17);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 40; ++trial) {
      int n = 2 + static_cast<int>(rng() % 5);
      BraidWord g = random_braid(rng, n, 8);
      int k = 1 + static_cast<int>(rng() % (n - 1));
      int l = k + 1 + static_cast<int>(rng() % (n - k));
      CHECK(braid_eq(clone_braid(clone_braid(g, l, d), k, d),
                     clone_braid(clone_braid(g, k, d), l + d - 1, d)));
      int kk = 1 + static_cast<int>(rng() % n);
      Permutation after = perm_of(clone_braid(g, kk, d));
      Permutation cloned = clone_perm(perm_of(g), kk, d);
      for (int i = 1; i <= n + d - 1; ++i) {
        if (i >= kk && i <= kk + d - 1) continue;
        CHECK(after.of(i) == cloned.of(i));
      }
    }
  }
}

TEST_CASE("shift_embed") {
  CHECK(shift_embed(BraidWord::zeta(), 2, 2).letters() ==
        std::vector<BraidWord::Letter>{{2, 1}});
  CHECK(shift_embed(BraidWord::zeta(), 2, 2).strands() == 3);
  CHECK(shift_embed(BraidWord::zeta(), 1, 1).letters() == BraidWord::zeta().letters());
  BraidWord x(3, {{1, 1}, {2, 1}});
  BraidWord s = shift_embed(x, 3, 5);
  CHECK(s.strands() == 7);
  CHECK(s.letters() == std::vector<BraidWord::Letter>{{3, 1}, {4, 1}});
}

TEST_CASE("direct_sum of braids") {
  BraidWord s = direct_sum(BraidWord::zeta(), BraidWord::zeta());
  CHECK(s.strands() == 4);
  CHECK(s.letters() == std::vector<BraidWord::Letter>{{1, 1}, {3, 1}});
  CHECK(direct_sum(BraidWord(2), BraidWord::zeta()).letters() ==
        std::vector<BraidWord::Letter>{{3, 1}});
  CHECK(direct_sum(BraidWord::zeta(), BraidWord(1)).strands() == 3);
}

TEST_CASE("delete_strands") {
  BraidWord b(4, {{1, 1}, {3, 1}});
  CHECK(delete_strands(b, {}).letters() == b.letters());
  BraidWord d4 = delete_strands(b, {4});
  CHECK(d4.strands() == 3);
  CHECK(d4.letters() == std::vector<BraidWord::Letter>{{1, 1}});
}

TEST_CASE("delete_strands undoes clone_braid") {
  std::mt19937_64 rng(19);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 30; ++trial) {
      int n = 2 + static_cast<int>(rng() % 3);
      BraidWord b = random_braid(rng, n, 7);
      int k = 1 + static_cast<int>(rng() % n);
      BraidWord cloned = clone_braid(b, k, d);
      std::set<int> clones;
      for (int i = k + 1; i <= k + d - 1; ++i) clones.insert(i);
      CHECK(braid_eq(delete_strands(cloned, clones), b));
    }
  }
}

TEST_CASE("supported_on_block") {
  auto r = supported_on_block(BraidWord(3, {{2, 1}}), 2, 2);
  REQUIRE(r.has_value());
  CHECK(braid_eq(*r, BraidWord::zeta()));
  CHECK_FALSE(supported_on_block(BraidWord(3, {{1, 1}}), 2, 2).has_value());
  BraidWord comm(4, {{2, 1}, {3, 1}, {2, -1}, {3, -1}});
  auto r2 = supported_on_block(comm, 2, 3);
  REQUIRE(r2.has_value());
  CHECK(braid_eq(*r2, BraidWord(3, {{1, 1}, {2, 1}, {1, -1}, {2, -1}})));
}

TEST_CASE("supported_on_block recovers shift_embed inputs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    int n = 1 + static_cast<int>(rng() % 3);
    int k = 1 + static_cast<int>(rng() % n);
    BraidWord x = random_braid(rng, d, 6);
    auto back = supported_on_block(shift_embed(x, k, n), k, d);
    REQUIRE(back.has_value());
    CHECK(braid_eq(*back, x));
  }
}

TEST_CASE("braid text round trip") {
  BraidWord b = parse_braid("B4: s1 s3^-1 s1^2");
  CHECK(b.strands() == 4);
  CHECK(b.letters() ==
        std::vector<BraidWord::Letter>{{1, 1}, {3, -1}, {1, 1}, {1, 1}});
  CHECK(parse_braid(b.str(), 4).letters() == b.letters());
  CHECK(parse_braid("e", 2).trivial_word());
}
