#include "doctest.h"
#include "helpers.hpp"
#include "szmielew/evaluator.hpp"

using namespace testing;
using oracle::FiniteAbelianGroup;

TEST_CASE("group construction") {
  FiniteAbelianGroup g({4, 2, 9});
  CHECK(g.order() == 72);
  CHECK(g.cyclic_orders() == std::vector<std::uint64_t>{2, 4, 9});
  CHECK_THROWS_AS(FiniteAbelianGroup({6}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteAbelianGroup({256, 256, 2}), std::invalid_argument);
  CHECK((FiniteAbelianGroup({2}) + FiniteAbelianGroup({3})).order() == 6);
}

TEST_CASE("brute force examples") {
  FiniteAbelianGroup z4z4({4, 4});
  CHECK(brute_multiple_size(z4z4, 2, 1) == 4);
  CHECK(brute_invariant(A(ThetaEq, 2, 1, 2), z4z4));
  CHECK(brute_invariant(A(PhiEq, 2, 1, 2), z4z4));
  CHECK(brute_invariant(A(PhiEq, 2, 0, 0), z4z4));
  FiniteAbelianGroup z2z9({2, 9});
  CHECK(brute_multiple_size(z2z9, 2, 1) == 9);
  CHECK(brute_invariant(A(GammaEq, 3, 0, 1), z2z9));
  CHECK(brute_invariant(A(GammaEq, 3, 2, 0), z2z9));
  CHECK(brute_invariant(A(DeltaEq, 3, 1, 6), z2z9));
}

TEST_CASE("descriptor_of reads multiplicities") {
  auto d = oracle::descriptor_of(FiniteAbelianGroup({2, 2, 8, 3}));
  CHECK(d == desc({{2, comp({2, 0, 1})}, {3, comp({1})}}));
  CHECK(oracle::descriptor_of(FiniteAbelianGroup({})).is_zero());
}

TEST_CASE("groups_up_to lists isomorphism classes") {
  // Abelian groups of order 16: 5 classes; of order 8: 3; total of 2-groups
  // up to 16 is 1 + 1 + 2 + 3 + 5.
  CHECK(oracle::groups_up_to({2}, 16).size() == 12);
  // Orders up to 6 from {2,3}: 1, 2, 3, 4 (x2), 6.
  CHECK(oracle::groups_up_to({2, 3}, 6).size() == 6);
  for (const auto& g : oracle::groups_up_to({2, 3}, 256)) CHECK(g.order() <= 256);
}

TEST_CASE("oracle agrees with the evaluator on small groups") {
  const auto atoms = atom_grid(3, 8);
  for (const auto& g : oracle::groups_up_to({2, 3}, 72)) {
    const auto d = oracle::descriptor_of(g);
    for (const auto& a : atoms) {
      INFO(a.to_string(), " on ", d.to_string());
      CHECK(oracle::brute_invariant(a, g) == eval_atom(a, d));
    }
  }
}

TEST_CASE("descriptor enumeration count and order") {
  auto s = oracle::enumerate_descriptors({2}, 0, {0, 1}, {0});
  CHECK(s.count() == 16);
  std::uint64_t seen = 0;
  auto first = s.next();
  REQUIRE(first);
  CHECK(first->is_zero());
  ++seen;
  while (s.next()) ++seen;
  CHECK(seen == 16);
  CHECK_FALSE(s.next());

  auto t = oracle::enumerate_descriptors({2, 3}, 2, {0, 1, 2, W}, {0, 1});
  CHECK(t.count() == 4ULL * (1024ULL * 2) * (1024ULL * 2));
}
