#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "combinach/errors.hpp"
#include "combinach/setgen.hpp"
#include "combinach/tree.hpp"

using namespace combinach;

TEST_CASE("tree codes") {
  CHECK(tree_code("") == 1);
  CHECK(tree_code("0") == 2);
  CHECK(tree_code("1") == 3);
  CHECK(tree_code("01") == 5);
  CHECK(tree_decode(1) == "");
  CHECK(tree_decode(6) == "10");
  CHECK(tree_depth(1) == 0);
  CHECK(tree_depth(11) == 3);
  CHECK(tree_parent(5) == 2);
  CHECK(tree_child(2, 1) == 5);
  CHECK_THROWS_AS(tree_decode(0), validation_error);

  SUBCASE("round trip and depth consistency") {
    for (index_t n = 1; n <= (1 << 12); ++n) {
      CHECK(tree_code(tree_decode(n)) == n);
      CHECK(tree_depth(n) == (int)tree_decode(n).size());
      // the node weight 2^-|s| matches the dyadic block weight of the code
      CHECK(block_of(n) == tree_depth(n));
    }
  }

  SUBCASE("prefix order") {
    CHECK(tree_is_prefix(1, 13));
    CHECK(tree_is_prefix(3, 13));  // 13 = "101"
    CHECK_FALSE(tree_is_prefix(2, 13));
    CHECK(is_antichain(FiniteSet({2, 3})));
    CHECK_FALSE(is_antichain(FiniteSet({1, 2})));
  }
}

TEST_CASE("block rules") {
  CHECK(BlockRule::full().count(3) == 8);
  CHECK(BlockRule::one().count(5) == 1);
  CHECK(BlockRule::farah().count(0) == 1);
  CHECK(BlockRule::farah().count(3) == 2);   // floor(8/3)
  CHECK(BlockRule::farah().count(5) == 6);   // floor(32/5)
  CHECK(BlockRule::linear().count(4) == 4);
  CHECK(BlockRule::halved_by_log().count(1) == 2);
  CHECK(BlockRule::halved_by_log().count(2) == 2);
  CHECK(BlockRule::halved_by_log().count(3) == 4);
  CHECK(BlockRule::halved_by_log().count(4) == 4);
  CHECK(BlockRule::halved_by_log().count(7) == 32);
  CHECK(BlockRule::from_table({{2, 3}}, 1).count(2) == 3);
  CHECK(BlockRule::from_table({{2, 3}}, 1).count(4) == 1);
}

TEST_CASE("realize examples") {
  CHECK(SetGenerator::block_prefix(BlockRule::one()).realize(9) == FiniteSet({1, 2, 4, 8}));
  CHECK(SetGenerator::block_prefix(BlockRule::halved_by_log()).realize(16) ==
        FiniteSet({1, 2, 3, 4, 5, 8, 9, 10, 11}));
  CHECK(SetGenerator::tree_branch("0").realize(9) == FiniteSet({1, 2, 4, 8}));
  CHECK(SetGenerator::tree_branch("1").realize(16) == FiniteSet({1, 3, 7, 15}));
  CHECK(SetGenerator::all_indices().realize(5) == FiniteSet({1, 2, 3, 4}));
  CHECK(SetGenerator::tail_from(6).realize(9) == FiniteSet({6, 7, 8}));
  CHECK(SetGenerator::set_minus(SetGenerator::all_indices(), SetGenerator::tail_from(3))
            .realize(6) == FiniteSet({1, 2}));
  CHECK(SetGenerator::blocks_union(SetGenerator::explicit_finite(FiniteSet({1, 3})))
            .realize(17) == FiniteSet({2, 3, 8, 9, 10, 11, 12, 13, 14, 15}));
}

TEST_CASE("window monotonicity of realize") {
  const std::vector<SetGenerator> catalog = {
      SetGenerator::all_indices(),
      SetGenerator::explicit_finite(FiniteSet({2, 5, 100})),
      SetGenerator::block_prefix(BlockRule::one()),
      SetGenerator::block_prefix(BlockRule::farah()),
      SetGenerator::block_prefix(BlockRule::halved_by_log()),
      SetGenerator::block_prefix(BlockRule::from_table({{3, 2}}, 1)),
      SetGenerator::blocks_union(SetGenerator::block_prefix(BlockRule::one())),
      SetGenerator::tree_branch("011"),
      SetGenerator::tail_from(7),
      SetGenerator::set_union(SetGenerator::tree_branch("0"), SetGenerator::tail_from(20)),
      SetGenerator::set_intersect(SetGenerator::all_indices(),
                                  SetGenerator::block_prefix(BlockRule::one())),
      SetGenerator::set_minus(SetGenerator::all_indices(),
                              SetGenerator::block_prefix(BlockRule::one())),
  };
  for (const auto& gen : catalog) {
    for (index_t n = 8; n <= 256; n *= 2) {
      const FiniteSet small = gen.realize(n);
      const FiniteSet big = gen.realize(2 * n);
      CHECK(small == big.restrict_window(1, n));
    }
  }
}
