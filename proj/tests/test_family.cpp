#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "combinach/errors.hpp"
#include "combinach/family.hpp"

using namespace combinach;

namespace {

std::vector<FiniteSet> subsets_of_window(index_t window) {
  std::vector<FiniteSet> out;
  for (std::uint32_t mask = 0; mask < (1u << (window - 1)); ++mask) {
    std::vector<index_t> v;
    for (index_t b = 0; b + 1 < window; ++b) {
      if (mask & (1u << b)) v.push_back(b + 1);
    }
    out.push_back(FiniteSet(std::move(v)));
  }
  return out;
}

std::vector<Family> builtin_catalog() {
  return {
      Family::singletons(),
      Family::all_finite(),
      Family::partition_blocks(),
      Family::block_capped_joined(BlockRule::farah()),
      Family::block_capped_joined(BlockRule::one()),
      Family::block_capped_local(BlockRule::one()),
      Family::block_capped_local(BlockRule::farah()),
      Family::schreier(ord_parse("1")),
      Family::schreier(ord_parse("2")),
      Family::schreier(ord_parse("w")),
      Family::antichains(),
  };
}

}  // namespace

TEST_CASE("membership examples") {
  const Family anti = Family::antichains();
  CHECK(family_contains(anti, FiniteSet({2, 3})));
  CHECK_FALSE(family_contains(anti, FiniteSet({1, 2})));

  const Family farah = Family::block_capped_joined(BlockRule::farah());
  CHECK(family_contains(farah, FiniteSet({8, 9, 16})));
  CHECK_FALSE(family_contains(farah, FiniteSet({8, 9, 10})));  // 3 > floor(8/3)

  const Family blocks = Family::partition_blocks();
  CHECK(family_contains(blocks, FiniteSet({4, 6, 7})));
  CHECK_FALSE(family_contains(blocks, FiniteSet({3, 4})));

  const Family expl = Family::explicit_family({FiniteSet({1, 2, 5})});
  CHECK(family_contains(expl, FiniteSet({1, 5})));  // hereditary closure
  CHECK(family_contains(expl, FiniteSet()));
  CHECK_FALSE(family_contains(expl, FiniteSet({2, 3})));

  const Family restricted = Family::restrict(Family::all_finite(), FiniteSet({1, 2, 3}));
  CHECK(family_contains(restricted, FiniteSet({1, 3})));
  CHECK_FALSE(family_contains(restricted, FiniteSet({1, 4})));
}

TEST_CASE("enumeration examples") {
  const auto singles = enumerate_members(Family::singletons(), 4);
  REQUIRE(singles.members.size() == 4);
  CHECK(singles.members[0] == FiniteSet());
  CHECK(singles.members[3] == FiniteSet({3}));

  const auto s1 = enumerate_members(Family::schreier(ord_parse("1")), 4);
  REQUIRE(s1.members.size() == 5);
  CHECK(s1.members[4] == FiniteSet({2, 3}));

  const auto blocks = enumerate_members(Family::partition_blocks(), 5);
  REQUIRE(blocks.members.size() == 6);
  CHECK(blocks.members[5] == FiniteSet({2, 3}));

  const auto truncated = enumerate_members(Family::all_finite(), 10, 7);
  CHECK(truncated.members.size() == 7);
  CHECK(truncated.truncated);
}

TEST_CASE("enumeration agrees with membership pointwise") {
  for (const Family& family : builtin_catalog()) {
    const auto result = enumerate_members(family, 9);
    std::set<std::vector<index_t>> enumerated;
    for (const auto& m : result.members) enumerated.insert(m.elements());
    for (const FiniteSet& f : subsets_of_window(9)) {
      CHECK(family_contains(family, f) == (bool)enumerated.count(f.elements()));
    }
  }
}

TEST_CASE("heredity of the built-in catalog") {
  for (const Family& family : builtin_catalog()) {
    for (const FiniteSet& member : enumerate_members(family, 9).members) {
      for (const FiniteSet& sub : subsets_of_window(9)) {
        if (sub.is_subset_of(member)) CHECK(family_contains(family, sub));
      }
    }
  }
}

TEST_CASE("delta system extraction") {
  {
    const auto d = delta_system_extract({FiniteSet({1, 2}), FiniteSet({1, 3}), FiniteSet({1, 4})}, 3);
    REQUIRE(d.has_value());
    CHECK(d->root == FiniteSet({1}));
    CHECK(d->sets.size() == 3);
  }
  {
    const auto d = delta_system_extract({FiniteSet({1}), FiniteSet({2}), FiniteSet({3})}, 3);
    REQUIRE(d.has_value());
    CHECK(d->root == FiniteSet());
  }
  {
    const auto d =
        delta_system_extract({FiniteSet({1, 2}), FiniteSet({2, 3}), FiniteSet({3, 4})}, 3);
    CHECK_FALSE(d.has_value());
  }

  SUBCASE("random inputs re-verified by an independent pairwise check") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<index_t> pick(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<FiniteSet> sets;
      for (int i = 0; i < 20; ++i) {
        std::vector<index_t> v = {pick(rng), pick(rng), pick(rng)};
        sets.push_back(FiniteSet::from_unsorted(std::move(v)));
      }
      const auto d = delta_system_extract(sets, 3);
      if (!d) continue;
      for (std::size_t i = 0; i < d->sets.size(); ++i) {
        for (std::size_t j = i + 1; j < d->sets.size(); ++j) {
          CHECK(d->sets[i].intersect(d->sets[j]) == d->root);
        }
      }
    }
  }
}

TEST_CASE("chain witnesses") {
  CHECK(chain_witness_check(Family::all_finite(), SetGenerator::all_indices(), 10));
  CHECK_FALSE(
      chain_witness_check(Family::schreier(ord_parse("1")), SetGenerator::all_indices(), 10));
  CHECK(chain_witness_check(Family::block_capped_joined(BlockRule::farah()),
                            SetGenerator::block_prefix(BlockRule::one()), 64));
}

TEST_CASE("precompactness verdicts and witnesses") {
  using V = PrecompactStatus::Verdict;
  CHECK(precompact_status(Family::schreier(ord_parse("w"))).verdict == V::Precompact);
  CHECK(precompact_status(Family::singletons()).verdict == V::Precompact);
  CHECK(precompact_status(Family::partition_blocks()).verdict == V::Precompact);
  CHECK(precompact_status(Family::block_capped_local(BlockRule::farah())).verdict ==
        V::Precompact);
  CHECK(precompact_status(Family::explicit_family({FiniteSet({1, 2})})).verdict == V::Precompact);

  for (const Family& family :
       {Family::all_finite(), Family::block_capped_joined(BlockRule::farah()),
        Family::block_capped_joined(BlockRule::one()), Family::antichains()}) {
    const auto st = precompact_status(family);
    CHECK(st.verdict == V::NotPrecompact);
    REQUIRE(st.witness.has_value());
    for (index_t n : {16, 64, 256}) {
      CHECK(chain_witness_check(family, *st.witness, n));
    }
  }
}

TEST_CASE("symbolic ranks") {
  CHECK(ord_print(*symbolic_rank(Family::schreier(ord_parse("1")))) == "w+1");
  CHECK(ord_print(*symbolic_rank(Family::schreier(ord_parse("w")))) == "w^w+1");
  CHECK(ord_print(*symbolic_rank(Family::explicit_family({FiniteSet({1, 2})}))) == "1");
  CHECK(ord_print(*symbolic_rank(Family::singletons())) == "2");
  CHECK(ord_print(*symbolic_rank(Family::partition_blocks())) == "2");
  CHECK_FALSE(symbolic_rank(Family::all_finite()).has_value());
  CHECK_FALSE(symbolic_rank(Family::block_capped_joined(BlockRule::one())).has_value());
  CHECK_FALSE(symbolic_rank(Family::antichains()).has_value());
}

TEST_CASE("spreading") {
  CHECK_FALSE(spreading_check(Family::schreier(ord_parse("2")), 12).has_value());
  CHECK_FALSE(spreading_check(Family::singletons(), 10).has_value());
  CHECK_FALSE(spreading_check(Family::all_finite(), 8).has_value());

  const auto blocks = spreading_check(Family::partition_blocks(), 6);
  REQUIRE(blocks.has_value());
  CHECK(blocks->member == FiniteSet({2, 3}));
  CHECK(blocks->dominating == FiniteSet({2, 4}));

  const auto expl = spreading_check(Family::explicit_family({FiniteSet({1, 2})}), 5);
  REQUIRE(expl.has_value());
  CHECK_FALSE(family_contains(Family::explicit_family({FiniteSet({1, 2})}), expl->dominating));
}
