#pragma once

#include <map>
#include <memory>
#include <string>

#include "combinach/finite_set.hpp"

namespace combinach {

// Per-block point counts for BlockPrefix generators and block-capped
// families.  Block n is [2^n, 2^(n+1)).
enum class BlockRuleKind {
  Full,         // 2^n
  One,          // 1
  Farah,        // floor(2^n / n) for n >= 1, block 0 unrestricted
  Linear,       // n for n >= 1, block 0 unrestricted
  HalvedByLog,  // 2^(n-k), k = floor(log2 n), for n >= 1
  Table,        // finite table with a default value
};

struct BlockRule {
  BlockRuleKind kind = BlockRuleKind::Full;
  std::map<index_t, index_t> table;
  index_t table_default = 0;

  // Count for block n; unrestricted entries come back as the block size.
  index_t count(index_t block) const;
  std::string describe() const;

  static BlockRule full() { return {BlockRuleKind::Full, {}, 0}; }
  static BlockRule one() { return {BlockRuleKind::One, {}, 0}; }
  static BlockRule farah() { return {BlockRuleKind::Farah, {}, 0}; }
  static BlockRule linear() { return {BlockRuleKind::Linear, {}, 0}; }
  static BlockRule halved_by_log() { return {BlockRuleKind::HalvedByLog, {}, 0}; }
  static BlockRule from_table(std::map<index_t, index_t> t, index_t dflt) {
    return {BlockRuleKind::Table, std::move(t), dflt};
  }
};

index_t block_of(index_t k);          // n with k in [2^n, 2^(n+1)); k >= 1
index_t block_start(index_t block);   // 2^n
index_t block_size(index_t block);    // 2^n

// A finite program denoting a (possibly infinite) subset of the positive
// integers; realize(N) yields the denoted set intersected with [1, N).
class SetGenerator {
public:
  enum class Kind {
    ExplicitFinite,
    AllIndices,
    BlockPrefix,
    BlocksUnion,
    TreeBranch,
    Union,
    Intersect,
    Minus,
    TailFrom,
  };

  static SetGenerator explicit_finite(FiniteSet set);
  static SetGenerator all_indices();
  static SetGenerator block_prefix(BlockRule rule);
  static SetGenerator blocks_union(SetGenerator block_indices);
  static SetGenerator tree_branch(std::string period);
  static SetGenerator set_union(SetGenerator a, SetGenerator b);
  static SetGenerator set_intersect(SetGenerator a, SetGenerator b);
  static SetGenerator set_minus(SetGenerator a, SetGenerator b);
  static SetGenerator tail_from(index_t n);

  Kind kind() const { return kind_; }
  FiniteSet realize(index_t window) const;  // window >= 1
  std::string describe() const;

private:
  Kind kind_ = Kind::AllIndices;
  FiniteSet set_;
  BlockRule rule_;
  std::shared_ptr<const SetGenerator> a_, b_;
  std::string period_;
  index_t from_ = 1;
};

}  // namespace combinach
