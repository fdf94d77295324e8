#include "combinach/setgen.hpp"

#include <algorithm>
#include <limits>

#include "combinach/errors.hpp"

namespace combinach {

index_t block_of(index_t k) {
  if (k < 1) throw validation_error("indices start at 1");
  index_t n = 0;
  while ((index_t{2} << n) <= k) ++n;
  return n;
}

index_t block_start(index_t block) { return index_t{1} << block; }
index_t block_size(index_t block) { return index_t{1} << block; }

index_t BlockRule::count(index_t block) const {
  if (block < 0) throw validation_error("block index must be >= 0");
  const index_t size = block_size(block);
  switch (kind) {
    case BlockRuleKind::Full:
      return size;
    case BlockRuleKind::One:
      return 1;
    case BlockRuleKind::Farah:
      if (block == 0) return size;  // unrestricted on the single point 1
      return (index_t{1} << block) / block;
    case BlockRuleKind::Linear:
      if (block == 0) return size;
      return std::min(block, size);
    case BlockRuleKind::HalvedByLog: {
      if (block == 0) return size;
      index_t k = 0;
      while ((index_t{2} << k) <= block) ++k;  // k = floor(log2 block)
      return index_t{1} << (block - k);
    }
    case BlockRuleKind::Table: {
      auto it = table.find(block);
      const index_t c = it == table.end() ? table_default : it->second;
      return std::min(c, size);
    }
  }
  throw validation_error("unknown block rule");
}

std::string BlockRule::describe() const {
  switch (kind) {
    case BlockRuleKind::Full:
      return "full";
    case BlockRuleKind::One:
      return "one";
    case BlockRuleKind::Farah:
      return "farah";
    case BlockRuleKind::Linear:
      return "linear";
    case BlockRuleKind::HalvedByLog:
      return "halved-by-log";
    case BlockRuleKind::Table: {
      std::string out = "table{";
      bool first = true;
      for (const auto& [k, v] : table) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(k) + ":" + std::to_string(v);
      }
      return out + ";default=" + std::to_string(table_default) + "}";
    }
  }
  return "?";
}

SetGenerator SetGenerator::explicit_finite(FiniteSet set) {
  SetGenerator g;
  g.kind_ = Kind::ExplicitFinite;
  g.set_ = std::move(set);
  return g;
}

SetGenerator SetGenerator::all_indices() {
  SetGenerator g;
  g.kind_ = Kind::AllIndices;
  return g;
}

SetGenerator SetGenerator::block_prefix(BlockRule rule) {
  SetGenerator g;
  g.kind_ = Kind::BlockPrefix;
  g.rule_ = std::move(rule);
  return g;
}

SetGenerator SetGenerator::blocks_union(SetGenerator block_indices) {
  SetGenerator g;
  g.kind_ = Kind::BlocksUnion;
  g.a_ = std::make_shared<SetGenerator>(std::move(block_indices));
  return g;
}

SetGenerator SetGenerator::tree_branch(std::string period) {
  if (period.empty()) throw validation_error("tree branch period must be nonempty");
  for (char c : period) {
    if (c != '0' && c != '1') throw validation_error("tree branch period must be binary");
  }
  SetGenerator g;
  g.kind_ = Kind::TreeBranch;
  g.period_ = std::move(period);
  return g;
}

SetGenerator SetGenerator::set_union(SetGenerator a, SetGenerator b) {
  SetGenerator g;
  g.kind_ = Kind::Union;
  g.a_ = std::make_shared<SetGenerator>(std::move(a));
  g.b_ = std::make_shared<SetGenerator>(std::move(b));
  return g;
}

SetGenerator SetGenerator::set_intersect(SetGenerator a, SetGenerator b) {
  SetGenerator g = set_union(std::move(a), std::move(b));
  g.kind_ = Kind::Intersect;
  return g;
}

SetGenerator SetGenerator::set_minus(SetGenerator a, SetGenerator b) {
  SetGenerator g = set_union(std::move(a), std::move(b));
  g.kind_ = Kind::Minus;
  return g;
}

SetGenerator SetGenerator::tail_from(index_t n) {
  SetGenerator g;
  g.kind_ = Kind::TailFrom;
  g.from_ = std::max<index_t>(n, 1);
  return g;
}

FiniteSet SetGenerator::realize(index_t window) const {
  if (window < 1) throw validation_error("realize window must be >= 1");
  switch (kind_) {
    case Kind::ExplicitFinite:
      return set_.restrict_window(1, window);
    case Kind::AllIndices:
      return FiniteSet::interval(1, window);
    case Kind::BlockPrefix: {
      std::vector<index_t> v;
      for (index_t n = 0; block_start(n) < window; ++n) {
        const index_t take = std::min(rule_.count(n), block_size(n));
        for (index_t k = block_start(n); k < block_start(n) + take && k < window; ++k) {
          v.push_back(k);
        }
      }
      return FiniteSet(std::move(v));
    }
    case Kind::BlocksUnion: {
      index_t max_block = 0;
      while (block_start(max_block + 1) < window) ++max_block;
      const FiniteSet blocks = a_->realize(max_block + 1);
      std::vector<index_t> v;
      for (index_t n : blocks) {
        for (index_t k = block_start(n); k < block_start(n) + block_size(n) && k < window; ++k) {
          v.push_back(k);
        }
      }
      return FiniteSet(std::move(v));
    }
    case Kind::TreeBranch: {
      std::vector<index_t> v;
      index_t c = 1;
      std::size_t i = 0;
      while (c < window) {
        v.push_back(c);
        if (c > (std::numeric_limits<index_t>::max() - 1) / 2) break;
        c = 2 * c + (period_[i % period_.size()] - '0');
        ++i;
      }
      return FiniteSet(std::move(v));
    }
    case Kind::Union:
      return a_->realize(window).unite(b_->realize(window));
    case Kind::Intersect:
      return a_->realize(window).intersect(b_->realize(window));
    case Kind::Minus:
      return a_->realize(window).minus(b_->realize(window));
    case Kind::TailFrom:
      return FiniteSet::interval(from_, window);
  }
  throw validation_error("unknown generator kind");
}

std::string SetGenerator::describe() const {
  switch (kind_) {
    case Kind::ExplicitFinite:
      return "explicit" + set_.to_string();
    case Kind::AllIndices:
      return "all";
    case Kind::BlockPrefix:
      return "block-prefix(" + rule_.describe() + ")";
    case Kind::BlocksUnion:
      return "blocks-union(" + a_->describe() + ")";
    case Kind::TreeBranch:
      return "tree-branch(" + period_ + ")";
    case Kind::Union:
      return "union(" + a_->describe() + "," + b_->describe() + ")";
    case Kind::Intersect:
      return "intersect(" + a_->describe() + "," + b_->describe() + ")";
    case Kind::Minus:
      return "minus(" + a_->describe() + "," + b_->describe() + ")";
    case Kind::TailFrom:
      return "tail-from(" + std::to_string(from_) + ")";
  }
  return "?";
}

}  // namespace combinach
