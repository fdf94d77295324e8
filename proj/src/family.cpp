#include "combinach/family.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "combinach/errors.hpp"
#include "combinach/schreier.hpp"
#include "combinach/tree.hpp"

namespace combinach {

Family Family::explicit_family(std::vector<FiniteSet> sets) {
  Family f;
  f.kind_ = Kind::Explicit;
  f.sets_ = std::move(sets);
  return f;
}

Family Family::singletons() {
  Family f;
  f.kind_ = Kind::Singletons;
  return f;
}

Family Family::all_finite() {
  Family f;
  f.kind_ = Kind::AllFinite;
  return f;
}

Family Family::partition_blocks() {
  Family f;
  f.kind_ = Kind::PartitionBlocks;
  return f;
}

Family Family::block_capped_joined(BlockRule cap) {
  Family f;
  f.kind_ = Kind::BlockCappedJoined;
  f.cap_ = std::move(cap);
  return f;
}

Family Family::block_capped_local(BlockRule cap) {
  Family f;
  f.kind_ = Kind::BlockCappedLocal;
  f.cap_ = std::move(cap);
  return f;
}

Family Family::schreier(OrdinalCNF alpha) {
  if (alpha.depth() > ordinal_depth_cap()) {
    throw validation_error("schreier index exceeds the ordinal depth cap");
  }
  Family f;
  f.kind_ = Kind::Schreier;
  f.alpha_ = std::move(alpha);
  return f;
}

Family Family::antichains() {
  Family f;
  f.kind_ = Kind::Antichains;
  return f;
}

Family Family::restrict(Family base, FiniteSet window) {
  Family f;
  f.kind_ = Kind::Restrict;
  f.base_ = std::make_shared<Family>(std::move(base));
  f.window_ = std::move(window);
  return f;
}

std::string Family::describe() const {
  switch (kind_) {
    case Kind::Explicit: {
      std::string out = "explicit[";
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (i) out += ",";
        out += sets_[i].to_string();
      }
      return out + "]";
    }
    case Kind::Singletons:
      return "singletons";
    case Kind::AllFinite:
      return "all-finite";
    case Kind::PartitionBlocks:
      return "partition-blocks";
    case Kind::BlockCappedJoined:
      return "block-capped-joined(" + cap_.describe() + ")";
    case Kind::BlockCappedLocal:
      return "block-capped-local(" + cap_.describe() + ")";
    case Kind::Schreier:
      return "schreier(" + ord_print(alpha_) + ")";
    case Kind::Antichains:
      return "antichains";
    case Kind::Restrict:
      return "restrict(" + base_->describe() + "," + window_.to_string() + ")";
  }
  return "?";
}

bool family_contains(const Family& family, const FiniteSet& set) {
  switch (family.kind()) {
    case Family::Kind::Explicit: {
      if (set.empty()) return true;
      for (const FiniteSet& member : family.explicit_sets()) {
        if (set.is_subset_of(member)) return true;
      }
      return false;
    }
    case Family::Kind::Singletons:
      return set.size() <= 1;
    case Family::Kind::AllFinite:
      return true;
    case Family::Kind::PartitionBlocks:
      return set.empty() || block_of(set.min()) == block_of(set.max());
    case Family::Kind::BlockCappedJoined: {
      if (set.empty()) return true;
      for (index_t n = block_of(set.min()); n <= block_of(set.max()); ++n) {
        const index_t in_block =
            (index_t)set.restrict_window(block_start(n), block_start(n + 1)).size();
        if (in_block > family.cap().count(n)) return false;
      }
      return true;
    }
    case Family::Kind::BlockCappedLocal: {
      if (set.empty()) return true;
      if (block_of(set.min()) != block_of(set.max())) return false;
      return (index_t)set.size() <= family.cap().count(block_of(set.min()));
    }
    case Family::Kind::Schreier:
      return schreier_contains(family.alpha(), set);
    case Family::Kind::Antichains:
      return is_antichain(set);
    case Family::Kind::Restrict:
      return set.is_subset_of(family.window()) && family_contains(family.base(), set);
  }
  return false;
}

EnumerationResult enumerate_members(const Family& family, index_t window,
                                    std::size_t max_count) {
  if (window < 1) throw validation_error("enumeration window must be >= 1");
  EnumerationResult result;
  const index_t top = window - 1;  // universe [1, window)

  // size-major, lexicographic-minor order, stopping at max_count
  std::vector<index_t> current;
  bool done = false;
  std::function<void(index_t, std::size_t)> extend = [&](index_t from, std::size_t want) {
    if (done) return;
    if (want == 0) {
      FiniteSet candidate{std::vector<index_t>(current)};
      if (family_contains(family, candidate)) {
        if (result.members.size() >= max_count) {
          result.truncated = true;
          done = true;
          return;
        }
        result.members.push_back(std::move(candidate));
      }
      return;
    }
    for (index_t v = from; v + (index_t)want - 1 <= top && !done; ++v) {
      current.push_back(v);
      extend(v + 1, want - 1);
      current.pop_back();
    }
  };

  for (std::size_t size = 0; size <= (std::size_t)top && !done; ++size) {
    extend(1, size);
  }
  return result;
}

std::optional<DeltaSystem> delta_system_extract(const std::vector<FiniteSet>& sets, int m) {
  if (m < 2) throw precondition_error("delta system size must be >= 2");

  // Candidate roots: all subsets of the input sets, smallest first.
  std::set<std::vector<index_t>> seen;
  std::vector<FiniteSet> roots;
  for (const FiniteSet& s : sets) {
    const std::size_t n = s.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<index_t> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) sub.push_back(s[i]);
      }
      if (seen.insert(sub).second) roots.push_back(FiniteSet(std::move(sub)));
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const FiniteSet& a, const FiniteSet& b) { return a.size_lex_less(b); });

  for (const FiniteSet& root : roots) {
    // Sets containing the root whose petals must be pairwise disjoint.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (root.is_subset_of(sets[i])) candidates.push_back(i);
    }
    if ((int)candidates.size() < m) continue;

    std::vector<std::size_t> chosen;
    FiniteSet used;  // union of petals chosen so far
    std::function<bool(std::size_t)> pick = [&](std::size_t from) {
      if ((int)chosen.size() == m) return true;
      for (std::size_t ci = from; ci < candidates.size(); ++ci) {
        const FiniteSet petal = sets[candidates[ci]].minus(root);
        if (!petal.intersect(used).empty()) continue;
        chosen.push_back(candidates[ci]);
        FiniteSet saved = used;
        used = used.unite(petal);
        if (pick(ci + 1)) return true;
        used = saved;
        chosen.pop_back();
      }
      return false;
    };
    if (pick(0)) {
      DeltaSystem d;
      d.root = root;
      for (std::size_t i : chosen) d.sets.push_back(sets[i]);
      return d;
    }
  }
  return std::nullopt;
}

bool chain_witness_check(const Family& family, const SetGenerator& gen, index_t window) {
  const FiniteSet realized = gen.realize(window);
  for (std::size_t k = 0; k <= realized.size(); ++k) {
    if (!family_contains(family, realized.prefix(k))) return false;
  }
  return true;
}

PrecompactStatus precompact_status(const Family& family) {
  PrecompactStatus st;
  using V = PrecompactStatus::Verdict;
  switch (family.kind()) {
    case Family::Kind::Explicit:
      st.verdict = V::Precompact;
      st.reason = "finite family";
      return st;
    case Family::Kind::Restrict:
      st.verdict = V::Precompact;
      st.reason = "members confined to a finite window";
      return st;
    case Family::Kind::Singletons:
      st.verdict = V::Precompact;
      st.reason = "sets of size at most 1";
      return st;
    case Family::Kind::PartitionBlocks:
      st.verdict = V::Precompact;
      st.reason = "members confined to single finite blocks";
      return st;
    case Family::Kind::BlockCappedLocal:
      st.verdict = V::Precompact;
      st.reason = "members confined to single finite blocks";
      return st;
    case Family::Kind::Schreier:
      st.verdict = V::Precompact;
      st.reason = "schreier families are compact";
      return st;
    case Family::Kind::AllFinite:
      st.verdict = V::NotPrecompact;
      st.reason = "the whole index set is an infinite chain";
      st.witness = SetGenerator::all_indices();
      return st;
    case Family::Kind::BlockCappedJoined: {
      const BlockRule& cap = family.cap();
      bool caps_positive = true;
      if (cap.kind == BlockRuleKind::Table) {
        caps_positive = cap.table_default >= 1;
        for (const auto& [block, count] : cap.table) {
          (void)block;
          caps_positive = caps_positive && count >= 1;
        }
      }
      if (caps_positive) {
        st.verdict = V::NotPrecompact;
        st.reason = "one point per block is an infinite chain";
        st.witness = SetGenerator::block_prefix(BlockRule::one());
      } else {
        st.verdict = V::Unknown;
        st.reason = "custom cap table with empty blocks";
      }
      return st;
    }
    case Family::Kind::Antichains: {
      st.verdict = V::NotPrecompact;
      st.reason = "second points of the blocks form an infinite antichain";
      // {3, 2^n+1 : n >= 1}: first two points of every block minus the first point
      st.witness = SetGenerator::set_minus(
          SetGenerator::block_prefix(BlockRule::from_table({}, 2)),
          SetGenerator::block_prefix(BlockRule::one()));
      return st;
    }
  }
  return st;
}

std::optional<OrdinalCNF> symbolic_rank(const Family& family) {
  switch (family.kind()) {
    case Family::Kind::Explicit:
    case Family::Kind::Restrict:
      return OrdinalCNF::nat(1);
    case Family::Kind::Singletons:
    case Family::Kind::PartitionBlocks:
    case Family::Kind::BlockCappedLocal:
      return OrdinalCNF::nat(2);
    case Family::Kind::Schreier:
      // rank w^alpha + 1
      return OrdinalCNF::omega_power(family.alpha()).plus(OrdinalCNF::nat(1));
    case Family::Kind::AllFinite:
    case Family::Kind::BlockCappedJoined:
    case Family::Kind::Antichains:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Enumerate strictly increasing sets G of the same size dominating F
// pointwise within [1, window], lexicographically.
bool find_spreading_violation(const Family& family, const FiniteSet& member, index_t window,
                              FiniteSet& violating) {
  const std::size_t n = member.size();
  std::vector<index_t> g(n);
  std::function<bool(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      FiniteSet candidate{std::vector<index_t>(g)};
      if (candidate != member && !family_contains(family, candidate)) {
        violating = std::move(candidate);
        return true;
      }
      return false;
    }
    const index_t lo = std::max(member[i], i > 0 ? g[i - 1] + 1 : 1);
    for (index_t v = lo; v + (index_t)(n - i - 1) <= window; ++v) {
      g[i] = v;
      if (walk(i + 1)) return true;
    }
    return false;
  };
  return walk(0);
}

}  // namespace

std::optional<SpreadingViolation> spreading_check(const Family& family, index_t window) {
  if (window > 16) throw precondition_error("spreading window must be <= 16");
  const EnumerationResult members = enumerate_members(family, window + 1);
  for (const FiniteSet& member : members.members) {
    FiniteSet violating;
    if (find_spreading_violation(family, member, window, violating)) {
      return SpreadingViolation{member, violating};
    }
  }
  return std::nullopt;
}

}  // namespace combinach
