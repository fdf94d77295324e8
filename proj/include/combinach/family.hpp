#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "combinach/finite_set.hpp"
#include "combinach/ordinal.hpp"
#include "combinach/setgen.hpp"

namespace combinach {

// Description of a hereditary family of finite index sets.  Every built-in
// kind is hereditary and contains the empty set and all singletons of its
// universe; Explicit families are treated as their hereditary closure.
class Family {
public:
  enum class Kind {
    Explicit,
    Singletons,
    AllFinite,
    PartitionBlocks,
    BlockCappedJoined,
    BlockCappedLocal,
    Schreier,
    Antichains,
    Restrict,
  };

  static Family explicit_family(std::vector<FiniteSet> sets);
  static Family singletons();
  static Family all_finite();
  static Family partition_blocks();
  static Family block_capped_joined(BlockRule cap);
  static Family block_capped_local(BlockRule cap);
  static Family schreier(OrdinalCNF alpha);
  static Family antichains();
  static Family restrict(Family base, FiniteSet window);

  Kind kind() const { return kind_; }
  const std::vector<FiniteSet>& explicit_sets() const { return sets_; }
  const BlockRule& cap() const { return cap_; }
  const OrdinalCNF& alpha() const { return alpha_; }
  const Family& base() const { return *base_; }
  const FiniteSet& window() const { return window_; }

  std::string describe() const;

private:
  Kind kind_ = Kind::AllFinite;
  std::vector<FiniteSet> sets_;
  BlockRule cap_;
  OrdinalCNF alpha_;
  std::shared_ptr<const Family> base_;
  FiniteSet window_;
};

bool family_contains(const Family& family, const FiniteSet& set);

struct EnumerationResult {
  std::vector<FiniteSet> members;  // ordered by (size, lexicographic)
  bool truncated = false;
};

// All members inside [1, window); window <= 24 recommended.
EnumerationResult enumerate_members(const Family& family, index_t window,
                                    std::size_t max_count = SIZE_MAX);

struct DeltaSystem {
  std::vector<FiniteSet> sets;
  FiniteSet root;
};

// A sub-collection of m sets forming a Delta-system, searched exhaustively
// over candidate roots; std::nullopt when none exists.
std::optional<DeltaSystem> delta_system_extract(const std::vector<FiniteSet>& sets, int m);

// True iff every initial segment of realize(gen, window) belongs to the family.
bool chain_witness_check(const Family& family, const SetGenerator& gen, index_t window);

struct PrecompactStatus {
  enum class Verdict { Precompact, NotPrecompact, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::optional<SetGenerator> witness;  // infinite chain witness when NotPrecompact
};

// Symbolic verdict per kind; finite windows cannot decide precompactness,
// witnesses are corroborated by chain_witness_check separately.
PrecompactStatus precompact_status(const Family& family);

// Catalog Cantor-Bendixson ranks; std::nullopt for non-precompact kinds.
std::optional<OrdinalCNF> symbolic_rank(const Family& family);

struct SpreadingViolation {
  FiniteSet member;
  FiniteSet dominating;
};

// Exhaustive spreading test on [1, window]: for every member F and every
// pointwise-dominating set G of the same size inside the window, G must be
// a member.  Returns the first violation in (member, dominating) order.
std::optional<SpreadingViolation> spreading_check(const Family& family, index_t window);

}  // namespace combinach
