#include "combinach/schreier.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "combinach/errors.hpp"

namespace combinach {

namespace {

// Membership checker for one input set.  Subproblems are contiguous ranges
// [lo, hi) of the sorted element list: the pieces of a decomposition are
// always consecutive runs of elements, so ranges are the only sets that
// appear in the recursion.
class MembershipCheck {
public:
  explicit MembershipCheck(const FiniteSet& set) : elems_(set.elements()) {}

  bool run(const OrdinalCNF& alpha) {
    if (elems_.empty()) return true;
    return range_in(intern(alpha), 0, elems_.size());
  }

private:
  const std::vector<index_t>& elems_;
  std::map<OrdinalCNF, int> ord_ids_;
  std::vector<OrdinalCNF> ords_;
  std::map<std::tuple<int, std::size_t, std::size_t>, bool> memo_;

  int intern(const OrdinalCNF& a) {
    auto [it, inserted] = ord_ids_.try_emplace(a, (int)ords_.size());
    if (inserted) {
      if (a.depth() > ordinal_depth_cap()) {
        throw precondition_error("ordinal depth exceeds cap " +
                                 std::to_string(ordinal_depth_cap()));
      }
      ords_.push_back(a);
    }
    return it->second;
  }

  // Whole range [lo, hi) as a member of S_ord.
  bool range_in(int ord, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 1) return true;  // empty sets and singletons are members everywhere
    const OrdinalCNF& a = ords_[ord];
    if (a.is_zero()) return false;

    const auto key = std::make_tuple(ord, lo, hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool result = false;
    if (a.is_nat() && a.nat_value() == 1) {
      result = (index_t)(hi - lo) <= elems_[lo];
      memo_[key] = result;
      return result;
    }
    if (a.is_successor()) {
      // Minimal piece count via the greedy longest-piece split; heredity of
      // S_b makes piece feasibility prefix-monotone, so greedy is exact.
      const int sub = intern(a.predecessor());
      const index_t allowed = elems_[lo];
      index_t pieces = 0;
      std::size_t pos = lo;
      while (pos < hi && pieces <= allowed) {
        pos = max_piece_end(sub, pos, hi);
        ++pieces;
      }
      result = (pos >= hi && pieces <= allowed);
    } else {
      // limit: some k <= min of the range admits the set
      const index_t bound = elems_[lo];
      for (index_t k = 1; k <= bound && !result; ++k) {
        result = range_in(intern(fundamental_sequence(a, (std::uint64_t)k)), lo, hi);
      }
    }
    memo_[key] = result;
    return result;
  }

  // Largest v in (lo, hi] with [lo, v) in S_ord; monotone by heredity, so
  // binary search applies.  v = lo + 1 is always feasible.
  std::size_t max_piece_end(int ord, std::size_t lo, std::size_t hi) {
    std::size_t good = lo + 1, bad = hi + 1;
    while (bad - good > 1) {
      const std::size_t mid = good + (bad - good) / 2;
      if (range_in(ord, lo, mid)) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    return good;
  }
};

}  // namespace

bool schreier_contains(const OrdinalCNF& alpha, const FiniteSet& set) {
  if (set.empty()) return true;
  if (alpha.is_zero()) return set.size() <= 1;
  return MembershipCheck(set).run(alpha);
}

}  // namespace combinach
