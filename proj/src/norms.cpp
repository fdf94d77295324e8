#include "combinach/norms.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <vector>

#include "combinach/errors.hpp"
#include "combinach/schreier.hpp"
#include "combinach/tree.hpp"

namespace combinach {

FinVec::FinVec(std::map<index_t, Rational> entries) : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->first < 1) throw validation_error("vector indices start at 1");
    if (it->second == 0) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

void FinVec::set(index_t i, const Rational& value) {
  if (i < 1) throw validation_error("vector indices start at 1");
  if (value == 0) {
    entries_.erase(i);
  } else {
    entries_[i] = value;
  }
}

Rational FinVec::at(index_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

FiniteSet FinVec::support() const {
  std::vector<index_t> v;
  v.reserve(entries_.size());
  for (const auto& [i, q] : entries_) v.push_back(i);
  return FiniteSet(std::move(v));
}

FinVec FinVec::abs() const {
  FinVec r;
  for (const auto& [i, q] : entries_) r.entries_[i] = ::abs(q);
  return r;
}

FinVec FinVec::scaled(const Rational& c) const {
  FinVec r;
  if (c == 0) return r;
  for (const auto& [i, q] : entries_) r.entries_[i] = q * c;
  return r;
}

FinVec FinVec::plus(const FinVec& other) const {
  FinVec r = *this;
  for (const auto& [i, q] : other.entries_) {
    Rational sum = r.at(i) + q;
    r.set(i, sum);
  }
  return r;
}

FinVec FinVec::restricted(const FiniteSet& to) const {
  FinVec r;
  for (const auto& [i, q] : entries_) {
    if (to.contains(i)) r.entries_[i] = q;
  }
  return r;
}

FinVec FinVec::restrict_window(index_t lo, index_t hi) const {
  FinVec r;
  for (const auto& [i, q] : entries_) {
    if (i >= lo && i < hi) r.entries_[i] = q;
  }
  return r;
}

Rational FinVec::l1_mass() const {
  Rational s = 0;
  for (const auto& [i, q] : entries_) s += ::abs(q);
  return s;
}

Rational FinVec::sup_mass() const {
  Rational best = 0;
  for (const auto& [i, q] : entries_) best = std::max(best, Rational(::abs(q)));
  return best;
}

std::string FinVec::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, q] : entries_) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i) + ":" + format_rational(q);
  }
  return out + "}";
}

FinVec project(const FinVec& x, const FiniteSet& onto) { return x.restricted(onto); }

namespace {

// ---- per-kind optimizers -------------------------------------------------

// Sum of the cap(n) largest absolute values inside block n, per block.
Rational block_top_sum(const std::vector<Rational>& values, index_t cap) {
  std::vector<Rational> sorted = values;
  std::sort(sorted.begin(), sorted.end(), std::greater<Rational>());
  Rational s = 0;
  for (index_t i = 0; i < cap && i < (index_t)sorted.size(); ++i) s += sorted[i];
  return s;
}

void for_each_support_block(const FinVec& absx,
                            const std::function<void(index_t, const std::vector<Rational>&)>& fn) {
  std::vector<Rational> bucket;
  index_t current = -1;
  for (const auto& [i, q] : absx.entries()) {
    const index_t b = block_of(i);
    if (b != current) {
      if (!bucket.empty()) fn(current, bucket);
      bucket.clear();
      current = b;
    }
    bucket.push_back(q);
  }
  if (!bucket.empty()) fn(current, bucket);
}

// Maximum-weight antichain in the tree spanned by the support codes.
Rational antichain_norm(const FinVec& absx) {
  if (absx.empty()) return 0;
  // bottom-up over all ancestors of support nodes
  std::map<index_t, Rational> best;  // node -> best antichain value in its subtree
  std::vector<index_t> nodes;
  for (const auto& [code, q] : absx.entries()) {
    index_t c = code;
    while (true) {
      if (best.count(c)) break;
      best[c] = 0;
      nodes.push_back(c);
      if (c == 1) break;
      c = tree_parent(c);
    }
  }
  std::sort(nodes.begin(), nodes.end(), std::greater<index_t>());
  for (index_t c : nodes) {
    Rational children = 0;
    for (int b = 0; b < 2; ++b) {
      auto it = best.find(tree_child(c, b));
      if (it != best.end()) children += it->second;
    }
    best[c] = std::max(absx.at(c), children);
  }
  // combine the roots of the spanned forest (here always node 1 if present)
  Rational total = 0;
  auto it = best.find(1);
  if (it != best.end()) total = it->second;
  return total;
}

// ---- Schreier norm -------------------------------------------------------

// Exact maximization of the weighted mass of a member of S_alpha inside the
// support.  States are contiguous position ranges of the sorted support:
//   best_set(a, i, j)       = best single member of S_a within positions [i, j)
//   best_chain(a, i, j, r)  = best union of at most r consecutive members
// Memoized per evaluation; a branch is cut as soon as it attains the total
// remaining mass.
class SchreierNorm {
public:
  SchreierNorm(std::vector<index_t> positions, std::vector<Rational> weights)
      : pos_(std::move(positions)), w_(std::move(weights)) {
    suffix_.resize(pos_.size() + 1);
    suffix_[pos_.size()] = 0;
    for (std::size_t i = pos_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + w_[i];
  }

  Rational run(const OrdinalCNF& alpha) {
    if (pos_.empty()) return 0;
    return best_set(intern(alpha), 0, pos_.size());
  }

private:
  std::vector<index_t> pos_;
  std::vector<Rational> w_;
  std::vector<Rational> suffix_;
  std::map<OrdinalCNF, int> ord_ids_;
  std::vector<OrdinalCNF> ords_;
  std::map<std::tuple<int, std::size_t, std::size_t>, Rational> set_memo_;
  std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, Rational> chain_memo_;

  Rational span_mass(std::size_t i, std::size_t j) const { return suffix_[i] - suffix_[j]; }

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

  Rational best_set(int ord, std::size_t i, std::size_t j) {
    if (i >= j) return 0;
    const OrdinalCNF& a = ords_[ord];
    if (a.is_zero()) {
      Rational best = 0;
      for (std::size_t t = i; t < j; ++t) best = std::max(best, w_[t]);
      return best;
    }
    const auto key = std::make_tuple(ord, i, j);
    if (auto it = set_memo_.find(key); it != set_memo_.end()) return it->second;

    const Rational cap = span_mass(i, j);
    Rational best = 0;
    if (a.is_successor()) {
      const int sub = intern(a.predecessor());
      for (std::size_t s = i; s < j && best < cap; ++s) {
        const std::size_t pieces = std::min<std::size_t>((std::size_t)pos_[s], j - s);
        best = std::max(best, best_chain(sub, s, j, pieces));
      }
    } else {
      // For the canonical ladder the families S_{xi(a,k)} increase with k
      // (each step embeds by taking the set as a single piece), so only the
      // largest admissible k per start matters.
      for (std::size_t s = i; s < j && best < cap; ++s) {
        const int sub = intern(fundamental_sequence(a, (std::uint64_t)pos_[s]));
        best = std::max(best, best_set(sub, s, j));
      }
    }
    set_memo_[key] = best;
    return best;
  }

  Rational best_chain(int ord, std::size_t i, std::size_t j, std::size_t r) {
    if (i >= j || r == 0) return 0;
    if (r == 1) return best_set(ord, i, j);
    const auto key = std::make_tuple(ord, i, j, r);
    if (auto it = chain_memo_.find(key); it != chain_memo_.end()) return it->second;

    const Rational cap = span_mass(i, j);
    Rational best = 0;
    // first piece inside [i, k), remaining pieces inside [k, j)
    for (std::size_t k = j; k > i && best < cap; --k) {
      best = std::max(best, best_set(ord, i, k) + best_chain(ord, k, j, r - 1));
    }
    chain_memo_[key] = best;
    return best;
  }
};

// Closed form for S_1 when the weights are nonincreasing along the support:
// the best member starting at position s takes the first min(pos[s], m-s)
// points from s.
Rational schreier1_monotone_norm(const std::vector<index_t>& pos,
                                 const std::vector<Rational>& w) {
  std::vector<Rational> prefix(pos.size() + 1);
  prefix[0] = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) prefix[i + 1] = prefix[i] + w[i];
  Rational best = 0;
  for (std::size_t s = 0; s < pos.size(); ++s) {
    const std::size_t take = std::min<std::size_t>((std::size_t)pos[s], pos.size() - s);
    best = std::max(best, Rational(prefix[s + take] - prefix[s]));
  }
  return best;
}

Rational schreier_norm(const OrdinalCNF& alpha, const FinVec& absx) {
  if (absx.empty()) return 0;
  std::vector<index_t> pos;
  std::vector<Rational> w;
  for (const auto& [i, q] : absx.entries()) {
    pos.push_back(i);
    w.push_back(q);
  }
  // whole-support membership makes the norm the total mass
  if (schreier_contains(alpha, absx.support())) {
    Rational total = 0;
    for (const Rational& q : w) total += q;
    return total;
  }
  if (alpha.is_nat() && alpha.nat_value() == 1 &&
      std::is_sorted(w.begin(), w.end(), std::greater<Rational>())) {
    return schreier1_monotone_norm(pos, w);
  }
  return SchreierNorm(std::move(pos), std::move(w)).run(alpha);
}

}  // namespace

Rational ext_norm(const Family& family, const FinVec& x) {
  const FinVec absx = x.abs();
  switch (family.kind()) {
    case Family::Kind::AllFinite:
      return absx.l1_mass();
    case Family::Kind::Singletons:
      return absx.sup_mass();
    case Family::Kind::PartitionBlocks: {
      Rational best = 0;
      for_each_support_block(absx, [&](index_t block, const std::vector<Rational>& vals) {
        best = std::max(best, block_top_sum(vals, block_size(block)));
      });
      return best;
    }
    case Family::Kind::BlockCappedLocal: {
      Rational best = 0;
      for_each_support_block(absx, [&](index_t block, const std::vector<Rational>& vals) {
        best = std::max(best, block_top_sum(vals, family.cap().count(block)));
      });
      return best;
    }
    case Family::Kind::BlockCappedJoined: {
      Rational total = 0;
      for_each_support_block(absx, [&](index_t block, const std::vector<Rational>& vals) {
        total += block_top_sum(vals, family.cap().count(block));
      });
      return total;
    }
    case Family::Kind::Antichains:
      return antichain_norm(absx);
    case Family::Kind::Schreier:
      return schreier_norm(family.alpha(), absx);
    case Family::Kind::Explicit: {
      Rational best = 0;
      for (const FiniteSet& member : family.explicit_sets()) {
        best = std::max(best, absx.restricted(member).l1_mass());
      }
      return best;
    }
    case Family::Kind::Restrict:
      return ext_norm(family.base(), absx.restricted(family.window()));
  }
  throw validation_error("unknown family kind");
}

Rational tail_norm(const Family& family, const FinVec& x, index_t n) {
  if (n < 0) throw precondition_error("tail cutoff must be >= 0");
  const index_t lo = std::max<index_t>(n, 1);
  FinVec tail;
  for (const auto& [i, q] : x.entries()) {
    if (i >= lo) tail.set(i, q);
  }
  return ext_norm(family, tail);
}

Rational norm_oracle(const Family& family, const FinVec& x) {
  if (x.support_size() > 20) {
    throw precondition_error("norm oracle supports at most 20 support points");
  }
  if (x.empty()) return 0;
  const FinVec absx = x.abs();
  const index_t window = absx.support().max() + 1;
  const EnumerationResult members = enumerate_members(family, window);
  Rational best = 0;
  for (const FiniteSet& member : members.members) {
    best = std::max(best, absx.restricted(member).l1_mass());
  }
  return best;
}

}  // namespace combinach
