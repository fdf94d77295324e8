#include "combinach/diagnostics.hpp"

#include <algorithm>

#include "combinach/errors.hpp"
#include "combinach/tree.hpp"

namespace combinach {

BlockSequence::BlockSequence(std::vector<FinVec> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i + 1 < blocks_.size(); ++i) {
    if (blocks_[i].empty() || blocks_[i + 1].empty()) {
      throw validation_error("block sequence entries must be nonzero");
    }
    if (blocks_[i].support().max() >= blocks_[i + 1].support().min()) {
      throw validation_error("block supports must be strictly increasing");
    }
  }
}

DyadicMeasure::DyadicMeasure(int depth, std::vector<Rational> cell_values)
    : depth_(depth), cells_(std::move(cell_values)) {
  if (depth < 0 || depth > 20) throw validation_error("dyadic depth out of range");
  if (cells_.size() != (std::size_t{1} << depth)) {
    throw validation_error("expected " + std::to_string(std::size_t{1} << depth) +
                           " cell values");
  }
}

Rational DyadicMeasure::node_value(index_t code) const {
  const int level = tree_depth(code);
  if (level > depth_) throw validation_error("node below the measure depth");
  // cells below the node form a contiguous MSB-first index range
  const std::size_t offset = (std::size_t)(code - (index_t{1} << level));
  const std::size_t width = std::size_t{1} << (depth_ - level);
  Rational sum = 0;
  for (std::size_t i = offset * width; i < (offset + 1) * width; ++i) sum += cells_[i];
  return sum;
}

FinVec DyadicMeasure::node_vector() const {
  FinVec x;
  for (int level = 0; level <= depth_; ++level) {
    for (index_t code = index_t{1} << level; code < (index_t{2} << level); ++code) {
      x.set(code, node_value(code));
    }
  }
  return x;
}

Certificate l1_copy_check(const Family& family, const SetGenerator& gen, index_t window,
                          const std::vector<FinVec>& samples) {
  if (!chain_witness_check(family, gen, window)) {
    throw precondition_error("generator is not a chain witness for the family");
  }
  const FiniteSet realized = gen.realize(window);
  Certificate cert;
  cert.kind = "l1-copy";
  cert.searched = "chain " + gen.describe() + " within [1," + std::to_string(window) + ")";
  cert.success = true;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (!samples[k].support().is_subset_of(realized)) {
      throw validation_error("sample " + std::to_string(k) +
                             " is not supported on the realized chain");
    }
    const Rational norm = ext_norm(family, samples[k]);
    const Rational l1 = samples[k].l1_mass();
    cert.success = cert.success && norm == l1;
    cert.add("sample " + std::to_string(k), "norm=" + format_rational(norm) +
                                                " l1=" + format_rational(l1) +
                                                (norm == l1 ? " equal" : " DIFFER"));
  }
  return cert;
}

Certificate c0_branch_check(const std::string& period, int length,
                            const std::vector<std::vector<Rational>>& coefficient_samples) {
  if (length < 1) throw validation_error("branch length must be >= 1");
  const SetGenerator branch = SetGenerator::tree_branch(period);
  Certificate cert;
  cert.kind = "c0-branch";
  cert.searched = "branch " + branch.describe() + ", first " + std::to_string(length) + " nodes";
  cert.success = true;

  // the first `length` nodes of the branch
  std::vector<index_t> codes;
  index_t c = 1;
  for (int n = 0; n < length; ++n) {
    codes.push_back(c);
    c = tree_child(c, period[n % period.size()] - '0');
  }

  const Family anti = Family::antichains();
  for (std::size_t k = 0; k < coefficient_samples.size(); ++k) {
    const auto& coeffs = coefficient_samples[k];
    if ((int)coeffs.size() != length) {
      throw validation_error("coefficient sample " + std::to_string(k) + " has wrong length");
    }
    FinVec x;
    Rational expected = 0;
    for (int n = 0; n < length; ++n) {
      x.set(codes[n], coeffs[n]);
      expected = std::max(expected, Rational(abs(coeffs[n])));
    }
    const Rational norm = ext_norm(anti, x);
    cert.success = cert.success && norm == expected;
    cert.add("sample " + std::to_string(k), "norm=" + format_rational(norm) +
                                                " max=" + format_rational(expected) +
                                                (norm == expected ? " equal" : " DIFFER"));
  }
  return cert;
}

Certificate schur_witness(const Family& family, const BlockSequence& blocks, const Rational& eps,
                          const SetGenerator& gen, index_t horizon) {
  Certificate cert;
  cert.kind = "schur";
  cert.searched = "closure set " + gen.describe() + " within [1," + std::to_string(horizon) + ")";
  const FiniteSet realized = gen.realize(horizon);

  const bool chain_evidence = chain_witness_check(family, gen, horizon);
  bool per_block_evidence = true;
  for (const FinVec& x : blocks.blocks()) {
    per_block_evidence =
        per_block_evidence && family_contains(family, realized.intersect(x.support()));
  }
  if (!chain_evidence && !per_block_evidence) {
    cert.success = false;
    cert.add("evidence", "no chain or per-block closure evidence for the realized set");
    return cert;
  }
  cert.add("evidence", chain_evidence ? "every initial segment of the realized set is a member"
                                      : "per-block intersections are members");

  const Rational threshold = eps / 2;
  FiniteSet adjusted;  // A' = union over blocks of the chosen sign part
  std::vector<std::string> rows;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const FinVec& x = blocks.blocks()[k];
    Rational plus = 0, minus = 0;
    std::vector<index_t> plus_idx, minus_idx;
    for (const auto& [i, q] : x.entries()) {
      if (!realized.contains(i)) continue;
      if (q > 0) {
        plus += q;
        plus_idx.push_back(i);
      } else {
        minus += -q;
        minus_idx.push_back(i);
      }
    }
    const bool use_plus = plus >= minus;
    const Rational value = use_plus ? plus : minus;
    if (!(value > threshold)) {
      cert.success = false;
      cert.add("block " + std::to_string(k),
               "best signed sum " + format_rational(value) + " <= eps/2 = " +
                   format_rational(threshold) + "; no certificate in this family");
      return cert;
    }
    adjusted = adjusted.unite(FiniteSet(use_plus ? plus_idx : minus_idx));
    rows.push_back("block " + std::to_string(k) + ": |sum on A'| = " + format_rational(value) +
                   " > " + format_rational(threshold));
  }
  cert.success = true;
  cert.add("adjusted set A'", adjusted.to_string());
  cert.add("functional", "x -> sum of x over A' (indicator, norm <= 1 on the closure)");
  for (const std::string& row : rows) cert.add("bound", row);
  return cert;
}

Rational variation_norm(const DyadicMeasure& m) {
  Rational total = 0;
  for (const Rational& v : m.cells()) total += abs(v);
  return total;
}

Certificate variation_identity_check(const DyadicMeasure& m) {
  Certificate cert;
  cert.kind = "variation-identity";
  cert.searched = "antichains of the depth-" + std::to_string(m.depth()) + " dyadic tree";
  const Rational variation = variation_norm(m);
  const Rational norm = ext_norm(Family::antichains(), m.node_vector());
  cert.success = variation == norm;
  cert.add("variation", format_rational(variation));
  cert.add("antichain norm", format_rational(norm));
  return cert;
}

namespace {

struct SearchCandidate {
  FiniteSet set;
  std::string label;
};

// Dyadic intervals [2^a, 2^b) inside [1, horizon], in (a, b) order.
std::vector<SearchCandidate> dyadic_intervals(index_t horizon) {
  std::vector<SearchCandidate> out;
  index_t top = 0;
  while ((index_t{1} << (top + 1)) <= horizon) ++top;
  for (index_t a = 0; a <= top; ++a) {
    for (index_t b = a + 1; b <= top + 1 && (index_t{1} << b) <= horizon; ++b) {
      out.push_back({FiniteSet::interval(index_t{1} << a, index_t{1} << b),
                     "[2^" + std::to_string(a) + ",2^" + std::to_string(b) + ")"});
    }
  }
  return out;
}

Rational weight_mass(const WeightSeq& mu, const FiniteSet& set) {
  Rational s = 0;
  for (index_t i : set) s += mu.at(i);
  return s;
}

void check_divergence(const WeightSeq& mu, index_t horizon) {
  // every dyadic block inside the horizon must carry positive mass and the
  // total must leave room for an eps-fraction certificate
  Rational total = 0;
  for (index_t n = 0; (index_t{1} << n) < horizon; ++n) {
    const Rational block =
        weight_mass(mu, FiniteSet::interval(index_t{1} << n,
                                            std::min(index_t{2} << n, horizon)));
    if (block <= 0) throw precondition_error("weight mass vanishes on a dyadic block");
    total += block;
  }
  if (total < 2) throw precondition_error("weight mass within the horizon is below 2");
}

}  // namespace

Certificate ptak_fill_search(const Family& family, const WeightSeq& mu, const Rational& eps,
                             index_t horizon) {
  if (eps <= 0 || eps >= 1) throw validation_error("eps must lie in (0,1)");
  check_divergence(mu, horizon);
  Certificate cert;
  cert.kind = "ptak-fill";
  cert.searched = "dyadic intervals inside [1," + std::to_string(horizon) + "] and greedy unions";

  Rational max_single = 0;
  for (index_t i = 1; i < std::min<index_t>(horizon, 1 << 16); i *= 2) {
    max_single = std::max(max_single, mu.at(i));
  }
  if (max_single >= eps) {
    cert.add("warning", "a single weight reaches eps; thin certificates may not exist");
  }

  const SubmeasureSpec spec{family, mu};
  const auto candidates = dyadic_intervals(horizon);

  auto try_candidate = [&](const FiniteSet& e, const std::string& label) {
    const Rational value = phi(spec, e);
    const Rational mass = weight_mass(mu, e);
    if (value < eps * mass) {
      cert.success = true;
      cert.add("E", label + " = " + (e.size() <= 40 ? e.to_string() : "(" + std::to_string(e.size()) + " points)"));
      cert.add("phi(E)", format_rational(value));
      cert.add("mu(E)", format_rational(mass));
      cert.add("eps*mu(E)", format_rational(eps * mass));
      cert.add("inequality", format_rational(value) + " < " + format_rational(eps * mass));
      return true;
    }
    return false;
  };

  for (const auto& c : candidates) {
    if (try_candidate(c.set, c.label)) return cert;
  }

  // greedy unions: start from the best ratio and add the interval that
  // lowers phi/mass the most
  std::size_t best_start = 0;
  Rational best_ratio = -1;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Rational ratio =
        phi(spec, candidates[i].set) / weight_mass(mu, candidates[i].set);
    if (best_ratio < 0 || ratio < best_ratio) {
      best_ratio = ratio;
      best_start = i;
    }
  }
  FiniteSet current = candidates[best_start].set;
  std::string label = candidates[best_start].label;
  for (std::size_t round = 0; round < candidates.size(); ++round) {
    std::size_t best_add = SIZE_MAX;
    Rational best_new_ratio = best_ratio;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].set.is_subset_of(current)) continue;
      const FiniteSet merged = current.unite(candidates[i].set);
      const Rational ratio = phi(spec, merged) / weight_mass(mu, merged);
      if (ratio < best_new_ratio) {
        best_new_ratio = ratio;
        best_add = i;
      }
    }
    if (best_add == SIZE_MAX) break;
    current = current.unite(candidates[best_add].set);
    label += " u " + candidates[best_add].label;
    best_ratio = best_new_ratio;
    if (try_candidate(current, label)) return cert;
  }

  cert.success = false;
  cert.add("verdict", "FILLED-UP-TO-HORIZON");
  cert.add("best candidate", label);
  cert.add("best ratio phi/mass", format_rational(best_ratio));
  cert.add("note", "no certificate inside the searched space; inconclusive beyond it");
  return cert;
}

Certificate mazur_combination_search(const Family& family,
                                     const std::optional<BlockSequence>& blocks,
                                     const WeightSeq& mu, const Rational& eps, index_t horizon) {
  if (eps <= 0) throw validation_error("eps must be > 0");
  check_divergence(mu, horizon);
  Certificate cert;
  cert.kind = "mazur-combination";
  cert.searched = "dyadic intervals inside [1," + std::to_string(horizon) + "] and greedy unions";

  auto combination_norm = [&](const FiniteSet& g) {
    const Rational mass = weight_mass(mu, g);
    if (!blocks) {
      // canonical mode: y = sum (mu_i / mu(G)) e_i, so the norm is phi(G)/mu(G)
      return phi({family, mu}, g) / mass;
    }
    FinVec y;
    for (index_t i : g) {
      if (i < 1 || (std::size_t)i > blocks->size()) continue;
      y = y.plus(blocks->blocks()[(std::size_t)i - 1].scaled(mu.at(i) / mass));
    }
    return ext_norm(family, y);
  };

  const auto candidates = dyadic_intervals(horizon);
  FiniteSet best_set;
  std::string best_label;
  Rational best_value = -1;

  auto consider = [&](const FiniteSet& g, const std::string& label) {
    const Rational value = combination_norm(g);
    if (best_value < 0 || value < best_value) {
      best_value = value;
      best_set = g;
      best_label = label;
    }
    return value < eps;
  };

  bool found = false;
  for (const auto& c : candidates) {
    if (consider(c.set, c.label)) {
      found = true;
      break;
    }
  }
  if (!found) {
    FiniteSet current = best_set;
    std::string label = best_label;
    for (std::size_t round = 0; round < candidates.size() && !found; ++round) {
      std::size_t best_add = SIZE_MAX;
      Rational round_best = best_value;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].set.is_subset_of(current)) continue;
        const Rational value = combination_norm(current.unite(candidates[i].set));
        if (value < round_best) {
          round_best = value;
          best_add = i;
        }
      }
      if (best_add == SIZE_MAX) break;
      current = current.unite(candidates[best_add].set);
      label += " u " + candidates[best_add].label;
      found = consider(current, label);
    }
  }

  cert.success = found;
  cert.add("G", best_label + " = " +
                    (best_set.size() <= 40 ? best_set.to_string()
                                           : "(" + std::to_string(best_set.size()) + " points)"));
  cert.add("mu(G)", format_rational(weight_mass(mu, best_set)));
  cert.add("combination norm", format_rational(best_value));
  cert.add("eps", format_rational(eps));
  cert.add("verdict", found ? "norm below eps" : "best found is not below eps (searched space only)");
  return cert;
}

Certificate exh_vs_fin_probe(const Family& family, const WeightSeq& tau, const SetGenerator& gen,
                             index_t horizon) {
  if (horizon < 8) throw validation_error("horizon must be >= 8");
  Certificate cert;
  cert.kind = "exh-vs-fin";
  cert.searched = "window norms and tail lower bounds at powers of two up to " +
                  std::to_string(horizon);
  const FiniteSet realized = gen.realize(horizon);
  const SubmeasureSpec spec{family, tau};

  Rational last_norm, half_norm, last_tail;
  for (index_t n = 2; (index_t{1} << n) <= horizon; ++n) {
    const index_t window = index_t{1} << n;
    const Rational norm = phi(spec, realized.restrict_window(1, window));
    const Rational tail = phi(spec, realized.restrict_window(window / 2, horizon));
    cert.add("window 2^" + std::to_string(n),
             "norm=" + format_rational(norm) + " tail(from 2^" + std::to_string(n - 1) +
                 ")=" + format_rational(tail));
    half_norm = last_norm;
    last_norm = norm;
    last_tail = tail;
  }

  if (half_norm < last_norm) {
    cert.add("norm growth", format_rational(half_norm) + " -> " + format_rational(last_norm) +
                                " across the last doubling");
    cert.add("verdict", "DIVERGING-NORMS: evidence that sigma lies outside FIN");
    cert.success = true;
    return cert;
  }
  cert.add("norm growth", "window norms stabilized at " + format_rational(last_norm));
  if (last_tail > 0) {
    cert.add("verdict", "BOUNDED-NORMS + TAIL-ABOVE(" + format_rational(last_tail) +
                            "): evidence for sigma in FIN \\ EXH");
  } else {
    cert.add("verdict", "BOUNDED-NORMS + vanishing tails: consistent with sigma in EXH");
  }
  cert.success = true;
  return cert;
}

}  // namespace combinach
