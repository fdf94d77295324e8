#include "combinach/witnesses.hpp"

#include <algorithm>

#include "combinach/errors.hpp"
#include "combinach/family.hpp"
#include "combinach/norms.hpp"
#include "combinach/schreier.hpp"
#include "combinach/submeasures.hpp"

namespace combinach {

Rational phi_alpha(const OrdinalCNF& alpha, const FiniteSet& set) {
  return phi({Family::schreier(alpha), WeightSeq::lambda()}, set);
}

std::optional<index_t> essential_inclusion_probe(const OrdinalCNF& alpha, const OrdinalCNF& beta,
                                                 index_t window) {
  if (window > 14) throw precondition_error("inclusion probe window must be <= 14");
  const Family fa = Family::schreier(alpha);
  const Family fb = Family::schreier(beta);
  index_t max_violating_min = -1;
  for (const FiniteSet& member : enumerate_members(fa, window).members) {
    if (member.empty() || family_contains(fb, member)) continue;
    max_violating_min = std::max(max_violating_min, member.min());
  }
  const index_t least = max_violating_min + 1;
  // In the upper half of the window, |F| <= window - n <= n forces F into
  // S_1 and therefore into every S_beta with beta >= 1; a bound found there
  // says nothing about larger windows.
  if (least >= window / 2) return std::nullopt;
  return least;
}

SummableLikeWitness summable_like_witness(const OrdinalCNF& alpha, int N) {
  if (ord_compare(alpha, OrdinalCNF::nat(2)) == Ordering::LT) {
    throw precondition_error("summable-like witness requires alpha >= 2");
  }
  if (N < 0 || N > 4) throw precondition_error("summable-like witness requires 0 <= N <= 4");

  SummableLikeWitness w;
  w.alpha = alpha;
  w.N = N;
  const Rational expected_piece(1, mpz_class(1) << (unsigned)N);
  FiniteSet all;
  for (index_t n = 0; n < (index_t{1} << N); ++n) {
    const index_t start = index_t{1} << (N + n);
    const FiniteSet piece = FiniteSet::interval(start, start + (index_t{1} << n));
    const Rational value = phi_alpha(alpha, piece);
    if (value != expected_piece) {
      throw verification_error("summable-like piece value mismatch: got " +
                               format_rational(value) + ", expected " +
                               format_rational(expected_piece));
    }
    w.sets.push_back(piece);
    w.set_values.push_back(value);
    all = all.unite(piece);
  }
  w.union_set = all;
  w.union_value = phi_alpha(alpha, all);
  if (w.union_value != 1) {
    throw verification_error("summable-like union value mismatch: got " +
                             format_rational(w.union_value) + ", expected 1");
  }
  return w;
}

TraceVsI2Witness trace_vs_i2_witness(int k_max) {
  if (k_max < 0 || k_max > 4) throw precondition_error("trace witness requires 0 <= k_max <= 4");
  TraceVsI2Witness w;
  w.k_max = k_max;
  // horizon past the last level of the last log-block
  const index_t top_level = (index_t{1} << (k_max + 1)) - 1;
  w.horizon = index_t{1} << (top_level + 1);
  const SetGenerator gen = SetGenerator::block_prefix(BlockRule::halved_by_log());
  const FiniteSet realized = gen.realize(w.horizon);

  for (int k = 0; k <= k_max; ++k) {
    TraceVsI2Witness::Level level;
    level.k = k;
    const index_t first_level = index_t{1} << k;  // levels n in [2^k, 2^(k+1))
    level.cutoff = index_t{1} << first_level;
    level.trace_tail_value = phi_trace(realized.restrict_window(level.cutoff, w.horizon));
    const Rational expected(1, mpz_class(1) << (unsigned)k);
    if (level.trace_tail_value != expected) {
      throw verification_error("trace tail value mismatch at k=" + std::to_string(k) + ": got " +
                               format_rational(level.trace_tail_value) + ", expected " +
                               format_rational(expected));
    }
    // the union of the block parts across the log-block lies in S_2 and
    // carries lambda-mass 1
    const index_t last_level = (index_t{1} << (k + 1)) - 1;
    level.s2_set = realized.restrict_window(index_t{1} << first_level,
                                            index_t{1} << (last_level + 1));
    level.s2_value = phi_alpha(OrdinalCNF::nat(2), level.s2_set);
    if (level.s2_value < 1) {
      throw verification_error("S_2 window value below 1 at k=" + std::to_string(k));
    }
    w.levels.push_back(std::move(level));
  }
  return w;
}

DensityBoundReport density_bound_check(int j, const SetGenerator& gen, index_t N,
                                       index_t horizon) {
  if (j < 0) throw validation_error("density exponent j must be >= 0");
  if (horizon < (index_t{1} << N)) throw validation_error("horizon below the tail start");
  DensityBoundReport report;
  report.j = j;
  report.N = N;
  report.horizon = horizon;

  const FiniteSet realized = gen.realize(horizon);
  for (index_t n = N; (index_t{1} << n) < horizon; ++n) {
    const index_t in_block =
        (index_t)realized.restrict_window(index_t{1} << n, index_t{2} << n).size();
    // density precondition: |A n P_n| < 2^(n-j) exactly
    if (in_block * (index_t{1} << j) >= (index_t{1} << n)) {
      throw precondition_error("block " + std::to_string(n) + " violates the density bound");
    }
  }

  report.tail_window = realized.restrict_window(index_t{1} << N, horizon);
  report.value = phi_alpha(OrdinalCNF::nat(1), report.tail_window);
  report.bound = Rational(1 + j, mpz_class(1) << (unsigned)j);
  if (!(report.value <= report.bound)) {
    throw verification_error("density bound violated: phi = " + format_rational(report.value) +
                             " > " + format_rational(report.bound));
  }
  return report;
}

}  // namespace combinach
