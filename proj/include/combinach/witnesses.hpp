#pragma once

#include <optional>
#include <vector>

#include "combinach/finite_set.hpp"
#include "combinach/ordinal.hpp"
#include "combinach/rational.hpp"
#include "combinach/setgen.hpp"

namespace combinach {

// phi of the weight-lambda submeasure generated by S_alpha.
Rational phi_alpha(const OrdinalCNF& alpha, const FiniteSet& set);

// Least n such that every member of S_alpha inside [n, window) belongs to
// S_beta, verified exhaustively on the window.  Candidates in the upper half
// of the window are truncation artifacts (any set there has size <= min) and
// are reported as std::nullopt.
std::optional<index_t> essential_inclusion_probe(const OrdinalCNF& alpha, const OrdinalCNF& beta,
                                                 index_t window);

// F_n = first 2^n points of [2^(N+n), 2^(N+n+1)) for n < 2^N; each has
// phi_alpha value 2^(-N) and the union has value 1.  Verification failure is
// a hard error.
struct SummableLikeWitness {
  OrdinalCNF alpha;
  int N = 0;
  std::vector<FiniteSet> sets;
  std::vector<Rational> set_values;
  FiniteSet union_set;
  Rational union_value;
};
SummableLikeWitness summable_like_witness(const OrdinalCNF& alpha, int N);

// The halved-by-log block-prefix set: its trace tails are 2^(-k) on the k-th
// log-block of levels while its S_2 window values stay >= 1.
struct TraceVsI2Witness {
  int k_max = 0;
  index_t horizon = 0;
  struct Level {
    int k = 0;
    index_t cutoff = 0;          // 2^n for the first level n of the log-block
    Rational trace_tail_value;   // phi_trace(A n [cutoff, horizon)) = 2^(-k)
    FiniteSet s2_set;            // union of the block parts across the log-block
    Rational s2_value;           // phi_alpha(2, s2_set) = 1
  };
  std::vector<Level> levels;
};
TraceVsI2Witness trace_vs_i2_witness(int k_max);

// For eps = 2^(-j) and a set of block density below eps from block N on,
// phi_alpha(1, tail window) <= (1+j) * 2^(-j).
struct DensityBoundReport {
  int j = 0;
  index_t N = 0;
  index_t horizon = 0;
  Rational bound;
  Rational value;
  FiniteSet tail_window;
};
DensityBoundReport density_bound_check(int j, const SetGenerator& gen, index_t N,
                                       index_t horizon);

}  // namespace combinach
