#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinach/family.hpp"
#include "combinach/norms.hpp"
#include "combinach/rational.hpp"
#include "combinach/setgen.hpp"
#include "combinach/weights.hpp"

namespace combinach {

// Vectors with strictly increasing pairwise disjoint supports.
class BlockSequence {
public:
  BlockSequence() = default;
  explicit BlockSequence(std::vector<FinVec> blocks);  // validates the support order
  const std::vector<FinVec>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

private:
  std::vector<FinVec> blocks_;
};

// Re-verifiable search or check result: ordered exact facts plus a
// description of the searched space.
struct Certificate {
  std::string kind;
  bool success = false;
  std::vector<std::pair<std::string, std::string>> facts;
  std::string searched;

  void add(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }
};

// Signed measure on the depth-d dyadic algebra of the Cantor set; cell i is
// the basic clopen set of the length-d binary string with MSB-first index i.
class DyadicMeasure {
public:
  DyadicMeasure(int depth, std::vector<Rational> cell_values);
  int depth() const { return depth_; }
  const std::vector<Rational>& cells() const { return cells_; }
  Rational node_value(index_t tree_code) const;  // measure of the clopen set below the node
  FinVec node_vector() const;                    // x(t) = measure below t, all |t| <= depth

private:
  int depth_ = 0;
  std::vector<Rational> cells_;
};

// Exact equalities ext_norm = l1 mass for samples supported on the realized
// chain witness.
Certificate l1_copy_check(const Family& family, const SetGenerator& gen, index_t window,
                          const std::vector<FinVec>& samples);

// ext_norm(antichains, sum a_n e_{branch node n}) = max |a_n|.
Certificate c0_branch_check(const std::string& period, int length,
                            const std::vector<std::vector<Rational>>& coefficient_samples);

// Sign-adjusted subset A' of the realized set with |sum of x_k on A'| > eps/2
// for every block; the certificate is the indicator functional of A'.
Certificate schur_witness(const Family& family, const BlockSequence& blocks, const Rational& eps,
                          const SetGenerator& gen, index_t horizon);

Rational variation_norm(const DyadicMeasure& m);

// ||mu|| equals the antichain norm of the node vector.
Certificate variation_identity_check(const DyadicMeasure& m);

// Search for a finite E with phi(E) < eps * mu(E) over dyadic intervals and
// their greedy unions.  Failure within the space is inconclusive.
Certificate ptak_fill_search(const Family& family, const WeightSeq& mu, const Rational& eps,
                             index_t horizon);

// Search for G with ||sum_{i in G} (mu_i / mu(G)) x_i|| < eps over the same
// space; canonical mode uses x_i = e_i.
Certificate mazur_combination_search(const Family& family,
                                     const std::optional<BlockSequence>& blocks,
                                     const WeightSeq& mu, const Rational& eps, index_t horizon);

// Window norms and tail lower bounds of tau restricted to the realized set;
// tags evidence for sigma in FIN \ EXH or for sigma outside FIN.
Certificate exh_vs_fin_probe(const Family& family, const WeightSeq& tau, const SetGenerator& gen,
                             index_t horizon);

}  // namespace combinach
