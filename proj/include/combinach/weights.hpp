#pragma once

#include <map>
#include <memory>
#include <string>

#include "combinach/finite_set.hpp"
#include "combinach/norms.hpp"
#include "combinach/rational.hpp"

namespace combinach {

// Strictly positive weight sequence tau over the positive integers.
class WeightSeq {
public:
  enum class Kind {
    Lambda,               // 2^(-n) on block [2^n, 2^(n+1))
    Harmonic,             // 1/k
    One,                  // 1
    Geometric,            // 2^(-k)
    InverseSquareBlocks,  // 1 at k=1, 1/n^2 on block n for n >= 1
    Custom,               // finite table with a fallback rule
  };

  static WeightSeq lambda();
  static WeightSeq harmonic();
  static WeightSeq one();
  static WeightSeq geometric();
  static WeightSeq inverse_square_blocks();
  static WeightSeq custom(std::map<index_t, Rational> table, WeightSeq fallback);

  Kind kind() const { return kind_; }
  Rational at(index_t k) const;  // k >= 1; always > 0
  FinVec on(const FiniteSet& set) const;  // tau restricted to the set
  std::string describe() const;

private:
  Kind kind_ = Kind::One;
  std::map<index_t, Rational> table_;
  std::shared_ptr<const WeightSeq> fallback_;
};

}  // namespace combinach
