#pragma once

#include <map>
#include <string>

#include "combinach/family.hpp"
#include "combinach/finite_set.hpp"
#include "combinach/rational.hpp"

namespace combinach {

// Finitely supported vector of exact rationals over positive indices.
// Zero entries are never stored.
class FinVec {
public:
  FinVec() = default;
  explicit FinVec(std::map<index_t, Rational> entries);

  void set(index_t i, const Rational& value);  // value 0 erases
  Rational at(index_t i) const;                // 0 when absent
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  FiniteSet support() const;

  FinVec abs() const;
  FinVec scaled(const Rational& c) const;
  FinVec plus(const FinVec& other) const;
  FinVec restricted(const FiniteSet& to) const;
  FinVec restrict_window(index_t lo, index_t hi) const;
  Rational l1_mass() const;   // sum of |entries|
  Rational sup_mass() const;  // max of |entries|

  const std::map<index_t, Rational>& entries() const { return entries_; }
  std::string to_string() const;  // {4:1/4,5:-1/2}

private:
  std::map<index_t, Rational> entries_;
};

// Extended norm sup over members F of the family of the l1-mass of x on F.
// The sup is attained inside the support because the families are hereditary.
Rational ext_norm(const Family& family, const FinVec& x);

// ext_norm of the tail projection of x onto [n, infinity).
Rational tail_norm(const Family& family, const FinVec& x, index_t n);

FinVec project(const FinVec& x, const FiniteSet& onto);

// Independent brute force via member enumeration; supports of size <= 20.
Rational norm_oracle(const Family& family, const FinVec& x);

}  // namespace combinach
