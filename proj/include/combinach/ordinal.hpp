#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace combinach {

// Ordinal below w^w^w in Cantor normal form: a descending sum of terms
// w^exponent * coefficient.  The empty term list is 0.
class OrdinalCNF {
public:
  struct Term;

  OrdinalCNF() = default;

  static OrdinalCNF nat(std::uint64_t n);
  static OrdinalCNF omega();
  // w^exponent * coefficient, coefficient >= 1
  static OrdinalCNF omega_power(const OrdinalCNF& exponent, std::uint64_t coefficient = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_nat() const;
  std::uint64_t nat_value() const;  // requires is_nat()
  bool is_limit() const;            // nonzero with last exponent > 0
  bool is_successor() const { return !is_zero() && !is_limit(); }

  // For a successor ordinal, the ordinal one below it.
  OrdinalCNF predecessor() const;

  // Ordinal sum self + other (CNF absorption applies).
  OrdinalCNF plus(const OrdinalCNF& other) const;

  int depth() const;  // 0 for 0, 1 for naturals, 2 for w, ...

  const std::vector<Term>& terms() const { return terms_; }

private:
  std::vector<Term> terms_;
  void append_term(const OrdinalCNF& exponent, std::uint64_t coefficient);
};

struct OrdinalCNF::Term {
  OrdinalCNF exponent;
  std::uint64_t coefficient = 1;
};

enum class Ordering { LT, EQ, GT };

Ordering ord_compare(const OrdinalCNF& a, const OrdinalCNF& b);

bool operator==(const OrdinalCNF& a, const OrdinalCNF& b);
bool operator!=(const OrdinalCNF& a, const OrdinalCNF& b);
bool operator<(const OrdinalCNF& a, const OrdinalCNF& b);
bool operator<=(const OrdinalCNF& a, const OrdinalCNF& b);

// Maximum permitted nesting depth; default 3 (values below w^w^w),
// overridable through the COMBINACH_DEPTH_CAP environment variable.
int ordinal_depth_cap();

// Grammar: expr := term ('+' term)* ; term := 'w' ('^' exponent)? ('*' nat)? | nat ;
// exponent := '(' expr ')' | 'w' ('^' exponent)? | nat.
// Input is normalized to CNF (e.g. "1+w" parses to w); depth overflow is an error.
OrdinalCNF ord_parse(const std::string& text);

// Canonical printing with descending exponents; re-parsing is the identity.
std::string ord_print(const OrdinalCNF& a);

// Canonical fundamental sequence of a limit ordinal, indexed from k = 1:
// for a = g + w^(b+1) the k-th value is g + w^b * k; for a = g + w^b with b
// limit it is g + w^(fundamental_sequence(b, k)).
OrdinalCNF fundamental_sequence(const OrdinalCNF& a, std::uint64_t k);

}  // namespace combinach
