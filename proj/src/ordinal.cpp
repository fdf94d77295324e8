#include "combinach/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "combinach/errors.hpp"

namespace combinach {

OrdinalCNF OrdinalCNF::nat(std::uint64_t n) {
  OrdinalCNF a;
  if (n > 0) a.terms_.push_back(Term{OrdinalCNF(), n});
  return a;
}

OrdinalCNF OrdinalCNF::omega() { return omega_power(nat(1)); }

OrdinalCNF OrdinalCNF::omega_power(const OrdinalCNF& exponent, std::uint64_t coefficient) {
  OrdinalCNF a;
  if (coefficient == 0) throw validation_error("ordinal coefficient must be >= 1");
  a.terms_.push_back(Term{exponent, coefficient});
  return a;
}

bool OrdinalCNF::is_nat() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t OrdinalCNF::nat_value() const {
  if (terms_.empty()) return 0;
  return terms_[0].coefficient;
}

bool OrdinalCNF::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

OrdinalCNF OrdinalCNF::predecessor() const {
  if (!is_successor()) throw precondition_error("predecessor of a non-successor ordinal");
  OrdinalCNF a = *this;
  Term& last = a.terms_.back();
  if (last.coefficient > 1) {
    --last.coefficient;
  } else {
    a.terms_.pop_back();
  }
  return a;
}

void OrdinalCNF::append_term(const OrdinalCNF& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return;
  // CNF addition: terms below the incoming exponent are absorbed.
  while (!terms_.empty() && ord_compare(terms_.back().exponent, exponent) == Ordering::LT) {
    terms_.pop_back();
  }
  if (!terms_.empty() && terms_.back().exponent == exponent) {
    terms_.back().coefficient += coefficient;
  } else {
    terms_.push_back(Term{exponent, coefficient});
  }
}

OrdinalCNF OrdinalCNF::plus(const OrdinalCNF& other) const {
  OrdinalCNF a = *this;
  for (const Term& t : other.terms_) a.append_term(t.exponent, t.coefficient);
  return a;
}

int OrdinalCNF::depth() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exponent.depth());
  return terms_.empty() ? 0 : d + 1;
}

Ordering ord_compare(const OrdinalCNF& a, const OrdinalCNF& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering e = ord_compare(ta[i].exponent, tb[i].exponent);
    if (e != Ordering::EQ) return e;
    if (ta[i].coefficient != tb[i].coefficient) {
      return ta[i].coefficient < tb[i].coefficient ? Ordering::LT : Ordering::GT;
    }
  }
  if (ta.size() == tb.size()) return Ordering::EQ;
  return ta.size() < tb.size() ? Ordering::LT : Ordering::GT;
}

bool operator==(const OrdinalCNF& a, const OrdinalCNF& b) { return ord_compare(a, b) == Ordering::EQ; }
bool operator!=(const OrdinalCNF& a, const OrdinalCNF& b) { return !(a == b); }
bool operator<(const OrdinalCNF& a, const OrdinalCNF& b) { return ord_compare(a, b) == Ordering::LT; }
bool operator<=(const OrdinalCNF& a, const OrdinalCNF& b) { return ord_compare(a, b) != Ordering::GT; }

int ordinal_depth_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("COMBINACH_DEPTH_CAP")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 3;
  }();
  return cap;
}

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  OrdinalCNF parse() {
    OrdinalCNF a = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    if (a.depth() > ordinal_depth_cap()) {
      throw validation_error("ordinal depth exceeds cap " + std::to_string(ordinal_depth_cap()) +
                             ": '" + text_ + "'");
    }
    return a;
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw validation_error("ordinal syntax error at position " + std::to_string(pos_) + " in '" +
                           text_ + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t parse_nat() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("natural number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  OrdinalCNF parse_expr() {
    OrdinalCNF a = parse_term();
    while (eat('+')) a = a.plus(parse_term());
    return a;
  }

  // Exponent position: parenthesized expr, or a tight tower 'w'('^' exponent)?, or nat.
  OrdinalCNF parse_exponent() {
    if (eat('(')) {
      OrdinalCNF a = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    if (eat('w')) {
      if (eat('^')) return OrdinalCNF::omega_power(parse_exponent());
      return OrdinalCNF::omega();
    }
    return OrdinalCNF::nat(parse_nat());
  }

  OrdinalCNF parse_term() {
    skip_space();
    if (eat('w')) {
      OrdinalCNF exponent = OrdinalCNF::nat(1);
      if (eat('^')) exponent = parse_exponent();
      std::uint64_t coefficient = 1;
      if (eat('*')) {
        coefficient = parse_nat();
        if (coefficient == 0) fail("coefficient must be >= 1");
      }
      return OrdinalCNF::omega_power(exponent, coefficient);
    }
    return OrdinalCNF::nat(parse_nat());
  }
};

}  // namespace

OrdinalCNF ord_parse(const std::string& text) { return Parser(text).parse(); }

std::string ord_print(const OrdinalCNF& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += "+";
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (!(t.exponent.is_nat() && t.exponent.nat_value() == 1)) {
      std::string e = ord_print(t.exponent);
      const bool wrap = e.find('+') != std::string::npos || e.find('*') != std::string::npos;
      out += "^";
      out += wrap ? "(" + e + ")" : e;
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

OrdinalCNF fundamental_sequence(const OrdinalCNF& a, std::uint64_t k) {
  if (!a.is_limit()) throw precondition_error("fundamental_sequence of a non-limit ordinal");
  if (k < 1) throw precondition_error("fundamental sequence index starts at 1");
  const auto& terms = a.terms();
  const OrdinalCNF::Term& last = terms.back();

  OrdinalCNF prefix;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    prefix = prefix.plus(OrdinalCNF::omega_power(terms[i].exponent, terms[i].coefficient));
  }
  if (last.coefficient > 1) {
    prefix = prefix.plus(OrdinalCNF::omega_power(last.exponent, last.coefficient - 1));
  }

  const OrdinalCNF& beta = last.exponent;
  if (beta.is_successor()) {
    return prefix.plus(OrdinalCNF::omega_power(beta.predecessor(), k));
  }
  return prefix.plus(OrdinalCNF::omega_power(fundamental_sequence(beta, k)));
}

}  // namespace combinach
