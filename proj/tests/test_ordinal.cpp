#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "combinach/errors.hpp"
#include "combinach/ordinal.hpp"

using namespace combinach;

namespace {

// every ordinal below w^3 with exponents <= 2 and coefficients <= 3
std::vector<OrdinalCNF> small_ordinals() {
  std::vector<OrdinalCNF> out;
  for (int c2 = 0; c2 <= 3; ++c2) {
    for (int c1 = 0; c1 <= 3; ++c1) {
      for (int c0 = 0; c0 <= 3; ++c0) {
        OrdinalCNF a;
        if (c2) a = a.plus(OrdinalCNF::omega_power(OrdinalCNF::nat(2), c2));
        if (c1) a = a.plus(OrdinalCNF::omega_power(OrdinalCNF::nat(1), c1));
        if (c0) a = a.plus(OrdinalCNF::nat(c0));
        out.push_back(a);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(ord_print(ord_parse("w^2*3+w+5")) == "w^2*3+w+5");
  CHECK(ord_print(ord_parse("0")) == "0");
  CHECK(ord_parse("w^2*3+w+5").terms().size() == 3);
  CHECK(ord_parse("0").is_zero());

  // absorption: 1+w normalizes to w
  CHECK(ord_compare(ord_parse("1+w"), ord_parse("w")) == Ordering::EQ);
  CHECK(ord_compare(ord_parse("w+1+w^2"), ord_parse("w^2")) == Ordering::EQ);

  // towers and parenthesized exponents
  CHECK(ord_print(ord_parse("w^w^2*3")) == "w^w^2*3");
  CHECK(ord_print(ord_parse("w^(w+1)")) == "w^(w+1)");
  CHECK(ord_compare(ord_parse("w^(w^2)"), ord_parse("w^w^2")) == Ordering::EQ);

  CHECK_THROWS_AS(ord_parse(""), validation_error);
  CHECK_THROWS_AS(ord_parse("w^"), validation_error);
  CHECK_THROWS_AS(ord_parse("w*0"), validation_error);
  CHECK_THROWS_AS(ord_parse("q"), validation_error);
  // depth overflow: w^w^w needs depth 4
  CHECK_THROWS_AS(ord_parse("w^w^w"), validation_error);
}

TEST_CASE("round trip on a sample of printable ordinals") {
  for (const OrdinalCNF& a : small_ordinals()) {
    CHECK(ord_compare(ord_parse(ord_print(a)), a) == Ordering::EQ);
  }
  for (const char* text : {"w^w", "w^w*2+w^2*5+1", "w^(w*2)", "w^(w^2+1)*7+w*2"}) {
    CHECK(ord_print(ord_parse(ord_print(ord_parse(text)))) == ord_print(ord_parse(text)));
  }
}

TEST_CASE("comparison examples") {
  CHECK(ord_compare(ord_parse("w^2"), ord_parse("w*5+3")) == Ordering::GT);
  CHECK(ord_compare(ord_parse("0"), ord_parse("0")) == Ordering::EQ);
  CHECK(ord_compare(ord_parse("w+1"), ord_parse("w*2")) == Ordering::LT);
}

TEST_CASE("comparison is a total order on exhaustive small ordinals") {
  const auto ordinals = small_ordinals();
  for (const auto& a : ordinals) {
    for (const auto& b : ordinals) {
      const Ordering ab = ord_compare(a, b);
      const Ordering ba = ord_compare(b, a);
      // antisymmetry
      if (ab == Ordering::EQ) {
        CHECK(ba == Ordering::EQ);
      } else {
        CHECK(ab != ba);
      }
      // transitivity
      for (const auto& c : ordinals) {
        if (ab != Ordering::GT && ord_compare(b, c) != Ordering::GT) {
          CHECK(ord_compare(a, c) != Ordering::GT);
        }
      }
    }
  }
}

TEST_CASE("fundamental sequence canonical values") {
  CHECK(ord_compare(fundamental_sequence(ord_parse("w"), 3), ord_parse("3")) == Ordering::EQ);
  CHECK(ord_compare(fundamental_sequence(ord_parse("w^2"), 3), ord_parse("w*3")) == Ordering::EQ);
  CHECK(ord_compare(fundamental_sequence(ord_parse("w^w"), 3), ord_parse("w^3")) == Ordering::EQ);
  CHECK(ord_compare(fundamental_sequence(ord_parse("w*2"), 4), ord_parse("w+4")) == Ordering::EQ);
  CHECK(ord_compare(fundamental_sequence(ord_parse("w^2+w"), 2), ord_parse("w^2+2")) ==
        Ordering::EQ);

  CHECK_THROWS_AS(fundamental_sequence(ord_parse("w+1"), 2), precondition_error);
  CHECK_THROWS_AS(fundamental_sequence(ord_parse("0"), 2), precondition_error);
  CHECK_THROWS_AS(fundamental_sequence(ord_parse("w"), 0), precondition_error);
}

TEST_CASE("fundamental sequences increase strictly and stay below the limit") {
  std::vector<OrdinalCNF> limits;
  for (const OrdinalCNF& a : small_ordinals()) {
    if (a.is_limit()) limits.push_back(a);
  }
  limits.push_back(ord_parse("w^w"));
  limits.push_back(ord_parse("w^(w*2)"));
  for (const OrdinalCNF& a : limits) {
    OrdinalCNF previous;
    for (std::uint64_t k = 1; k < 50; ++k) {
      const OrdinalCNF v = fundamental_sequence(a, k);
      CHECK(ord_compare(v, a) == Ordering::LT);
      if (k > 1) CHECK(ord_compare(previous, v) == Ordering::LT);
      previous = v;
    }
  }
}

TEST_CASE("sampled cofinality below small limits") {
  // every beta below the limit is overtaken by some ladder value
  for (const char* limit_text : {"w", "w*2", "w*3", "w^2"}) {
    const OrdinalCNF limit = ord_parse(limit_text);
    for (const OrdinalCNF& beta : small_ordinals()) {
      if (!(ord_compare(beta, limit) == Ordering::LT)) continue;
      bool overtaken = false;
      for (std::uint64_t k = 1; k <= 50 && !overtaken; ++k) {
        overtaken = ord_compare(beta, fundamental_sequence(limit, k)) == Ordering::LT;
      }
      CHECK(overtaken);
    }
  }
}

TEST_CASE("depth accounting") {
  CHECK(ord_parse("0").depth() == 0);
  CHECK(ord_parse("7").depth() == 1);
  CHECK(ord_parse("w*4+1").depth() == 2);
  CHECK(ord_parse("w^w").depth() == 3);
  CHECK(ord_parse("w^(w^2*9+w)+w^5*2").depth() == 3);
}
