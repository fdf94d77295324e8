#include "combinach/weights.hpp"

#include "combinach/errors.hpp"
#include "combinach/setgen.hpp"

namespace combinach {

WeightSeq WeightSeq::lambda() {
  WeightSeq w;
  w.kind_ = Kind::Lambda;
  return w;
}

WeightSeq WeightSeq::harmonic() {
  WeightSeq w;
  w.kind_ = Kind::Harmonic;
  return w;
}

WeightSeq WeightSeq::one() {
  WeightSeq w;
  w.kind_ = Kind::One;
  return w;
}

WeightSeq WeightSeq::geometric() {
  WeightSeq w;
  w.kind_ = Kind::Geometric;
  return w;
}

WeightSeq WeightSeq::inverse_square_blocks() {
  WeightSeq w;
  w.kind_ = Kind::InverseSquareBlocks;
  return w;
}

WeightSeq WeightSeq::custom(std::map<index_t, Rational> table, WeightSeq fallback) {
  for (const auto& [k, v] : table) {
    if (k < 1) throw validation_error("weight indices start at 1");
    if (v <= 0) throw validation_error("weights must be > 0");
  }
  WeightSeq w;
  w.kind_ = Kind::Custom;
  w.table_ = std::move(table);
  w.fallback_ = std::make_shared<WeightSeq>(std::move(fallback));
  return w;
}

Rational WeightSeq::at(index_t k) const {
  if (k < 1) throw validation_error("weight indices start at 1");
  switch (kind_) {
    case Kind::Lambda: {
      mpz_class den = 1;
      den <<= (unsigned)block_of(k);
      return Rational(1, den);
    }
    case Kind::Harmonic:
      return Rational(1, k);
    case Kind::One:
      return Rational(1);
    case Kind::Geometric: {
      mpz_class den = 1;
      den <<= (unsigned)k;
      return Rational(1, den);
    }
    case Kind::InverseSquareBlocks: {
      const index_t n = block_of(k);
      if (n == 0) return Rational(1);
      return Rational(1, n * n);
    }
    case Kind::Custom: {
      auto it = table_.find(k);
      if (it != table_.end()) return it->second;
      return fallback_->at(k);
    }
  }
  throw validation_error("unknown weight kind");
}

FinVec WeightSeq::on(const FiniteSet& set) const {
  FinVec v;
  for (index_t k : set) v.set(k, at(k));
  return v;
}

std::string WeightSeq::describe() const {
  switch (kind_) {
    case Kind::Lambda:
      return "lambda";
    case Kind::Harmonic:
      return "harmonic";
    case Kind::One:
      return "one";
    case Kind::Geometric:
      return "geometric";
    case Kind::InverseSquareBlocks:
      return "inverse-square-blocks";
    case Kind::Custom: {
      std::string out = "custom{";
      bool first = true;
      for (const auto& [k, v] : table_) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(k) + ":" + format_rational(v);
      }
      return out + ";fallback=" + fallback_->describe() + "}";
    }
  }
  return "?";
}

}  // namespace combinach
