#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace combinach {

using index_t = std::int64_t;

// Finite subset of the positive integers, kept strictly increasing.
class FiniteSet {
public:
  FiniteSet() = default;
  // Validates: sorted, distinct, all >= 1.
  explicit FiniteSet(std::vector<index_t> elements);

  static FiniteSet from_unsorted(std::vector<index_t> elements);
  static FiniteSet interval(index_t lo, index_t hi);  // [lo, hi) clipped to >= 1

  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  index_t min() const;  // requires nonempty
  index_t max() const;  // requires nonempty
  index_t operator[](std::size_t i) const { return elements_[i]; }
  bool contains(index_t v) const;
  bool is_subset_of(const FiniteSet& other) const;

  FiniteSet intersect(const FiniteSet& other) const;
  FiniteSet unite(const FiniteSet& other) const;
  FiniteSet minus(const FiniteSet& other) const;
  FiniteSet restrict_window(index_t lo, index_t hi) const;  // elements in [lo, hi)
  FiniteSet prefix(std::size_t count) const;                // first count elements

  const std::vector<index_t>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const FiniteSet& other) const { return elements_ == other.elements_; }
  bool operator!=(const FiniteSet& other) const { return elements_ != other.elements_; }
  // (size, lexicographic) — the canonical enumeration order.
  bool size_lex_less(const FiniteSet& other) const;

  std::string to_string() const;  // "{1,2,5}"

private:
  std::vector<index_t> elements_;
};

}  // namespace combinach
