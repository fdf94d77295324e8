#include "combinach/finite_set.hpp"

#include <algorithm>

#include "combinach/errors.hpp"

namespace combinach {

FiniteSet::FiniteSet(std::vector<index_t> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1) throw validation_error("set elements must be >= 1");
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      throw validation_error("set elements must be strictly increasing");
    }
  }
}

FiniteSet FiniteSet::from_unsorted(std::vector<index_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FiniteSet(std::move(elements));
}

FiniteSet FiniteSet::interval(index_t lo, index_t hi) {
  std::vector<index_t> v;
  for (index_t i = std::max<index_t>(lo, 1); i < hi; ++i) v.push_back(i);
  return FiniteSet(std::move(v));
}

index_t FiniteSet::min() const {
  if (empty()) throw precondition_error("min of empty set");
  return elements_.front();
}

index_t FiniteSet::max() const {
  if (empty()) throw precondition_error("max of empty set");
  return elements_.back();
}

bool FiniteSet::contains(index_t v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

bool FiniteSet::is_subset_of(const FiniteSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

FiniteSet FiniteSet::intersect(const FiniteSet& other) const {
  std::vector<index_t> v;
  std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(),
                        other.elements_.end(), std::back_inserter(v));
  FiniteSet r;
  r.elements_ = std::move(v);
  return r;
}

FiniteSet FiniteSet::unite(const FiniteSet& other) const {
  std::vector<index_t> v;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(v));
  FiniteSet r;
  r.elements_ = std::move(v);
  return r;
}

FiniteSet FiniteSet::minus(const FiniteSet& other) const {
  std::vector<index_t> v;
  std::set_difference(elements_.begin(), elements_.end(), other.elements_.begin(),
                      other.elements_.end(), std::back_inserter(v));
  FiniteSet r;
  r.elements_ = std::move(v);
  return r;
}

FiniteSet FiniteSet::restrict_window(index_t lo, index_t hi) const {
  std::vector<index_t> v;
  for (index_t e : elements_) {
    if (e >= lo && e < hi) v.push_back(e);
  }
  FiniteSet r;
  r.elements_ = std::move(v);
  return r;
}

FiniteSet FiniteSet::prefix(std::size_t count) const {
  FiniteSet r;
  r.elements_.assign(elements_.begin(),
                     elements_.begin() + std::min(count, elements_.size()));
  return r;
}

bool FiniteSet::size_lex_less(const FiniteSet& other) const {
  if (elements_.size() != other.elements_.size()) {
    return elements_.size() < other.elements_.size();
  }
  return elements_ < other.elements_;
}

std::string FiniteSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

}  // namespace combinach
