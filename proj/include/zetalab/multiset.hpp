#pragma once

// Finite multisets over an ordered value domain. Stored multiplicities are
// always >= 1.

#include <cstddef>
#include <map>
#include <string>

namespace zetalab {

template <class T>
class Multiset {
 public:
  using Map = std::map<T, std::size_t>;

  Multiset() = default;

  void add(const T& value, std::size_t multiplicity = 1) {
    if (multiplicity) entries_[value] += multiplicity;
  }
  std::size_t multiplicity(const T& value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? 0 : it->second;
  }
  // Sum of multiplicities.
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [v, m] : entries_) n += m;
    return n;
  }
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }
  typename Map::const_iterator begin() const { return entries_.begin(); }
  typename Map::const_iterator end() const { return entries_.end(); }

  // Image under f, multiplicities added where f collides.
  template <class F>
  Multiset map(F f) const {
    Multiset out;
    for (const auto& [v, m] : entries_) out.add(f(v), m);
    return out;
  }

  // Multiset sum: multiplicities add.
  friend Multiset operator+(Multiset a, const Multiset& b) {
    for (const auto& [v, m] : b.entries_) a.add(v, m);
    return a;
  }
  friend bool operator==(const Multiset& a, const Multiset& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Multiset& a, const Multiset& b) { return !(a == b); }

 private:
  Map entries_;
};

}  // namespace zetalab
