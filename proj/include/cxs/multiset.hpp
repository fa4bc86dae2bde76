#pragma once

#include <map>
#include <string>
#include <vector>

#include "cxs/element_set.hpp"
#include "cxs/errors.hpp"

namespace cxs {

// Multiset of ground elements (element -> multiplicity, multiplicities >= 1).
class Multiset {
 public:
  Multiset() = default;

  explicit Multiset(const std::map<int, int>& counts) {
    for (auto [e, c] : counts) add(e, c);
  }

  static Multiset from_elements(const std::vector<int>& elems) {
    Multiset m;
    for (int e : elems) m.add(e);
    return m;
  }

  void add(int element, int multiplicity = 1) {
    if (element < 0) throw Error(ErrorKind::IndexOutOfRange, "negative element in multiset");
    if (multiplicity <= 0) throw Error(ErrorKind::DegenerateInput, "multiplicity must be positive");
    counts_[element] += multiplicity;
    cardinality_ += multiplicity;
  }

  const std::map<int, int>& counts() const { return counts_; }
  long long cardinality() const { return cardinality_; }
  bool empty() const { return counts_.empty(); }

  int multiplicity(int element) const {
    auto it = counts_.find(element);
    return it == counts_.end() ? 0 : it->second;
  }

  int max_multiplicity() const {
    int m = 0;
    for (auto [e, c] : counts_) m = std::max(m, c);
    return m;
  }

  int max_element() const { return counts_.empty() ? -1 : counts_.rbegin()->first; }

  ElementSet support(int ground_size) const {
    ElementSet s(ground_size);
    for (auto [e, c] : counts_) {
      if (e >= ground_size)
        throw Error(ErrorKind::IndexOutOfRange,
                    "multiset element " + std::to_string(e) + " outside ground set");
      s.set(e);
    }
    return s;
  }

  // Sorted element sequence with repetitions.
  std::vector<int> expand() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality_));
    for (auto [e, c] : counts_)
      for (int i = 0; i < c; ++i) out.push_back(e);
    return out;
  }

  // Canonical order: lexicographic on the expanded sequences.
  static int compare(const Multiset& a, const Multiset& b) {
    auto ea = a.expand(), eb = b.expand();
    if (ea < eb) return -1;
    if (eb < ea) return 1;
    return 0;
  }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.counts_ == b.counts_; }
  friend bool operator<(const Multiset& a, const Multiset& b) { return compare(a, b) < 0; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : expand()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  std::map<int, int> counts_;
  long long cardinality_ = 0;
};

}  // namespace cxs
