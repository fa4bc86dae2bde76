#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cxs/errors.hpp"

namespace cxs {

// Subset of a fixed ground set {0, ..., n-1}, stored as a bit vector.
//
// The canonical order used everywhere for witnesses and serialization is the
// lexicographic order of the strictly increasing index sequences, so
// {} < {0} < {0,1} < {0,1,2} < {0,2} < {1} < {1,2} < {2} on a 3-element
// ground set.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(int ground_size) : n_(check_ground(ground_size)), words_(word_count(ground_size), 0) {}

  static ElementSet full(int ground_size) {
    ElementSet s(ground_size);
    for (int i = 0; i < ground_size; ++i) s.set(i);
    return s;
  }

  static ElementSet of(int ground_size, std::initializer_list<int> elems) {
    ElementSet s(ground_size);
    for (int e : elems) {
      s.check_index(e);
      s.set(e);
    }
    return s;
  }

  static ElementSet from_indices(int ground_size, const std::vector<int>& elems) {
    ElementSet s(ground_size);
    for (int e : elems) {
      s.check_index(e);
      s.set(e);
    }
    return s;
  }

  int ground_size() const { return n_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  // Superset test: does *this contain every element of other?
  bool contains(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        out.push_back(static_cast<int>(w * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  // Least element, or -1 when empty.
  int lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  // Three-way comparison in canonical order (see class comment).
  static int compare(const ElementSet& a, const ElementSet& b) {
    std::size_t nw = std::max(a.words_.size(), b.words_.size());
    int diff = -1;
    for (std::size_t w = 0; w < nw; ++w) {
      std::uint64_t aw = w < a.words_.size() ? a.words_[w] : 0;
      std::uint64_t bw = w < b.words_.size() ? b.words_[w] : 0;
      std::uint64_t x = aw ^ bw;
      if (x) {
        diff = static_cast<int>(w * 64 + std::countr_zero(x));
        break;
      }
    }
    if (diff < 0) return 0;
    // Elements below diff agree. The set holding diff wins unless the other
    // set is a strict prefix (has nothing above diff).
    if (a.test(diff)) return b.any_above(diff) ? -1 : 1;
    return a.any_above(diff) ? 1 : -1;
  }

  friend bool operator<(const ElementSet& a, const ElementSet& b) { return compare(a, b) < 0; }

  // Low 64 bits; valid as a complete mask only when ground_size <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : indices()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  static int check_ground(int n) {
    if (n < 0) throw Error(ErrorKind::DegenerateInput, "negative ground size");
    return n;
  }
  void check_index(int e) const {
    if (e < 0 || e >= n_)
      throw Error(ErrorKind::IndexOutOfRange,
                  "element " + std::to_string(e) + " outside ground set of size " + std::to_string(n_));
  }
  static std::size_t word_count(int n) { return static_cast<std::size_t>((n + 63) / 64); }

  bool any_above(int i) const {
    std::size_t w = static_cast<std::size_t>(i >> 6);
    std::uint64_t mask = ~std::uint64_t{0} << (i & 63);
    mask <<= 1;  // strictly above i; (i&63)==63 shifts to zero safely in two steps
    if (words_[w] & mask) return true;
    for (std::size_t j = w + 1; j < words_.size(); ++j)
      if (words_[j]) return true;
    return false;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cxs
