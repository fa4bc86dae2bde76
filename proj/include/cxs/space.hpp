#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "cxs/element_set.hpp"
#include "cxs/errors.hpp"

namespace cxs {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

// Finite convexity space: a ground set {0..n-1} together with a family of
// "convex" subsets containing the empty set and the full ground set and
// closed under pairwise intersection. The family is kept sorted in canonical
// order with no duplicates; the empty set is always sets()[0].
class ConvexitySpace {
 public:
  int ground_size() const { return n_; }
  const std::vector<ElementSet>& convex_sets() const { return sets_; }
  ElementSet full() const { return ElementSet::full(n_); }

  bool is_convex(const ElementSet& s) const;

  // Smallest convex set containing y: the intersection of all members that
  // contain y. Always a member of the family.
  ElementSet hull(const ElementSet& y) const;

 private:
  friend ConvexitySpace validate_space(int, std::vector<ElementSet>, Budget*);
  friend ConvexitySpace closure_from_generators(int, const std::vector<ElementSet>&, std::size_t,
                                                Budget*);
  friend ConvexitySpace detail_space_from_closed(int, std::vector<ElementSet>);
  ConvexitySpace(int n, std::vector<ElementSet> sorted_sets)
      : n_(n), sets_(std::move(sorted_sets)) {}

  int n_ = 0;
  std::vector<ElementSet> sets_;
};

// Checks the two axioms (empty and full present, family closed under pairwise
// intersection) and returns the space with the family in canonical order.
// Duplicates are dropped silently. Throws MissingEmptyOrFull or
// NotIntersectionClosedError (reporting the first violating pair in canonical
// scan order).
ConvexitySpace validate_space(int ground_size, std::vector<ElementSet> sets,
                              Budget* budget = nullptr);

// Smallest intersection-closed family containing the generators plus the
// empty and full sets. Rejects closures larger than `cap` with a budget
// error. Duplicate generators are allowed.
ConvexitySpace closure_from_generators(int ground_size, const std::vector<ElementSet>& generators,
                                       std::size_t cap = kDefaultClosureCap,
                                       Budget* budget = nullptr);

// Construction bypass for families that are intersection-closed by
// construction (the powerset builder); sorts and dedups but skips the
// quadratic axiom check.
ConvexitySpace detail_space_from_closed(int ground_size, std::vector<ElementSet> sets);

// Memoizing hull evaluator for repeated hull queries against one space.
// For ground sets of at most 16 elements hulls are cached in a dense table
// indexed by bit mask; larger grounds fall back to a hash map.
class HullCache {
 public:
  explicit HullCache(const ConvexitySpace& space);

  const ConvexitySpace& space() const { return space_; }
  const ElementSet& hull(const ElementSet& y, Budget& budget);
  // Mask-indexed variant, only valid when ground_size <= 16.
  const ElementSet& hull_mask(std::uint32_t mask, Budget& budget);

 private:
  const ConvexitySpace& space_;
  bool dense_;
  std::vector<ElementSet> table_;
  std::vector<bool> have_;
  std::unordered_map<std::uint64_t, ElementSet> map_;  // keyed by low word (ground <= 64)
  std::unordered_map<std::string, ElementSet> wide_map_;
};

}  // namespace cxs
