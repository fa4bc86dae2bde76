#pragma once

#include <vector>

#include "cxs/bigmath.hpp"
#include "cxs/element_set.hpp"
#include "cxs/errors.hpp"
#include "cxs/space.hpp"

namespace cxs {

// Number of color classes sufficient for a claimed Radon bound r:
// S(k^ceil(log2 r), k) with k = r - 1.
BigInt colorful_m(int r, Budget* budget = nullptr);

// Full trace of the rainbow search over m = colorful_m(r) families. The
// selection picks one member per family (by index) with empty total
// intersection; failing_index is the ground index t whose candidate
// intersection X_t first came up empty.
struct RainbowWitness {
  std::vector<int> selection;                        // member index per family
  std::vector<ElementSet> selected_sets;             // the corresponding sets
  int failing_index = -1;                            // witnessing index t
  std::vector<std::vector<int>> chosen_subfamilies;  // G_i: k member indices per family
  std::vector<std::vector<int>> per_index_families;  // X_t: member index per family, per t
};

// Extracts a rainbow selection with empty intersection from m families of
// convex sets, each with empty intersection, assuming the space's Radon
// number is bounded by r. Throws PreconditionViolation when a family
// intersects (or, for small spaces where the check is affordable, when the
// Radon bound fails), and RadonRefutedError when the run itself disproves
// the claimed bound.
RainbowWitness find_rainbow_empty(const ConvexitySpace& space,
                                  const std::vector<std::vector<ElementSet>>& families, int r,
                                  Budget* budget = nullptr);

// Intersection statistics of a family: alpha = exact fraction of the m-tuples
// whose members share a point; beta = (depth of a deepest element) / |F|.
struct FHStats {
  Rational alpha;
  Rational beta;
  int deepest_point = -1;
  BigInt intersecting_tuples;
  BigInt total_tuples;
};

FHStats fh_stats(const ConvexitySpace& space, const std::vector<ElementSet>& family, int m,
                 Budget* budget = nullptr);

}  // namespace cxs
