#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cxs/space.hpp"

namespace cxs {

// Declarative description of a space to construct.
struct BuilderSpec {
  enum class Kind { Interval, Free, Powerset, PlanarTrace, GridTrace, Generators, Explicit };

  Kind kind = Kind::Free;
  int n = 0;                                       // interval / free / powerset
  int width = 0, height = 0;                       // grid_trace
  std::vector<std::array<long long, 2>> points;    // planar_trace
  int ground_size = 0;                             // generators / explicit
  std::vector<ElementSet> sets;                    // generators / explicit

  std::size_t closure_cap = kDefaultClosureCap;
};

// interval(n): ground 0..n-1, convex sets = all intervals [i, j] plus the
// empty set. Has n(n+1)/2 + 1 members.
ConvexitySpace make_interval_space(int n, Budget* budget = nullptr);

// free(n): only the empty set and the full ground set are convex.
ConvexitySpace make_free_space(int n, Budget* budget = nullptr);

// powerset(n): every subset is convex. Rejected when 2^n exceeds the cap.
ConvexitySpace make_powerset_space(int n, std::size_t cap = kDefaultClosureCap,
                                   Budget* budget = nullptr);

// Trace convexity of a planar point configuration: the ground elements are
// the points (sorted by (x, y) and indexed in that order), and a subset is
// convex exactly when it is the trace P ∩ conv(S) of some S ⊆ P. Uses exact
// integer orientation predicates; only dimension 2 is supported. Points must
// be pairwise distinct.
ConvexitySpace make_planar_trace_space(const std::vector<std::array<long long, 2>>& points,
                                       std::size_t cap = kDefaultClosureCap,
                                       Budget* budget = nullptr);

// Planar trace of the full w x h integer grid.
ConvexitySpace make_grid_trace_space(int width, int height, std::size_t cap = kDefaultClosureCap,
                                     Budget* budget = nullptr);

ConvexitySpace build(const BuilderSpec& spec, Budget* budget = nullptr);

// Exact sign of the cross product (b - a) x (c - a): +1 counterclockwise,
// -1 clockwise, 0 collinear.
int orientation(const std::array<long long, 2>& a, const std::array<long long, 2>& b,
                const std::array<long long, 2>& c);

// Is p contained in the convex hull of pts (boundary included)?
bool point_in_hull(const std::array<long long, 2>& p,
                   const std::vector<std::array<long long, 2>>& pts);

}  // namespace cxs
