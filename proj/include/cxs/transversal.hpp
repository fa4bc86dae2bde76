#pragma once

#include <optional>
#include <vector>

#include "cxs/bigmath.hpp"
#include "cxs/element_set.hpp"
#include "cxs/errors.hpp"
#include "cxs/multiset.hpp"
#include "cxs/space.hpp"

namespace cxs {

struct SetSystem {
  int ground_size = 0;
  std::vector<ElementSet> members;
};

struct TauResult {
  int size = 0;
  ElementSet set;
};

// Exact minimum hitting set by branch and bound (greedy upper bound, rounded
// fractional lower bound, disjoint-member lower bound in nodes), returning
// the lexicographically least optimum. Infeasible when a member is empty.
TauResult tau(const SetSystem& system, Budget* budget = nullptr);

struct FractionalTransversal {
  Rational value;
  std::vector<Rational> weights;       // per ground element
  std::vector<Rational> dual_weights;  // per member
  Rational dual_value;
};

// Fractional transversal optimum by exact simplex, with the upper bounds
// f(x) <= 1 imposed as part of the program. The dual (maximum fractional
// matching) is solved independently; both solutions are checked feasible by
// substitution and their values must agree exactly.
FractionalTransversal tau_star(const SetSystem& system, Budget* budget = nullptr);

struct NetRequest {
  Multiset y;
  Rational epsilon;  // in (0, 1], exact
};

struct WeakNetResult {
  ElementSet net;
  SetSystem heavy;  // members meeting the weight threshold, in source order
};

// Computes the subfamily of members S with |S ∩ Y| >= epsilon·|Y| (counting
// multiplicities, compared by integer cross-multiplication) and a minimum
// transversal of it. The family defaults to every convex set of the space.
WeakNetResult weak_net(const ConvexitySpace& space, const NetRequest& request,
                       const std::optional<SetSystem>& family = std::nullopt,
                       Budget* budget = nullptr);

struct IntersectionClosure {
  SetSystem closed;                        // canonical order
  bool ground_added_by_convention = false; // X came only from the empty subfamily
};

// All distinct intersections over subfamilies; the empty subfamily
// contributes the full ground set, flagged when no nonempty subfamily
// produces it.
IntersectionClosure intersection_closure(const SetSystem& system, Budget* budget = nullptr);

struct PqResult {
  bool holds = false;
  std::optional<int> tau_value;
};

// True when every p-subfamily contains q members with a common element; on
// success also reports the system's exact transversal number.
PqResult pq_check(const ConvexitySpace& space, const SetSystem& system, int p, int q,
                  Budget* budget = nullptr);

}  // namespace cxs
