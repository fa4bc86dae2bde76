#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cxs/multiset.hpp"
#include "cxs/space.hpp"

namespace cxs {

// k-partition of a multiset whose part hulls share a point.
struct TverbergWitness {
  std::vector<Multiset> parts;  // canonical order: lexicographic on expansions
  int common_point = -1;        // least element of the intersection of the hulls
};

// Inclusion-minimal subfamily of convex sets with empty intersection whose
// every proper subfamily intersects.
struct HellyCertificate {
  std::vector<ElementSet> family;  // canonical order
};

struct HellyResult {
  int number = 0;
  HellyCertificate certificate;
};

struct CheckResult {
  enum class Status { Pass, Fail, NotApplicable };
  Status status = Status::NotApplicable;
  std::string detail;
};

struct BoundsReport {
  std::optional<int> r2;                    // subset-based Radon number
  std::map<int, std::optional<int>> rk;     // multiset-based partition numbers
  int helly = 0;
  HellyCertificate helly_certificate;
  bool degenerate = false;                  // r2 == 2 (excluded by most theory)
  CheckResult levi, jamison, pigeonhole, monotone;
};

// Existence-only test: can y be split into k nonempty parts whose hulls share
// a point? Decided without enumerating partitions where possible (multiplicity
// pigeonhole, then disjoint-packing of minimal hull supports per candidate
// common point); falls back to direct partition enumeration on wide grounds.
bool admits_k_partition(const ConvexitySpace& space, const Multiset& y, int k,
                        Budget* budget = nullptr);

// Lexicographically least witness partition (parts compared by expanded
// sequences, then the least common point), or absent when no k-partition of y
// has intersecting hulls.
std::optional<TverbergWitness> find_k_partition(const ConvexitySpace& space, const Multiset& y,
                                                int k, Budget* budget = nullptr);

// Least m <= |X| such that every m-element subset admits a 2-partition with
// intersecting hulls; absent when no such m exists.
std::optional<int> radon_number(const ConvexitySpace& space, Budget* budget = nullptr);

// Least m such that every multiset of cardinality m splits into k parts with
// a common hull point. Searches m up to the pigeonhole ceiling (k-1)|X|+1,
// which always succeeds for k <= |X|; returns |X|+1 by convention when
// k > |X|. Engaged for every valid space.
std::optional<int> partition_number(const ConvexitySpace& space, int k, Budget* budget = nullptr);

// Maximum cardinality of an inclusion-minimal empty-intersection subfamily,
// with one maximizing certificate (re-validated before return). Searched over
// witness-point subsets W: the family {hull(W minus x) : x in W} has empty
// intersection for some |W| = s exactly when a size-s minimal subfamily
// exists.
HellyResult helly_number(const ConvexitySpace& space, Budget* budget = nullptr);

// Computes r2, r_k for 2 <= k <= k_max and the Helly number, then checks
// h < r2, r_k <= r2^ceil(log2 k), r_k <= (k-1)|X|+1, and r_k <= r_{k+1}
// (the last only across values obtained by search, not by the k > |X|
// convention). Checks involving r2 are n/a when r2 is absent.
BoundsReport verify_bounds(const ConvexitySpace& space, int k_max, Budget* budget = nullptr);

}  // namespace cxs
