#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cxs/bigmath.hpp"
#include "cxs/element_set.hpp"
#include "cxs/errors.hpp"
#include "cxs/space.hpp"

namespace cxs {

// Stirling number of the second kind: partitions of an n-set into k nonempty
// blocks. Exact, arbitrary precision.
BigInt stirling(int n, int k, Budget* budget = nullptr);

// Partition of {0..n-1} into nonempty blocks, each block sorted, blocks
// ordered by least element (so blocks[0] always contains 0).
struct KPartition {
  std::vector<std::vector<int>> blocks;
  // Index of the block containing element t.
  int block_of(int t) const {
    for (std::size_t j = 0; j < blocks.size(); ++j)
      for (int v : blocks[j])
        if (v == t) return static_cast<int>(j);
    return -1;
  }
};

// Streams every partition of {0..n-1} into exactly k nonempty blocks, each
// exactly once, in canonical order (lexicographic by restricted growth
// string). next() returns false once exhausted.
class KPartitionStream {
 public:
  KPartitionStream(int n, int k, Budget* budget = nullptr);
  bool next(KPartition& out);

 private:
  bool advance();
  int n_, k_;
  Budget* budget_;
  Budget owned_;
  std::vector<int> rgs_, prefix_max_;
  bool fresh_ = true, done_ = false;
};

std::vector<KPartition> all_k_partitions(int n, int k, Budget* budget = nullptr);

// k-uniform hypergraph on vertices {0..n-1}; edges are k-subsets kept sorted
// in canonical (lexicographic) order.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, int uniformity, std::vector<std::vector<int>> edges);

  int vertex_count() const { return n_; }
  int uniformity() const { return k_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  bool has_edge(const std::vector<int>& sorted_vertices) const {
    return edge_set_.count(sorted_vertices) > 0;
  }

 private:
  int n_, k_;
  std::vector<std::vector<int>> edges_;
  std::set<std::vector<int>> edge_set_;
};

// Intersection hypergraph of a family of convex sets: vertex i is family
// member i, and a k-subset is an edge exactly when the members intersect.
// Every member must be convex in the given space.
Hypergraph intersection_hypergraph(const ConvexitySpace& space,
                                   const std::vector<ElementSet>& family, int k,
                                   Budget* budget = nullptr);

// Number of m-vertex cliques (every k-subset an edge). Requires m >= k.
BigInt clique_count(const Hypergraph& h, int m, Budget* budget = nullptr);

// Largest clique size; min(n, k-1) when the hypergraph has no edge (sets of
// fewer than k vertices are vacuously cliques).
int clique_number(const Hypergraph& h, Budget* budget = nullptr);

// m pairwise-disjoint non-edges tau_1 < ... < tau_m such that every
// transversal (one vertex from each tau_i) is a clique. Lexicographically
// least such tuple, or absent.
struct MissingTuple {
  std::vector<std::vector<int>> tuples;
};
std::optional<MissingTuple> find_complete_missing_tuple(const Hypergraph& h, int m,
                                                        Budget* budget = nullptr);

}  // namespace cxs
