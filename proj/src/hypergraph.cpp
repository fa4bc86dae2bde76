#include "cxs/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace cxs {

BigInt stirling(int n, int k, Budget* budget) {
  BudgetScope b(budget);
  if (n < 0 || k < 0) throw Error(ErrorKind::PreconditionViolation, "stirling needs n, k >= 0");
  if (k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  // Row DP on S(i, j) = j S(i-1, j) + S(i-1, j-1).
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      b->charge();
      row[j] = BigInt(j) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

KPartitionStream::KPartitionStream(int n, int k, Budget* budget)
    : n_(n), k_(k), budget_(budget ? budget : &owned_) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolation, "partition stream needs n >= 1");
  if (k < 1 || k > n) done_ = true;
  rgs_.assign(n_, 0);
  prefix_max_.assign(n_, 0);  // prefix_max_[i] = max(rgs_[0..i-1]), with [0] = 0
}

bool KPartitionStream::advance() {
  // Lexicographic successor of the restricted growth string.
  for (int i = n_ - 1; i >= 1; --i) {
    if (rgs_[i] <= prefix_max_[i]) {
      ++rgs_[i];
      for (int j = i + 1; j < n_; ++j) {
        prefix_max_[j] = std::max(prefix_max_[j - 1], rgs_[j - 1]);
        rgs_[j] = 0;
      }
      return true;
    }
  }
  return false;
}

bool KPartitionStream::next(KPartition& out) {
  while (!done_) {
    budget_->charge();
    bool have = true;
    if (fresh_) {
      fresh_ = false;
    } else {
      have = advance();
    }
    if (!have) {
      done_ = true;
      break;
    }
    int blocks = std::max(prefix_max_[n_ - 1], rgs_[n_ - 1]) + 1;
    if (blocks != k_) continue;
    out.blocks.assign(k_, {});
    for (int i = 0; i < n_; ++i) out.blocks[rgs_[i]].push_back(i);
    return true;
  }
  return false;
}

std::vector<KPartition> all_k_partitions(int n, int k, Budget* budget) {
  KPartitionStream stream(n, k, budget);
  std::vector<KPartition> out;
  KPartition p;
  while (stream.next(p)) out.push_back(p);
  return out;
}

Hypergraph::Hypergraph(int vertex_count, int uniformity, std::vector<std::vector<int>> edges)
    : n_(vertex_count), k_(uniformity) {
  if (n_ < 0) throw Error(ErrorKind::DegenerateInput, "negative vertex count");
  if (k_ < 2) throw Error(ErrorKind::PreconditionViolation, "uniformity must be at least 2");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != k_ ||
        std::adjacent_find(e.begin(), e.end()) != e.end())
      throw Error(ErrorKind::DegenerateInput, "edge is not a set of k distinct vertices");
    if (e.front() < 0 || e.back() >= n_)
      throw Error(ErrorKind::IndexOutOfRange, "edge vertex outside the vertex range");
    edge_set_.insert(e);
  }
  edges_.assign(edge_set_.begin(), edge_set_.end());
}

Hypergraph intersection_hypergraph(const ConvexitySpace& space,
                                   const std::vector<ElementSet>& family, int k, Budget* budget) {
  BudgetScope b(budget);
  const int n = static_cast<int>(family.size());
  if (k < 2) throw Error(ErrorKind::PreconditionViolation, "uniformity must be at least 2");
  if (k > n)
    throw Error(ErrorKind::PreconditionViolation, "uniformity exceeds the family size");
  for (int i = 0; i < n; ++i)
    if (!space.is_convex(family[i]))
      throw Error(ErrorKind::SetNotConvex,
                  "family member " + std::to_string(i) + " is not convex in this space");

  std::vector<std::vector<int>> edges;
  std::vector<int> chosen;
  // Depth-first over k-subsets with the running intersection; an empty
  // running intersection kills the whole subtree.
  auto rec = [&](auto&& self, int start, const ElementSet& acc) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      edges.push_back(chosen);
      return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(chosen.size())); ++v) {
      b->charge();
      ElementSet next = acc & family[v];
      if (next.empty()) continue;
      chosen.push_back(v);
      self(self, v + 1, next);
      chosen.pop_back();
    }
  };
  rec(rec, 0, space.full());
  return Hypergraph(n, k, std::move(edges));
}

namespace {

// All (k-1)-subsets of s joined with v must be edges for s + {v} to stay a
// clique. s is sorted and v > s.back().
bool extends_clique(const Hypergraph& h, const std::vector<int>& s, int v, Budget& budget) {
  const int k = h.uniformity();
  if (static_cast<int>(s.size()) < k - 1) return true;
  std::vector<int> pick(static_cast<std::size_t>(k) - 1);
  std::vector<int> idx(static_cast<std::size_t>(k) - 1);
  const int m = static_cast<int>(s.size());
  // Enumerate (k-1)-index combinations of s.
  for (int i = 0; i < k - 1; ++i) idx[i] = i;
  while (true) {
    budget.charge();
    std::vector<int> edge;
    edge.reserve(k);
    for (int i = 0; i < k - 1; ++i) edge.push_back(s[idx[i]]);
    edge.push_back(v);
    if (!h.has_edge(edge)) return false;
    int pos = k - 2;
    while (pos >= 0 && idx[pos] == m - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k - 1; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

}  // namespace

BigInt clique_count(const Hypergraph& h, int m, Budget* budget) {
  BudgetScope b(budget);
  if (m < h.uniformity())
    throw Error(ErrorKind::PreconditionViolation, "clique size below the uniformity");
  const int n = h.vertex_count();
  BigInt count = 0;
  std::vector<int> s;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(s.size()) == m) {
      ++count;
      return;
    }
    int need = m - static_cast<int>(s.size());
    for (int v = start; v <= n - need; ++v) {
      b->charge();
      if (!extends_clique(h, s, v, *b)) continue;
      s.push_back(v);
      self(self, v + 1);
      s.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

int clique_number(const Hypergraph& h, Budget* budget) {
  BudgetScope b(budget);
  const int n = h.vertex_count();
  int best = std::min(n, h.uniformity() - 1);  // vacuous cliques
  std::vector<int> s;
  auto rec = [&](auto&& self, int start) -> void {
    best = std::max(best, static_cast<int>(s.size()));
    for (int v = start; v < n; ++v) {
      b->charge();
      if (static_cast<int>(s.size()) + (n - v) <= best) break;
      if (!extends_clique(h, s, v, *b)) continue;
      s.push_back(v);
      self(self, v + 1);
      s.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

namespace {

// Every k-subset drawn from distinct chosen non-edges (one vertex each) plus
// one vertex of the candidate must be an edge.
bool cross_cliques_ok(const Hypergraph& h, const std::vector<std::vector<int>>& chosen,
                      const std::vector<int>& candidate, Budget& budget) {
  const int k = h.uniformity();
  const int j = static_cast<int>(chosen.size());
  if (j < k - 1) return true;
  std::vector<int> idx(static_cast<std::size_t>(k) - 1);
  for (int i = 0; i < k - 1; ++i) idx[i] = i;
  while (true) {
    // For this (k-1)-subset of previously chosen tuples, try every pick.
    std::vector<int> pick(static_cast<std::size_t>(k) - 1, 0);
    while (true) {
      budget.charge();
      for (int v : candidate) {
        std::vector<int> edge;
        edge.reserve(k);
        for (int i = 0; i < k - 1; ++i) edge.push_back(chosen[idx[i]][pick[i]]);
        edge.push_back(v);
        std::sort(edge.begin(), edge.end());
        if (!h.has_edge(edge)) return false;
      }
      int p = k - 2;
      while (p >= 0 && pick[p] + 1 == static_cast<int>(chosen[idx[p]].size())) {
        pick[p] = 0;
        --p;
      }
      if (p < 0) break;
      ++pick[p];
    }
    int pos = k - 2;
    while (pos >= 0 && idx[pos] == j - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k - 1; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

}  // namespace

std::optional<MissingTuple> find_complete_missing_tuple(const Hypergraph& h, int m,
                                                        Budget* budget) {
  BudgetScope b(budget);
  if (m < 1) throw Error(ErrorKind::PreconditionViolation, "tuple length must be positive");
  const int n = h.vertex_count();
  const int k = h.uniformity();
  if (static_cast<long long>(m) * k > n) return std::nullopt;  // disjointness is impossible

  // All non-edges in canonical order.
  std::vector<std::vector<int>> missing;
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[i] = i;
  if (k <= n) {
    while (true) {
      b->charge();
      if (!h.has_edge(combo)) missing.push_back(combo);
      int pos = k - 1;
      while (pos >= 0 && combo[pos] == n - (k - pos)) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
  }

  std::vector<std::vector<int>> chosen;
  ElementSet used(n);
  std::optional<MissingTuple> found;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(chosen.size()) == m) {
      found = MissingTuple{chosen};
      return true;
    }
    for (std::size_t i = start; i < missing.size(); ++i) {
      b->charge();
      bool overlap = false;
      for (int v : missing[i])
        if (used.test(v)) { overlap = true; break; }
      if (overlap) continue;
      if (!cross_cliques_ok(h, chosen, missing[i], *b)) continue;
      chosen.push_back(missing[i]);
      for (int v : missing[i]) used.set(v);
      if (self(self, i + 1)) return true;
      for (int v : missing[i]) used.reset(v);
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace cxs
