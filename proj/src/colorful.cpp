#include "cxs/colorful.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "cxs/hypergraph.hpp"
#include "cxs/multiset.hpp"
#include "cxs/radon.hpp"

namespace cxs {

namespace {

constexpr int kAffordableRadonGround = 12;  // verify the claimed bound when 2^n is small

struct RainbowParameters {
  int k;  // part count, r - 1
  int n;  // witness point count, k^ceil(log2 r)
};

RainbowParameters rainbow_parameters(int r) {
  if (r < 3) throw Error(ErrorKind::PreconditionViolation, "r must be at least 3");
  int k = r - 1;
  int exponent = std::bit_width(static_cast<unsigned>(r - 1));  // ceil(log2 r)
  BigInt n = 1;
  for (int i = 0; i < exponent; ++i) n *= k;
  if (n > std::numeric_limits<int>::max())
    throw Error(ErrorKind::BudgetExceeded,
                "witness point count k^ceil(log2 r) is beyond any feasible search");
  return {k, static_cast<int>(n)};
}

void check_member(const ConvexitySpace& space, const ElementSet& s, std::size_t family_index) {
  if (s.ground_size() != space.ground_size())
    throw Error(ErrorKind::IndexOutOfRange,
                "family " + std::to_string(family_index) + " has a member over the wrong ground set");
  if (!space.is_convex(s))
    throw Error(ErrorKind::SetNotConvex,
                "family " + std::to_string(family_index) + " contains a non-convex member " +
                    s.to_string());
}

// Least (size first, then index-sequence) subfamily of at most k members with
// empty intersection, as indices into the family.
std::optional<std::vector<int>> small_empty_subfamily(const ConvexitySpace& space,
                                                      const std::vector<ElementSet>& family, int k,
                                                      Budget& b) {
  const int f = static_cast<int>(family.size());
  std::vector<int> combo;
  for (int s = 1; s <= k && s <= f; ++s) {
    combo.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
      b.charge();
      ElementSet inter = space.full();
      for (int idx : combo) inter &= family[static_cast<std::size_t>(idx)];
      if (inter.empty()) return combo;
      int pos = s - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == f - (s - pos)) --pos;
      if (pos < 0) break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < s; ++i)
        combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

BigInt colorful_m(int r, Budget* budget) {
  BudgetScope b(budget);
  RainbowParameters p = rainbow_parameters(r);
  return stirling(p.n, p.k, b.operator->());
}

RainbowWitness find_rainbow_empty(const ConvexitySpace& space,
                                  const std::vector<std::vector<ElementSet>>& families, int r,
                                  Budget* budget) {
  BudgetScope b(budget);
  RainbowParameters p = rainbow_parameters(r);
  BigInt expected = stirling(p.n, p.k, b.operator->());
  if (BigInt(families.size()) != expected)
    throw Error(ErrorKind::PreconditionViolation,
                "expected " + expected.str() + " families, got " + std::to_string(families.size()));
  const int m = static_cast<int>(families.size());

  for (std::size_t i = 0; i < families.size(); ++i) {
    ElementSet inter = space.full();
    for (const ElementSet& s : families[i]) {
      check_member(space, s, i);
      inter &= s;
    }
    if (!inter.empty())
      throw Error(ErrorKind::PreconditionViolation,
                  "family " + std::to_string(i) + " has nonempty intersection " + inter.to_string());
  }

  if (space.ground_size() <= kAffordableRadonGround) {
    std::optional<int> r2 = radon_number(space, b.operator->());
    if (!r2 || *r2 > r)
      throw Error(ErrorKind::PreconditionViolation,
                  "the space's Radon number is not bounded by " + std::to_string(r));
  }

  // One empty-intersection subfamily of size exactly k per family, padding by
  // repeating the last member.
  std::vector<std::vector<int>> chosen(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto g = small_empty_subfamily(space, families[static_cast<std::size_t>(i)], p.k, *b);
    if (!g)
      throw RadonRefutedError("family " + std::to_string(i) +
                              " has no empty-intersection subfamily of size at most " +
                              std::to_string(p.k) + ", so the Radon number exceeds " +
                              std::to_string(r));
    while (static_cast<int>(g->size()) < p.k) g->push_back(g->back());
    chosen[static_cast<std::size_t>(i)] = std::move(*g);
  }

  // Pair family i with the i-th partition of {0..n-1} into k blocks; the
  // candidate X_t takes, from each family, the member whose block holds t.
  std::vector<KPartition> parts = all_k_partitions(p.n, p.k, b.operator->());
  if (static_cast<int>(parts.size()) != m)
    throw std::logic_error("partition count does not match the family count");

  std::vector<std::vector<int>> per_index(static_cast<std::size_t>(p.n));
  std::vector<int> points(static_cast<std::size_t>(p.n), -1);
  int failing = -1;
  for (int t = 0; t < p.n; ++t) {
    ElementSet inter = space.full();
    std::vector<int> sel(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      b->charge();
      int block = parts[static_cast<std::size_t>(i)].block_of(t);
      int member = chosen[static_cast<std::size_t>(i)][static_cast<std::size_t>(block)];
      sel[static_cast<std::size_t>(i)] = member;
      inter &= families[static_cast<std::size_t>(i)][static_cast<std::size_t>(member)];
    }
    per_index[static_cast<std::size_t>(t)] = std::move(sel);
    if (inter.empty()) {
      if (failing < 0) failing = t;
    } else {
      points[static_cast<std::size_t>(t)] = inter.lowest();
    }
  }

  if (failing >= 0) {
    RainbowWitness w;
    w.failing_index = failing;
    w.selection = per_index[static_cast<std::size_t>(failing)];
    w.chosen_subfamilies = std::move(chosen);
    w.per_index_families = std::move(per_index);
    ElementSet check = space.full();
    for (int i = 0; i < m; ++i) {
      const ElementSet& s =
          families[static_cast<std::size_t>(i)][static_cast<std::size_t>(w.selection[i])];
      w.selected_sets.push_back(s);
      check &= s;
    }
    if (!check.empty()) throw std::logic_error("rainbow selection failed re-validation");
    return w;
  }

  // Every X_t intersects, so each t yields a point; under the claimed bound
  // some k-partition of those points must have hulls with a common element,
  // and for its paired family that element would lie in every chosen member —
  // impossible because the chosen subfamilies have empty intersection.
  HullCache cache(space);
  for (int j = 0; j < m; ++j) {
    ElementSet inter = space.full();
    bool ok = true;
    for (const auto& block : parts[static_cast<std::size_t>(j)].blocks) {
      b->charge();
      ElementSet support(space.ground_size());
      for (int t : block) support.set(points[static_cast<std::size_t>(t)]);
      inter &= cache.hull(support, *b);
      if (inter.empty()) {
        ok = false;
        break;
      }
    }
    if (ok)
      throw std::logic_error(
          "internal contradiction: a partition of the witness points has a common hull point "
          "although every chosen subfamily has empty intersection");
  }

  Multiset certificate;
  for (int t = 0; t < p.n; ++t) certificate.add(points[static_cast<std::size_t>(t)]);
  throw RadonRefutedError("the " + std::to_string(p.n) +
                              " witness points admit no " + std::to_string(p.k) +
                              "-partition with intersecting hulls, so the Radon number exceeds " +
                              std::to_string(r),
                          certificate.counts());
}

FHStats fh_stats(const ConvexitySpace& space, const std::vector<ElementSet>& family, int m,
                 Budget* budget) {
  BudgetScope b(budget);
  if (m < 1) throw Error(ErrorKind::PreconditionViolation, "m must be at least 1");
  const int f = static_cast<int>(family.size());
  if (f < m)
    throw Error(ErrorKind::PreconditionViolation,
                "family has " + std::to_string(f) + " members, fewer than m = " + std::to_string(m));
  for (const ElementSet& s : family)
    if (s.ground_size() != space.ground_size())
      throw Error(ErrorKind::IndexOutOfRange, "family member over the wrong ground set");

  // Count intersecting m-tuples by DFS over index combinations; a dead
  // running intersection kills the whole subtree.
  BigInt count = 0;
  auto rec = [&](auto&& self, int start, int depth, const ElementSet& inter) -> void {
    if (depth == m) {
      ++count;
      return;
    }
    for (int i = start; i <= f - (m - depth); ++i) {
      b->charge();
      ElementSet next = inter & family[static_cast<std::size_t>(i)];
      if (next.empty()) continue;
      self(self, i + 1, depth + 1, next);
    }
  };
  rec(rec, 0, 0, space.full());

  FHStats stats;
  stats.intersecting_tuples = count;
  stats.total_tuples = binomial(f, m);
  stats.alpha = Rational(count, stats.total_tuples);

  int best_depth = -1, best_x = 0;
  for (int x = 0; x < space.ground_size(); ++x) {
    int depth = 0;
    for (const ElementSet& s : family)
      if (s.test(x)) ++depth;
    if (depth > best_depth) {
      best_depth = depth;
      best_x = x;
    }
  }
  stats.beta = Rational(best_depth, f);
  stats.deepest_point = best_x;
  return stats;
}

}  // namespace cxs
