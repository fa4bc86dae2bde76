#include "cxs/radon.hpp"

#include <algorithm>
#include <bit>

#include "cxs/bigmath.hpp"
#include "cxs/hypergraph.hpp"

namespace cxs {

namespace {

constexpr int kDenseGroundLimit = 16;  // mask-indexed hull tables up to here

// Decides "can y be split into k parts all of whose hulls contain x" via
// packing: it suffices to find k disjoint sub-multisets whose hulls contain
// x, because leftover elements only grow hulls. Minimal such sub-multisets
// use one copy per element of an inclusion-minimal support set.
class PartitionTester {
 public:
  PartitionTester(const ConvexitySpace& space, Budget& budget)
      : space_(space), budget_(budget), cache_(space), dense_(space.ground_size() <= kDenseGroundLimit) {
    if (dense_) minimal_supports_.resize(static_cast<std::size_t>(space.ground_size()));
  }

  bool admits(const Multiset& y, int k) {
    if (y.cardinality() < k) return false;
    if (y.max_multiplicity() >= k) return true;  // k copies of one element, one per part
    if (y.max_element() >= space_.ground_size())
      throw Error(ErrorKind::IndexOutOfRange, "multiset element outside the ground set");
    if (!dense_) return admits_by_enumeration(y, k);
    std::uint32_t support = mask_of(y.support(space_.ground_size()));
    for (int x = 0; x < space_.ground_size(); ++x) {
      if (packs_at_least(x, y, support, k)) return true;
    }
    return false;
  }

 private:
  static std::uint32_t mask_of(const ElementSet& s) {
    return static_cast<std::uint32_t>(s.low_word());
  }

  const std::vector<std::uint32_t>& minimal_supports(int x) {
    auto& entry = minimal_supports_[static_cast<std::size_t>(x)];
    if (!entry.computed) {
      const int n = space_.ground_size();
      std::vector<std::uint32_t> masks;
      masks.reserve(std::size_t{1} << n);
      for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) masks.push_back(m);
      std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
      });
      for (std::uint32_t m : masks) {
        budget_.charge();
        bool dominated = false;
        for (std::uint32_t kept : entry.masks)
          if ((kept & m) == kept) { dominated = true; break; }
        if (dominated) continue;
        if (cache_.hull_mask(m, budget_).test(x)) entry.masks.push_back(m);
      }
      entry.computed = true;
    }
    return entry.masks;
  }

  bool packs_at_least(int x, const Multiset& y, std::uint32_t support, int k) {
    const auto& all = minimal_supports(x);
    std::vector<std::uint32_t> usable;
    for (std::uint32_t m : all)
      if ((m & support) == m) usable.push_back(m);
    if (usable.empty()) return false;
    std::vector<int> counts(static_cast<std::size_t>(space_.ground_size()), 0);
    for (auto [e, c] : y.counts()) counts[static_cast<std::size_t>(e)] = c;
    long long remaining = y.cardinality();
    return pack_rec(usable, counts, remaining, 0, k);
  }

  bool pack_rec(const std::vector<std::uint32_t>& usable, std::vector<int>& counts,
                long long remaining, std::size_t from, int need) {
    if (need == 0) return true;
    if (remaining < need) return false;
    for (std::size_t i = from; i < usable.size(); ++i) {
      budget_.charge();
      std::uint32_t m = usable[i];
      bool fits = true;
      for (std::uint32_t t = m; t; t &= t - 1) {
        if (counts[static_cast<std::size_t>(std::countr_zero(t))] == 0) { fits = false; break; }
      }
      if (!fits) continue;
      int size = std::popcount(m);
      for (std::uint32_t t = m; t; t &= t - 1) --counts[static_cast<std::size_t>(std::countr_zero(t))];
      if (pack_rec(usable, counts, remaining - size, i, need - 1)) {
        for (std::uint32_t t = m; t; t &= t - 1) ++counts[static_cast<std::size_t>(std::countr_zero(t))];
        return true;
      }
      for (std::uint32_t t = m; t; t &= t - 1) ++counts[static_cast<std::size_t>(std::countr_zero(t))];
    }
    return false;
  }

  // Wide-ground fallback: enumerate partitions directly.
  bool admits_by_enumeration(const Multiset& y, int k) {
    std::vector<int> elems = y.expand();
    const int n = static_cast<int>(elems.size());
    KPartitionStream stream(n, k, &budget_);
    KPartition p;
    while (stream.next(p)) {
      ElementSet acc = space_.full();
      bool ok = true;
      for (const auto& block : p.blocks) {
        ElementSet part(space_.ground_size());
        for (int pos : block) part.set(elems[static_cast<std::size_t>(pos)]);
        acc &= cache_.hull(part, budget_);
        if (acc.empty()) { ok = false; break; }
      }
      if (ok) return true;
    }
    return false;
  }

  struct SupportEntry {
    bool computed = false;
    std::vector<std::uint32_t> masks;
  };

  const ConvexitySpace& space_;
  Budget& budget_;
  HullCache cache_;
  bool dense_;
  std::vector<SupportEntry> minimal_supports_;
};

// Enumerates multisets of a given cardinality over {0..n-1} as nondecreasing
// sequences in lexicographic order.
class MultisetStream {
 public:
  MultisetStream(int n, int cardinality) : n_(n), seq_(static_cast<std::size_t>(cardinality), 0) {}

  bool next(Multiset& out) {
    if (done_) return false;
    if (!fresh_) {
      int m = static_cast<int>(seq_.size());
      int pos = m - 1;
      while (pos >= 0 && seq_[static_cast<std::size_t>(pos)] == n_ - 1) --pos;
      if (pos < 0) { done_ = true; return false; }
      int v = seq_[static_cast<std::size_t>(pos)] + 1;
      for (int i = pos; i < m; ++i) seq_[static_cast<std::size_t>(i)] = v;
    }
    fresh_ = false;
    out = Multiset::from_elements(seq_);
    return true;
  }

 private:
  int n_;
  std::vector<int> seq_;
  bool fresh_ = true, done_ = false;
};

void check_k(int k) {
  if (k < 2) throw Error(ErrorKind::PreconditionViolation, "k must be at least 2");
}

}  // namespace

bool admits_k_partition(const ConvexitySpace& space, const Multiset& y, int k, Budget* budget) {
  BudgetScope b(budget);
  check_k(k);
  if (y.empty()) throw Error(ErrorKind::PreconditionViolation, "multiset must be nonempty");
  PartitionTester tester(space, *b);
  return tester.admits(y, k);
}

std::optional<TverbergWitness> find_k_partition(const ConvexitySpace& space, const Multiset& y,
                                                int k, Budget* budget) {
  BudgetScope b(budget);
  check_k(k);
  if (y.empty()) throw Error(ErrorKind::PreconditionViolation, "multiset must be nonempty");
  if (y.max_element() >= space.ground_size())
    throw Error(ErrorKind::IndexOutOfRange, "multiset element outside the ground set");

  std::vector<int> elems = y.expand();
  const int n = static_cast<int>(elems.size());
  if (n < k) return std::nullopt;

  HullCache cache(space);
  // Scan every distinct partition; keep the least valid witness in canonical
  // order (parts sorted, compared as expanded sequences). Duplicate
  // position-partitions collapse to the same canonical witness, so they never
  // change the minimum.
  std::optional<std::vector<std::vector<int>>> best;
  int best_common = -1;
  KPartitionStream stream(n, k, b.operator->());
  KPartition p;
  while (stream.next(p)) {
    ElementSet acc = space.full();
    std::vector<std::vector<int>> parts;
    parts.reserve(static_cast<std::size_t>(k));
    bool ok = true;
    for (const auto& block : p.blocks) {
      std::vector<int> part;
      part.reserve(block.size());
      for (int pos : block) part.push_back(elems[static_cast<std::size_t>(pos)]);
      ElementSet support(space.ground_size());
      for (int e : part) support.set(e);
      acc &= cache.hull(support, *b);
      if (acc.empty()) { ok = false; break; }
      parts.push_back(std::move(part));
    }
    if (!ok) continue;
    std::sort(parts.begin(), parts.end());
    if (!best || parts < *best) {
      best = parts;
      best_common = acc.lowest();
    }
  }
  if (!best) return std::nullopt;

  TverbergWitness w;
  for (const auto& part : *best) w.parts.push_back(Multiset::from_elements(part));
  w.common_point = best_common;

  // Re-validate: parts must partition y and every hull must contain the point.
  Multiset rebuilt;
  for (const auto& part : w.parts) {
    if (part.empty()) throw Error(ErrorKind::PreconditionViolation, "internal: empty witness part");
    for (auto [e, c] : part.counts()) rebuilt.add(e, c);
    if (!space.hull(part.support(space.ground_size())).test(w.common_point))
      throw Error(ErrorKind::PreconditionViolation, "internal: witness hull misses the common point");
  }
  if (!(rebuilt == y))
    throw Error(ErrorKind::PreconditionViolation, "internal: witness parts do not partition the multiset");
  return w;
}

std::optional<int> radon_number(const ConvexitySpace& space, Budget* budget) {
  BudgetScope b(budget);
  const int n = space.ground_size();
  PartitionTester tester(space, *b);
  std::vector<int> combo;
  for (int m = 2; m <= n; ++m) {
    combo.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) combo[static_cast<std::size_t>(i)] = i;
    bool all_split = true;
    while (true) {
      b->charge();
      if (!tester.admits(Multiset::from_elements(combo), 2)) { all_split = false; break; }
      int pos = m - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - (m - pos)) --pos;
      if (pos < 0) break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < m; ++i)
        combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
    }
    if (all_split) return m;
  }
  return std::nullopt;
}

std::optional<int> partition_number(const ConvexitySpace& space, int k, Budget* budget) {
  BudgetScope b(budget);
  check_k(k);
  const int n = space.ground_size();
  if (k > n) return n + 1;  // convention for k beyond the ground size
  const int ceiling = (k - 1) * n + 1;
  PartitionTester tester(space, *b);
  for (int m = k; m < ceiling; ++m) {
    MultisetStream stream(n, m);
    Multiset y;
    bool all_split = true;
    while (stream.next(y)) {
      b->charge();
      if (!tester.admits(y, k)) { all_split = false; break; }
    }
    if (all_split) return m;
  }
  // At the ceiling some element has multiplicity >= k in every multiset, so
  // every multiset splits; no enumeration needed.
  return ceiling;
}

HellyResult helly_number(const ConvexitySpace& space, Budget* budget) {
  BudgetScope b(budget);
  const int n = space.ground_size();
  if (n > 30)
    throw Error(ErrorKind::BudgetExceeded,
                "helly search over witness subsets is limited to 30 ground elements");
  HullCache cache(space);

  // A minimal empty-intersection subfamily of size s exists exactly when some
  // s-subset W of ground points satisfies  ∩_{x in W} hull(W - x) = ∅ ; the
  // subfamily is then {hull(W - x)} and each x witnesses minimality.
  int best = 0;
  std::vector<std::uint64_t> maximizers;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
    b->charge();
    int size = std::popcount(w);
    if (size < best) continue;
    ElementSet inter = space.full();
    bool empty = false;
    for (std::uint64_t t = w; t; t &= t - 1) {
      int x = std::countr_zero(t);
      ElementSet rest(n);
      for (std::uint64_t u = w; u; u &= u - 1) {
        int e = std::countr_zero(u);
        if (e != x) rest.set(e);
      }
      inter &= cache.hull(rest, *b);
      if (inter.empty()) { empty = true; break; }
    }
    // The break above only means the running intersection died early; finish
    // the remaining hulls lazily only when recording a certificate.
    if (!empty && !inter.empty()) continue;
    if (size > best) {
      best = size;
      maximizers.clear();
    }
    if (size == best) maximizers.push_back(w);
  }

  if (best == 0)
    throw Error(ErrorKind::PreconditionViolation, "internal: no empty-intersection subfamily found");

  std::optional<std::vector<ElementSet>> cert;
  for (std::uint64_t w : maximizers) {
    std::vector<ElementSet> family;
    for (std::uint64_t t = w; t; t &= t - 1) {
      int x = std::countr_zero(t);
      ElementSet rest(n);
      for (std::uint64_t u = w; u; u &= u - 1) {
        int e = std::countr_zero(u);
        if (e != x) rest.set(e);
      }
      family.push_back(cache.hull(rest, *b));
    }
    std::sort(family.begin(), family.end());
    if (!cert || std::lexicographical_compare(family.begin(), family.end(), cert->begin(), cert->end()))
      cert = family;
  }

  // Re-validate minimality of the emitted certificate.
  ElementSet total = space.full();
  for (const ElementSet& s : *cert) total &= s;
  if (!total.empty())
    throw Error(ErrorKind::PreconditionViolation, "internal: certificate intersection not empty");
  for (std::size_t skip = 0; skip < cert->size(); ++skip) {
    ElementSet rest = space.full();
    for (std::size_t i = 0; i < cert->size(); ++i)
      if (i != skip) rest &= (*cert)[i];
    if (rest.empty())
      throw Error(ErrorKind::PreconditionViolation, "internal: certificate not inclusion-minimal");
  }

  return HellyResult{best, HellyCertificate{*cert}};
}

BoundsReport verify_bounds(const ConvexitySpace& space, int k_max, Budget* budget) {
  BudgetScope b(budget);
  check_k(k_max);
  BoundsReport report;
  report.r2 = radon_number(space, b.operator->());
  for (int k = 2; k <= k_max; ++k) {
    try {
      report.rk[k] = partition_number(space, k, b.operator->());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      report.rk[k] = std::nullopt;
    }
  }
  HellyResult helly = helly_number(space, b.operator->());
  report.helly = helly.number;
  report.helly_certificate = helly.certificate;
  report.degenerate = report.r2.has_value() && *report.r2 == 2;

  const int n = space.ground_size();
  using Status = CheckResult::Status;

  if (!report.r2) {
    report.levi = {Status::NotApplicable, "no Radon number exists"};
    report.jamison = {Status::NotApplicable, "no Radon number exists"};
  } else {
    report.levi = report.helly < *report.r2
                      ? CheckResult{Status::Pass, "h=" + std::to_string(report.helly) +
                                                      " < r2=" + std::to_string(*report.r2)}
                      : CheckResult{Status::Fail, "h=" + std::to_string(report.helly) +
                                                      " >= r2=" + std::to_string(*report.r2)};
    report.jamison = {Status::Pass, "holds for all computed k"};
    for (auto& [k, rk] : report.rk) {
      if (!rk) continue;
      int exponent = std::bit_width(static_cast<unsigned>(k - 1));  // ceil(log2 k)
      BigInt bound = 1;
      for (int i = 0; i < exponent; ++i) bound *= *report.r2;
      if (BigInt(*rk) > bound) {
        report.jamison = {Status::Fail,
                          "r_" + std::to_string(k) + "=" + std::to_string(*rk) + " exceeds r2^" +
                              std::to_string(exponent) + "=" + bound.str()};
        break;
      }
    }
  }

  report.pigeonhole = {Status::Pass, "holds for all computed k"};
  for (auto& [k, rk] : report.rk) {
    if (!rk) continue;
    long long cap = static_cast<long long>(k - 1) * n + 1;
    if (*rk > cap) {
      report.pigeonhole = {Status::Fail, "r_" + std::to_string(k) + " exceeds (k-1)|X|+1"};
      break;
    }
  }

  bool any_pair = false, mono_ok = true;
  std::string mono_detail;
  for (int k = 2; k < k_max; ++k) {
    if (k + 1 > n) break;  // values past |X| come from the convention, not search
    auto a = report.rk.find(k), c = report.rk.find(k + 1);
    if (a == report.rk.end() || c == report.rk.end() || !a->second || !c->second) continue;
    any_pair = true;
    if (*a->second > *c->second) {
      mono_ok = false;
      mono_detail = "r_" + std::to_string(k) + " > r_" + std::to_string(k + 1);
      break;
    }
  }
  if (!any_pair)
    report.monotone = {Status::NotApplicable, "no adjacent pair of searched values"};
  else
    report.monotone = mono_ok ? CheckResult{Status::Pass, "nondecreasing over searched k"}
                              : CheckResult{Status::Fail, mono_detail};
  return report;
}

}  // namespace cxs
