#include "cxs/space.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cxs {

namespace {

void check_ground(int n) {
  if (n < 1) throw Error(ErrorKind::DegenerateInput, "ground size must be positive");
}

void check_member_ground(int n, const ElementSet& s) {
  if (s.ground_size() != n)
    throw Error(ErrorKind::IndexOutOfRange, "set built over a different ground size");
}

}  // namespace

bool ConvexitySpace::is_convex(const ElementSet& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

ElementSet ConvexitySpace::hull(const ElementSet& y) const {
  check_member_ground(n_, y);
  ElementSet acc = full();
  for (const ElementSet& c : sets_)
    if (c.contains(y)) acc &= c;
  return acc;
}

ConvexitySpace validate_space(int ground_size, std::vector<ElementSet> sets, Budget* budget) {
  BudgetScope b(budget);
  check_ground(ground_size);
  for (const ElementSet& s : sets) check_member_ground(ground_size, s);

  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  if (sets.empty() || !sets.front().empty())
    throw Error(ErrorKind::MissingEmptyOrFull, "family does not contain the empty set");
  if (!std::binary_search(sets.begin(), sets.end(), ElementSet::full(ground_size)))
    throw Error(ErrorKind::MissingEmptyOrFull, "family does not contain the full ground set");

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      b->charge();
      ElementSet inter = sets[i] & sets[j];
      if (!std::binary_search(sets.begin(), sets.end(), inter))
        throw NotIntersectionClosedError(
            "intersection of " + sets[i].to_string() + " and " + sets[j].to_string() +
                " is missing from the family",
            sets[i].indices(), sets[j].indices());
    }
  }
  return ConvexitySpace(ground_size, std::move(sets));
}

ConvexitySpace detail_space_from_closed(int ground_size, std::vector<ElementSet> sets) {
  check_ground(ground_size);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return ConvexitySpace(ground_size, std::move(sets));
}

ConvexitySpace closure_from_generators(int ground_size, const std::vector<ElementSet>& generators,
                                       std::size_t cap, Budget* budget) {
  BudgetScope b(budget);
  check_ground(ground_size);

  std::set<ElementSet> seen;
  std::vector<ElementSet> items;
  auto push = [&](const ElementSet& s) {
    if (seen.insert(s).second) {
      items.push_back(s);
      if (items.size() > cap)
        throw Error(ErrorKind::BudgetExceeded,
                    "closure exceeds the size cap of " + std::to_string(cap) + " sets");
    }
  };

  push(ElementSet(ground_size));
  push(ElementSet::full(ground_size));
  for (const ElementSet& g : generators) {
    check_member_ground(ground_size, g);
    push(g);
  }

  // Fixpoint: every new member is intersected with everything already kept.
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      b->charge();
      push(items[i] & items[j]);
    }
  }

  std::vector<ElementSet> sorted(seen.begin(), seen.end());
  return ConvexitySpace(ground_size, std::move(sorted));
}

HullCache::HullCache(const ConvexitySpace& space)
    : space_(space), dense_(space.ground_size() <= 16) {
  if (dense_) {
    table_.resize(std::size_t{1} << space.ground_size());
    have_.resize(table_.size(), false);
  }
}

const ElementSet& HullCache::hull(const ElementSet& y, Budget& budget) {
  if (dense_) return hull_mask(static_cast<std::uint32_t>(y.low_word()), budget);
  if (space_.ground_size() <= 64) {
    auto it = map_.find(y.low_word());
    if (it != map_.end()) return it->second;
    budget.charge();
    return map_.emplace(y.low_word(), space_.hull(y)).first->second;
  }
  std::string key;
  for (int e : y.indices()) key += std::to_string(e) + ",";
  auto it = wide_map_.find(key);
  if (it != wide_map_.end()) return it->second;
  budget.charge();
  return wide_map_.emplace(std::move(key), space_.hull(y)).first->second;
}

const ElementSet& HullCache::hull_mask(std::uint32_t mask, Budget& budget) {
  if (!have_[mask]) {
    budget.charge();
    ElementSet y(space_.ground_size());
    for (int i = 0; i < space_.ground_size(); ++i)
      if ((mask >> i) & 1u) y.set(i);
    table_[mask] = space_.hull(y);
    have_[mask] = true;
  }
  return table_[mask];
}

}  // namespace cxs
