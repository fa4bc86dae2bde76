#include "cxs/transversal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cxs/lp.hpp"

namespace cxs {

namespace {

void check_members(const SetSystem& system) {
  if (system.ground_size < 0)
    throw Error(ErrorKind::PreconditionViolation, "ground size must be nonnegative");
  for (const ElementSet& s : system.members)
    if (s.ground_size() != system.ground_size)
      throw Error(ErrorKind::IndexOutOfRange, "system member over the wrong ground set");
}

// Drops members that contain another member: hitting the inclusion-minimal
// ones hits everything.
std::vector<ElementSet> minimal_members(const std::vector<ElementSet>& members) {
  std::vector<ElementSet> sorted = members;
  std::sort(sorted.begin(), sorted.end(), [](const ElementSet& a, const ElementSet& b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<ElementSet> kept;
  for (const ElementSet& s : sorted) {
    bool dominated = false;
    for (const ElementSet& k : kept)
      if (s.contains(k)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

struct HittingSearch {
  int ground;
  const std::vector<ElementSet>& members;
  Budget& b;

  // Count of uncovered members a greedy pass can certify as pairwise
  // disjoint: each needs its own element, a valid lower bound.
  int disjoint_bound(const std::vector<int>& uncovered) const {
    ElementSet used(ground);
    int count = 0;
    for (int idx : uncovered) {
      const ElementSet& s = members[static_cast<std::size_t>(idx)];
      if ((s & used).empty()) {
        used |= s;
        ++count;
      }
    }
    return count;
  }

  std::vector<int> survivors(const std::vector<int>& uncovered, int element) const {
    std::vector<int> out;
    out.reserve(uncovered.size());
    for (int idx : uncovered)
      if (!members[static_cast<std::size_t>(idx)].test(element)) out.push_back(idx);
    return out;
  }

  // Optimal hitting-set size, branching on the elements of a smallest
  // uncovered member, highest-degree element first.
  void optimize(const std::vector<int>& uncovered, int depth, int& best) {
    b.charge();
    if (uncovered.empty()) {
      best = std::min(best, depth);
      return;
    }
    if (depth + disjoint_bound(uncovered) >= best) return;
    int pick = uncovered[0];
    for (int idx : uncovered)
      if (members[static_cast<std::size_t>(idx)].count() <
          members[static_cast<std::size_t>(pick)].count())
        pick = idx;
    std::vector<int> elems = members[static_cast<std::size_t>(pick)].indices();
    std::vector<int> degree(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (int idx : uncovered)
        if (members[static_cast<std::size_t>(idx)].test(elems[i])) ++degree[i];
    std::vector<std::size_t> order(elems.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      return degree[l] != degree[r] ? degree[l] > degree[r] : elems[l] < elems[r];
    });
    for (std::size_t oi : order) optimize(survivors(uncovered, elems[oi]), depth + 1, best);
  }

  // First size-`target` hitting set in increasing-sequence order; elements
  // are committed in ascending order, so the first hit is the least one.
  bool reconstruct(const std::vector<int>& uncovered, int next, int remaining,
                   std::vector<int>& chosen) {
    b.charge();
    if (uncovered.empty()) return true;
    if (remaining == 0 || disjoint_bound(uncovered) > remaining) return false;
    for (int x = next; x < ground; ++x) {
      bool useful = false;
      for (int idx : uncovered)
        if (members[static_cast<std::size_t>(idx)].test(x)) {
          useful = true;
          break;
        }
      if (!useful) continue;
      chosen.push_back(x);
      if (reconstruct(survivors(uncovered, x), x + 1, remaining - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

TauResult tau(const SetSystem& system, Budget* budget) {
  BudgetScope bs(budget);
  Budget& b = *bs;
  check_members(system);
  for (const ElementSet& s : system.members)
    if (s.empty()) throw Error(ErrorKind::Infeasible, "an empty member cannot be hit");
  if (system.members.empty()) return {0, ElementSet(system.ground_size)};

  std::vector<ElementSet> reduced = minimal_members(system.members);
  HittingSearch search{system.ground_size, reduced, b};
  std::vector<int> all(reduced.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

  // Greedy cover for the initial upper bound.
  int upper = 0;
  {
    std::vector<int> uncovered = all;
    while (!uncovered.empty()) {
      b.charge();
      int best_x = -1, best_deg = 0;
      for (int x = 0; x < system.ground_size; ++x) {
        int deg = 0;
        for (int idx : uncovered)
          if (reduced[static_cast<std::size_t>(idx)].test(x)) ++deg;
        if (deg > best_deg) {
          best_deg = deg;
          best_x = x;
        }
      }
      uncovered = search.survivors(uncovered, best_x);
      ++upper;
    }
  }

  // Rounded fractional optimum as the root lower bound.
  int lower = 1;
  {
    LpProblem p;
    p.var_count = system.ground_size;
    p.sense = LpSense::Minimize;
    p.objective.assign(static_cast<std::size_t>(system.ground_size), Rational(1));
    for (const ElementSet& s : reduced) {
      LpConstraint c;
      c.coeffs.assign(static_cast<std::size_t>(system.ground_size), Rational(0));
      for (int x : s.indices()) c.coeffs[static_cast<std::size_t>(x)] = 1;
      c.rel = LpRel::Ge;
      c.rhs = 1;
      p.constraints.push_back(std::move(c));
    }
    LpSolution sol = solve_lp(p, &b);
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error("covering relaxation must be solvable");
    lower = static_cast<int>(ceil_rational(sol.value));
  }

  int best = upper;
  if (lower < best) search.optimize(all, 0, best);

  std::vector<int> chosen;
  if (!search.reconstruct(all, 0, best, chosen))
    throw std::logic_error("no hitting set at the proven optimal size");
  ElementSet result = ElementSet::from_indices(system.ground_size, chosen);
  for (const ElementSet& s : system.members)
    if ((s & result).empty()) throw std::logic_error("transversal failed re-validation");
  return {best, result};
}

FractionalTransversal tau_star(const SetSystem& system, Budget* budget) {
  BudgetScope bs(budget);
  Budget& b = *bs;
  check_members(system);
  for (const ElementSet& s : system.members)
    if (s.empty()) throw Error(ErrorKind::Infeasible, "an empty member cannot be covered");
  const int n = system.ground_size;
  const int f = static_cast<int>(system.members.size());
  if (f == 0)
    return {Rational(0), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), {}, Rational(0)};

  LpProblem primal;
  primal.var_count = n;
  primal.sense = LpSense::Minimize;
  primal.objective.assign(static_cast<std::size_t>(n), Rational(1));
  for (const ElementSet& s : system.members) {
    LpConstraint c;
    c.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
    for (int x : s.indices()) c.coeffs[static_cast<std::size_t>(x)] = 1;
    c.rel = LpRel::Ge;
    c.rhs = 1;
    primal.constraints.push_back(std::move(c));
  }
  for (int x = 0; x < n; ++x) {
    LpConstraint c;
    c.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
    c.coeffs[static_cast<std::size_t>(x)] = 1;
    c.rel = LpRel::Le;
    c.rhs = 1;
    primal.constraints.push_back(std::move(c));
  }
  LpSolution psol = solve_lp(primal, &b);
  if (psol.status != LpStatus::Optimal)
    throw std::logic_error("fractional transversal program must be solvable");

  LpProblem dual;
  dual.var_count = f;
  dual.sense = LpSense::Maximize;
  dual.objective.assign(static_cast<std::size_t>(f), Rational(1));
  for (int x = 0; x < n; ++x) {
    LpConstraint c;
    c.coeffs.assign(static_cast<std::size_t>(f), Rational(0));
    for (int i = 0; i < f; ++i)
      if (system.members[static_cast<std::size_t>(i)].test(x))
        c.coeffs[static_cast<std::size_t>(i)] = 1;
    c.rel = LpRel::Le;
    c.rhs = 1;
    dual.constraints.push_back(std::move(c));
  }
  LpSolution dsol = solve_lp(dual, &b);
  if (dsol.status != LpStatus::Optimal)
    throw std::logic_error("fractional matching program must be solvable");

  // Substitution checks, then exact strong duality.
  Rational pvalue = 0;
  for (const Rational& w : psol.x) {
    if (w < 0 || w > 1) throw std::logic_error("fractional transversal weight outside [0,1]");
    pvalue += w;
  }
  for (const ElementSet& s : system.members) {
    Rational sum = 0;
    for (int x : s.indices()) sum += psol.x[static_cast<std::size_t>(x)];
    if (sum < 1) throw std::logic_error("fractional transversal misses a member");
  }
  Rational dvalue = 0;
  for (const Rational& y : dsol.x) {
    if (y < 0) throw std::logic_error("negative fractional matching weight");
    dvalue += y;
  }
  for (int x = 0; x < n; ++x) {
    Rational sum = 0;
    for (int i = 0; i < f; ++i)
      if (system.members[static_cast<std::size_t>(i)].test(x)) sum += dsol.x[static_cast<std::size_t>(i)];
    if (sum > 1) throw std::logic_error("fractional matching overloads an element");
  }
  if (pvalue != psol.value || dvalue != dsol.value || pvalue != dvalue)
    throw std::logic_error("strong duality failed exact verification");

  return {psol.value, psol.x, dsol.x, dsol.value};
}

WeakNetResult weak_net(const ConvexitySpace& space, const NetRequest& request,
                       const std::optional<SetSystem>& family, Budget* budget) {
  BudgetScope bs(budget);
  Budget& b = *bs;
  if (request.y.empty())
    throw Error(ErrorKind::PreconditionViolation, "Y must be nonempty");
  if (request.epsilon <= 0 || request.epsilon > 1)
    throw Error(ErrorKind::PreconditionViolation, "epsilon must lie in (0, 1]");
  const int n = space.ground_size();
  if (request.y.max_element() >= n)
    throw Error(ErrorKind::IndexOutOfRange, "multiset element outside the ground set");

  SetSystem source;
  if (family) {
    if (family->ground_size != n)
      throw Error(ErrorKind::PreconditionViolation, "family ground size differs from the space");
    check_members(*family);
    source = *family;
  } else {
    source = {n, space.convex_sets()};
  }

  BigInt cardinality = request.y.cardinality();
  BigInt p = numerator(request.epsilon), q = denominator(request.epsilon);
  SetSystem heavy{n, {}};
  for (const ElementSet& s : source.members) {
    b.charge();
    BigInt weight = 0;
    for (auto [e, c] : request.y.counts())
      if (s.test(e)) weight += c;
    if (q * weight >= p * cardinality) heavy.members.push_back(s);
  }
  ElementSet net = tau(heavy, &b).set;
  return {net, heavy};
}

IntersectionClosure intersection_closure(const SetSystem& system, Budget* budget) {
  BudgetScope bs(budget);
  Budget& b = *bs;
  check_members(system);
  const int n = system.ground_size;
  ElementSet full = ElementSet::full(n);

  std::set<ElementSet> closed;
  std::vector<ElementSet> items;
  for (const ElementSet& s : system.members)
    if (closed.insert(s).second) items.push_back(s);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      b.charge();
      ElementSet inter = items[i] & items[j];
      if (closed.insert(inter).second) items.push_back(inter);
    }
  }

  bool convention = closed.find(full) == closed.end();
  closed.insert(full);
  return {{n, std::vector<ElementSet>(closed.begin(), closed.end())}, convention};
}

PqResult pq_check(const ConvexitySpace& space, const SetSystem& system, int p, int q,
                  Budget* budget) {
  BudgetScope bs(budget);
  Budget& b = *bs;
  if (q < 1 || p < q)
    throw Error(ErrorKind::PreconditionViolation, "require p >= q >= 1");
  const int f = static_cast<int>(system.members.size());
  if (f < p)
    throw Error(ErrorKind::PreconditionViolation, "family has fewer than p members");
  if (system.ground_size != space.ground_size())
    throw Error(ErrorKind::PreconditionViolation, "system ground size differs from the space");
  check_members(system);

  // Among any p members, q share a point exactly when some element lies in at
  // least q of them.
  std::vector<int> combo(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) combo[static_cast<std::size_t>(i)] = i;
  std::vector<int> depth(static_cast<std::size_t>(std::max(system.ground_size, 1)), 0);
  while (true) {
    b.charge();
    std::fill(depth.begin(), depth.end(), 0);
    int best = 0;
    for (int idx : combo)
      for (int x : system.members[static_cast<std::size_t>(idx)].indices())
        best = std::max(best, ++depth[static_cast<std::size_t>(x)]);
    if (best < q) return {false, std::nullopt};
    int pos = p - 1;
    while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == f - (p - pos)) --pos;
    if (pos < 0) break;
    ++combo[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < p; ++i)
      combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
  }
  return {true, tau(system, &b).size};
}

}  // namespace cxs
