#include <random>
#include <vector>

#include "doctest.h"

#include "cxs/builders.hpp"
#include "cxs/transversal.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using cxs::ConvexitySpace;
using cxs::ElementSet;
using cxs::ErrorKind;
using cxs::Multiset;
using cxs::Rational;
using cxs::SetSystem;
using testutil::error_kind_of;
using testutil::es;

namespace {

ElementSet from_mask(int n, unsigned mask) {
  ElementSet s(n);
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) s.set(i);
  return s;
}

SetSystem random_system(std::mt19937& rng, int max_ground, int max_members) {
  int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(max_ground - 2));
  int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_members));
  SetSystem system{n, {}};
  for (int i = 0; i < count; ++i)
    system.members.push_back(from_mask(n, 1u + rng() % ((1u << n) - 1u)));
  return system;
}

}  // namespace

TEST_CASE("tau pins the documented transversals") {
  cxs::TauResult two = cxs::tau({3, {es(3, {0}), es(3, {2})}});
  CHECK(two.size == 2);
  CHECK(two.set == es(3, {0, 2}));

  cxs::TauResult one = cxs::tau({3, {es(3, {0, 1}), es(3, {1, 2}), es(3, {0, 1, 2})}});
  CHECK(one.size == 1);
  CHECK(one.set == es(3, {1}));

  cxs::TauResult trivial = cxs::tau({3, {}});
  CHECK(trivial.size == 0);
  CHECK(trivial.set == ElementSet(3));

  // Lexicographically least among equal-size transversals.
  CHECK(cxs::tau({3, {es(3, {0, 2}), es(3, {1, 2})}}).set == es(3, {2}));
  CHECK(cxs::tau({3, {es(3, {0, 1}), es(3, {1, 2}), es(3, {0, 2})}}).set == es(3, {0, 1}));

  CHECK(error_kind_of([] { cxs::tau({3, {es(3, {0}), es(3, {})}}); }) == ErrorKind::Infeasible);
  CHECK(error_kind_of([] { cxs::tau({3, {es(4, {0})}}); }) == ErrorKind::IndexOutOfRange);
  cxs::Budget tiny(2);
  CHECK(error_kind_of([&] {
          SetSystem big{8, {}};
          for (int i = 0; i < 8; ++i) big.members.push_back(from_mask(8, 0x55u << (i % 2)));
          cxs::tau(big, &tiny);
        }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("tau matches the exhaustive minimum hitting set") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    SetSystem system = random_system(rng, 6, 7);
    CAPTURE(trial);
    auto naive = oracle::min_hitting_set_naive(system);
    REQUIRE(naive.has_value());
    cxs::TauResult got = cxs::tau(system);
    CHECK(got.set == *naive);
    CHECK(got.size == naive->count());
  }
}

TEST_CASE("tau_star pins the documented optima") {
  cxs::FractionalTransversal triangle =
      cxs::tau_star({3, {es(3, {0, 1}), es(3, {1, 2}), es(3, {0, 2})}});
  CHECK(triangle.value == Rational(3, 2));
  CHECK(triangle.dual_value == Rational(3, 2));
  CHECK(triangle.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(triangle.dual_weights ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)});

  cxs::FractionalTransversal single = cxs::tau_star({1, {es(1, {0})}});
  CHECK(single.value == 1);
  CHECK(single.weights == std::vector<Rational>{Rational(1)});
  CHECK(single.dual_weights == std::vector<Rational>{Rational(1)});

  cxs::FractionalTransversal empty = cxs::tau_star({2, {}});
  CHECK(empty.value == 0);

  CHECK(error_kind_of([] { cxs::tau_star({3, {es(3, {})}}); }) == ErrorKind::Infeasible);
}

TEST_CASE("tau_star is feasible, self-dual, and matches vertex enumeration") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 12; ++trial) {
    SetSystem system = random_system(rng, 5, 6);
    CAPTURE(trial);
    cxs::FractionalTransversal frac = cxs::tau_star(system);
    cxs::TauResult integral = cxs::tau(system);

    CHECK(frac.value == frac.dual_value);
    CHECK(frac.value <= Rational(integral.size));
    CHECK(frac.value == oracle::covering_value_naive(system));

    Rational total = 0;
    REQUIRE(frac.weights.size() == static_cast<std::size_t>(system.ground_size));
    for (const Rational& w : frac.weights) {
      CHECK(w >= 0);
      CHECK(w <= 1);
      total += w;
    }
    CHECK(total == frac.value);
    for (const ElementSet& member : system.members) {
      Rational covered = 0;
      for (int x : member.indices()) covered += frac.weights[static_cast<std::size_t>(x)];
      CHECK(covered >= 1);
    }

    // Dual weights form a fractional matching of the same total size.
    Rational dual_total = 0;
    REQUIRE(frac.dual_weights.size() == system.members.size());
    for (const Rational& w : frac.dual_weights) {
      CHECK(w >= 0);
      dual_total += w;
    }
    CHECK(dual_total == frac.dual_value);
    for (int x = 0; x < system.ground_size; ++x) {
      Rational load = 0;
      for (std::size_t i = 0; i < system.members.size(); ++i)
        if (system.members[i].test(x)) load += frac.dual_weights[i];
      CHECK(load <= 1);
    }
  }
}

TEST_CASE("interval systems close the integrality gap") {
  std::vector<SetSystem> systems = {
      {5, {es(5, {0, 1, 2}), es(5, {2, 3, 4}), es(5, {1, 2, 3})}},
      {5, {es(5, {0, 1}), es(5, {2, 3})}},
      {6, {es(6, {0, 1}), es(6, {1, 2}), es(6, {3, 4}), es(6, {4, 5})}},
  };
  for (const SetSystem& system : systems) {
    cxs::TauResult integral = cxs::tau(system);
    cxs::FractionalTransversal frac = cxs::tau_star(system);
    CHECK(frac.value == Rational(integral.size));
  }
}

TEST_CASE("weak_net pins the documented nets") {
  ConvexitySpace i3 = cxs::make_interval_space(3);

  Multiset y;
  y.add(0, 2);
  y.add(1);
  y.add(2);
  cxs::WeakNetResult half = cxs::weak_net(i3, {y, Rational(1, 2)});
  CHECK(half.heavy.members ==
        std::vector<ElementSet>{es(3, {0}), es(3, {0, 1}), es(3, {0, 1, 2}), es(3, {1, 2})});
  CHECK(half.net == es(3, {0, 1}));

  Multiset ones;
  ones.add(1, 3);
  cxs::WeakNetResult strict = cxs::weak_net(i3, {ones, Rational(1)});
  CHECK(strict.heavy.members ==
        std::vector<ElementSet>{es(3, {0, 1}), es(3, {0, 1, 2}), es(3, {1}), es(3, {1, 2})});
  CHECK(strict.net == es(3, {1}));

  Multiset solo;
  solo.add(2);
  cxs::WeakNetResult point = cxs::weak_net(i3, {solo, Rational(1, 3)});
  CHECK(point.net == es(3, {2}));

  // An explicit family is used verbatim, in its given order.
  SetSystem custom{3, {es(3, {2}), es(3, {0, 1})}};
  Multiset both;
  both.add(0);
  both.add(2);
  cxs::WeakNetResult given = cxs::weak_net(i3, {both, Rational(1, 2)}, custom);
  CHECK(given.heavy.members == std::vector<ElementSet>{es(3, {2}), es(3, {0, 1})});
  CHECK(given.net == es(3, {0, 2}));

  CHECK(error_kind_of([&] { cxs::weak_net(i3, {Multiset(), Rational(1, 2)}); }) ==
        ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([&] { cxs::weak_net(i3, {solo, Rational(0)}); }) ==
        ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([&] { cxs::weak_net(i3, {solo, Rational(3, 2)}); }) ==
        ErrorKind::PreconditionViolation);
  Multiset out;
  out.add(5);
  CHECK(error_kind_of([&] { cxs::weak_net(i3, {out, Rational(1, 2)}); }) ==
        ErrorKind::IndexOutOfRange);
  CHECK(error_kind_of([&] {
          cxs::weak_net(i3, {solo, Rational(1, 2)}, SetSystem{4, {}});
        }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("weak nets hit every heavy member and are minimum") {
  ConvexitySpace i5 = cxs::make_interval_space(5);
  std::mt19937 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    Multiset y;
    int picks = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < picks; ++i) y.add(static_cast<int>(rng() % 5));
    int d = 2 + static_cast<int>(rng() % 3);
    Rational eps(1 + static_cast<int>(rng() % static_cast<unsigned>(d)), d);
    cxs::WeakNetResult result = cxs::weak_net(i5, {y, eps});
    CAPTURE(trial);

    Rational threshold = eps * Rational(y.cardinality());
    for (const ElementSet& s : i5.convex_sets()) {
      long long weight = 0;
      for (auto [e, c] : y.counts())
        if (s.test(e)) weight += c;
      bool heavy = Rational(weight) >= threshold;
      bool listed = false;
      for (const ElementSet& t : result.heavy.members) listed |= (t == s);
      CHECK(heavy == listed);
      if (heavy) CHECK((result.net & s).count() > 0);
    }
    auto naive = oracle::min_hitting_set_naive(result.heavy);
    REQUIRE(naive.has_value());
    CHECK(result.net == *naive);
  }
}

TEST_CASE("intersection_closure pins the documented closures") {
  cxs::IntersectionClosure two = cxs::intersection_closure({3, {es(3, {0, 1}), es(3, {1, 2})}});
  CHECK(two.closed.members == std::vector<ElementSet>{es(3, {0, 1}), es(3, {0, 1, 2}), es(3, {1}),
                                                      es(3, {1, 2})});
  CHECK(two.ground_added_by_convention);

  cxs::IntersectionClosure none = cxs::intersection_closure({2, {}});
  CHECK(none.closed.members == std::vector<ElementSet>{es(2, {0, 1})});
  CHECK(none.ground_added_by_convention);

  cxs::IntersectionClosure full = cxs::intersection_closure({2, {es(2, {0, 1})}});
  CHECK(full.closed.members == std::vector<ElementSet>{es(2, {0, 1})});
  CHECK_FALSE(full.ground_added_by_convention);

  cxs::IntersectionClosure disjoint = cxs::intersection_closure({3, {es(3, {0}), es(3, {1})}});
  CHECK(disjoint.closed.members ==
        std::vector<ElementSet>{es(3, {}), es(3, {0}), es(3, {0, 1, 2}), es(3, {1})});
  CHECK(disjoint.ground_added_by_convention);

  cxs::IntersectionClosure dup = cxs::intersection_closure({2, {es(2, {0}), es(2, {0})}});
  CHECK(dup.closed.members == std::vector<ElementSet>{es(2, {0}), es(2, {0, 1})});
}

TEST_CASE("intersection_closure is idempotent and closed under meets") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    SetSystem system = random_system(rng, 6, 6);
    cxs::IntersectionClosure closure = cxs::intersection_closure(system);
    const auto& members = closure.closed.members;

    for (const ElementSet& s : system.members)
      CHECK(std::find(members.begin(), members.end(), s) != members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        CHECK(std::find(members.begin(), members.end(), members[i] & members[j]) !=
              members.end());

    cxs::IntersectionClosure again = cxs::intersection_closure(closure.closed);
    CHECK(again.closed.members == members);
    CHECK_FALSE(again.ground_added_by_convention);
  }
}

TEST_CASE("pq_check pins the documented verdicts") {
  ConvexitySpace i7 = cxs::make_interval_space(7);
  SetSystem overlapping{7, {es(7, {0, 1, 2, 3}), es(7, {1, 2, 3, 4}), es(7, {2, 3, 4, 5})}};
  cxs::PqResult good = cxs::pq_check(i7, overlapping, 3, 3);
  CHECK(good.holds);
  CHECK(good.tau_value == 1);

  SetSystem singletons{7, {}};
  for (int x = 0; x < 7; ++x) singletons.members.push_back(es(7, {x}));
  cxs::PqResult bad = cxs::pq_check(i7, singletons, 2, 2);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.tau_value.has_value());

  ConvexitySpace i3 = cxs::make_interval_space(3);
  SetSystem three{3, {es(3, {0}), es(3, {1}), es(3, {2})}};
  cxs::PqResult loose = cxs::pq_check(i3, three, 2, 1);
  CHECK(loose.holds);
  CHECK(loose.tau_value == 3);

  CHECK(error_kind_of([&] { cxs::pq_check(i3, three, 2, 0); }) == ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([&] { cxs::pq_check(i3, three, 1, 2); }) == ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([&] { cxs::pq_check(i3, three, 4, 2); }) == ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([&] { cxs::pq_check(i7, three, 2, 1); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("pq_check agrees with a direct scan") {
  ConvexitySpace i5 = cxs::make_interval_space(5);
  const auto& convex = i5.convex_sets();
  std::mt19937 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    SetSystem system{5, {}};
    int count = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      ElementSet s = convex[static_cast<std::size_t>(rng() % convex.size())];
      if (s.empty()) s = es(5, {static_cast<int>(rng() % 5)});
      system.members.push_back(s);
    }
    int q = 2;
    int p = 2 + static_cast<int>(rng() % static_cast<unsigned>(count - 1));
    if (p < q) p = q;

    bool expected = true;
    std::vector<int> combo(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (expected) {
      int best = 0;
      for (int x = 0; x < 5; ++x) {
        int depth = 0;
        for (int idx : combo)
          if (system.members[static_cast<std::size_t>(idx)].test(x)) ++depth;
        best = std::max(best, depth);
      }
      if (best < q) expected = false;
      int pos = p - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == count - (p - pos)) --pos;
      if (pos < 0) break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < p; ++i)
        combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
    }

    cxs::PqResult got = cxs::pq_check(i5, system, p, q);
    CAPTURE(trial);
    CHECK(got.holds == expected);
    if (expected)
      CHECK(got.tau_value == cxs::tau(system).size);
    else
      CHECK_FALSE(got.tau_value.has_value());
  }
}
