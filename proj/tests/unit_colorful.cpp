#include <map>
#include <random>
#include <vector>

#include "doctest.h"

#include "cxs/builders.hpp"
#include "cxs/colorful.hpp"
#include "cxs/radon.hpp"
#include "support/util.hpp"

using cxs::BigInt;
using cxs::ConvexitySpace;
using cxs::ElementSet;
using cxs::ErrorKind;
using cxs::RainbowWitness;
using cxs::Rational;
using testutil::error_kind_of;
using testutil::es;

namespace {

std::vector<std::vector<ElementSet>> repeated_family(const std::vector<ElementSet>& f, int m) {
  return std::vector<std::vector<ElementSet>>(static_cast<std::size_t>(m), f);
}

}  // namespace

TEST_CASE("colorful_m pins the documented family counts") {
  CHECK(cxs::colorful_m(3) == 7);
  CHECK(cxs::colorful_m(4) == 3025);
  BigInt prev = cxs::colorful_m(3);
  for (int r = 4; r <= 6; ++r) {
    BigInt next = cxs::colorful_m(r);
    CHECK(next > prev);
    prev = next;
  }
  CHECK(error_kind_of([] { cxs::colorful_m(2); }) == ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([] { cxs::colorful_m(0); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("rainbow search returns the documented witness on intervals") {
  ConvexitySpace i3 = cxs::make_interval_space(3);
  std::vector<ElementSet> pair = {es(3, {0}), es(3, {2})};
  RainbowWitness w = cxs::find_rainbow_empty(i3, repeated_family(pair, 7), 3);

  CHECK(w.failing_index == 1);
  CHECK(w.selection == std::vector<int>{0, 0, 0, 1, 1, 1, 1});
  CHECK(w.selected_sets ==
        std::vector<ElementSet>{es(3, {0}), es(3, {0}), es(3, {0}), es(3, {2}), es(3, {2}),
                                es(3, {2}), es(3, {2})});
  REQUIRE(w.chosen_subfamilies.size() == 7);
  for (const auto& g : w.chosen_subfamilies) CHECK(g == std::vector<int>{0, 1});
  REQUIRE(w.per_index_families.size() == 4);
  CHECK(w.per_index_families[1] == w.selection);
  // Index 0 keeps every first member, so its candidate intersection is {0}.
  CHECK(w.per_index_families[0] == std::vector<int>(7, 0));
}

TEST_CASE("rainbow witnesses re-validate for varied families") {
  ConvexitySpace i3 = cxs::make_interval_space(3);
  std::vector<std::vector<ElementSet>> candidates = {
      {es(3, {0}), es(3, {1}), es(3, {2})},
      {es(3, {0}), es(3, {2})},
      {es(3, {0, 1}), es(3, {2})},
      {es(3, {0}), es(3, {1, 2})},
  };
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<ElementSet>> families;
    for (int i = 0; i < 7; ++i)
      families.push_back(candidates[static_cast<std::size_t>(rng() % candidates.size())]);
    RainbowWitness w = cxs::find_rainbow_empty(i3, families, 3);
    REQUIRE(w.selection.size() == 7);
    ElementSet inter = i3.full();
    for (int i = 0; i < 7; ++i) {
      REQUIRE(w.selection[static_cast<std::size_t>(i)] >= 0);
      REQUIRE(static_cast<std::size_t>(w.selection[static_cast<std::size_t>(i)]) <
              families[static_cast<std::size_t>(i)].size());
      const ElementSet& s = families[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(w.selection[static_cast<std::size_t>(i)])];
      CHECK(s == w.selected_sets[static_cast<std::size_t>(i)]);
      inter &= s;
    }
    CHECK(inter.empty());
    CHECK(w.failing_index >= 0);
    CHECK(w.per_index_families[static_cast<std::size_t>(w.failing_index)] == w.selection);
  }
}

TEST_CASE("rainbow search rejects malformed inputs") {
  ConvexitySpace i3 = cxs::make_interval_space(3);
  std::vector<ElementSet> pair = {es(3, {0}), es(3, {2})};

  CHECK(error_kind_of([&] { cxs::find_rainbow_empty(i3, repeated_family(pair, 7), 2); }) ==
        ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([&] { cxs::find_rainbow_empty(i3, repeated_family(pair, 6), 3); }) ==
        ErrorKind::PreconditionViolation);

  // One family with a common point violates the hypothesis.
  auto families = repeated_family(pair, 7);
  families[2] = {es(3, {0, 1}), es(3, {1, 2})};
  CHECK(error_kind_of([&] { cxs::find_rainbow_empty(i3, families, 3); }) ==
        ErrorKind::PreconditionViolation);

  // Non-convex member.
  auto bad_member = repeated_family(pair, 7);
  bad_member[4] = {es(3, {0, 2}), es(3, {1})};
  CHECK(error_kind_of([&] { cxs::find_rainbow_empty(i3, bad_member, 3); }) ==
        ErrorKind::SetNotConvex);

  // Member over the wrong ground set.
  auto bad_ground = repeated_family(pair, 7);
  bad_ground[0] = {es(4, {0}), es(4, {2})};
  CHECK(error_kind_of([&] { cxs::find_rainbow_empty(i3, bad_ground, 3); }) ==
        ErrorKind::IndexOutOfRange);

  // On a small ground the claimed bound is checked outright; no subset of a
  // powerset space ever splits, so r = 3 is rejected before any search.
  ConvexitySpace p4 = cxs::make_powerset_space(4);
  std::vector<ElementSet> p4pair = {es(4, {0}), es(4, {1})};
  CHECK(error_kind_of([&] { cxs::find_rainbow_empty(p4, repeated_family(p4pair, 7), 3); }) ==
        ErrorKind::PreconditionViolation);

  cxs::Budget tiny(3);
  CHECK(error_kind_of([&] {
          cxs::find_rainbow_empty(i3, repeated_family(pair, 7), 3, &tiny);
        }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("rainbow search refutes an unverifiable Radon bound") {
  // Ground large enough that the claimed bound is taken on faith.
  ConvexitySpace wide = cxs::make_powerset_space(13);

  // Pairwise-intersecting triples leave no empty subfamily of size two.
  std::vector<ElementSet> triangle = {es(13, {0, 1}), es(13, {1, 2}), es(13, {0, 2})};
  bool refuted = false;
  try {
    cxs::find_rainbow_empty(wide, repeated_family(triangle, 7), 3);
  } catch (const cxs::RadonRefutedError& e) {
    refuted = true;
    CHECK(e.kind() == ErrorKind::RadonBoundRefuted);
    CHECK(e.certificate().empty());
  }
  CHECK(refuted);

  // Each family splits, but the collected witness points never do: in a
  // powerset space hulls of disjoint parts stay disjoint.
  std::vector<std::vector<ElementSet>> blocks = {
      {es(13, {0, 1, 2}), es(13, {3})}, {es(13, {0, 1, 3}), es(13, {2})},
      {es(13, {0, 1}), es(13, {2, 3})}, {es(13, {0, 2, 3}), es(13, {1})},
      {es(13, {0, 2}), es(13, {1, 3})}, {es(13, {0, 3}), es(13, {1, 2})},
      {es(13, {0}), es(13, {1, 2, 3})},
  };
  refuted = false;
  try {
    cxs::find_rainbow_empty(wide, blocks, 3);
  } catch (const cxs::RadonRefutedError& e) {
    refuted = true;
    std::map<int, int> expected = {{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    CHECK(e.certificate() == expected);
  }
  CHECK(refuted);
}

TEST_CASE("fh_stats pins the documented fractions") {
  ConvexitySpace i7 = cxs::make_interval_space(7);

  std::vector<ElementSet> overlapping = {es(7, {0, 1, 2, 3}), es(7, {1, 2, 3, 4}),
                                         es(7, {2, 3, 4, 5}), es(7, {3, 4, 5, 6})};
  cxs::FHStats all = cxs::fh_stats(i7, overlapping, 2);
  CHECK(all.alpha == 1);
  CHECK(all.beta == 1);
  CHECK(all.deepest_point == 3);
  CHECK(all.intersecting_tuples == 6);
  CHECK(all.total_tuples == 6);

  std::vector<ElementSet> singletons;
  for (int x = 0; x < 7; ++x) singletons.push_back(es(7, {x}));
  cxs::FHStats none = cxs::fh_stats(i7, singletons, 2);
  CHECK(none.alpha == 0);
  CHECK(none.beta == Rational(1, 7));
  CHECK(none.deepest_point == 0);
  CHECK(none.total_tuples == 21);

  std::vector<ElementSet> meeting = {es(7, {1, 2}), es(7, {2, 3})};
  cxs::FHStats full = cxs::fh_stats(i7, meeting, 2);
  CHECK(full.alpha == 1);
  CHECK(full.beta == 1);
  CHECK(full.deepest_point == 2);

  // Tuples of size one are just the members themselves.
  std::vector<ElementSet> mixed = {es(7, {0, 1}), es(7, {})};
  cxs::FHStats unary = cxs::fh_stats(i7, mixed, 1);
  CHECK(unary.alpha == Rational(1, 2));
  CHECK(unary.beta == Rational(1, 2));
  CHECK(unary.deepest_point == 0);

  CHECK(error_kind_of([&] { cxs::fh_stats(i7, meeting, 0); }) == ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([&] { cxs::fh_stats(i7, meeting, 3); }) == ErrorKind::PreconditionViolation);
  CHECK(error_kind_of([&] { cxs::fh_stats(i7, {es(5, {0})}, 1); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("fh_stats agrees with direct tuple enumeration") {
  ConvexitySpace i5 = cxs::make_interval_space(5);
  const auto& convex = i5.convex_sets();
  std::mt19937 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    int f = 2 + static_cast<int>(rng() % 4);
    std::vector<ElementSet> family;
    for (int i = 0; i < f; ++i)
      family.push_back(convex[static_cast<std::size_t>(rng() % convex.size())]);
    int m = 1 + static_cast<int>(rng() % f);
    cxs::FHStats stats = cxs::fh_stats(i5, family, m);

    // Exhaustive m-combination count.
    BigInt intersecting = 0, total = 0;
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      ++total;
      ElementSet inter = i5.full();
      for (int idx : pick) inter &= family[static_cast<std::size_t>(idx)];
      if (!inter.empty()) ++intersecting;
      int i = m - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == f - m + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    CHECK(stats.intersecting_tuples == intersecting);
    CHECK(stats.total_tuples == total);
    CHECK(stats.alpha == Rational(intersecting, total));

    int best_depth = 0, best_point = -1;
    for (int x = 0; x < 5; ++x) {
      int depth = 0;
      for (const ElementSet& s : family)
        if (s.test(x)) ++depth;
      if (depth > best_depth) {
        best_depth = depth;
        best_point = x;
      }
    }
    CAPTURE(trial);
    CHECK(stats.beta == Rational(best_depth, f));
    if (best_depth > 0) CHECK(stats.deepest_point == best_point);
  }
}
