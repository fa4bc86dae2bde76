#include "support/corpus.hpp"

#include <random>

#include "cxs/builders.hpp"

namespace corpus {

using cxs::ConvexitySpace;
using cxs::ElementSet;

cxs::ConvexitySpace seeded_closure(std::uint64_t seed) {
  // mt19937 with explicit modulo so the corpus is identical on every platform.
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  int n = 3 + static_cast<int>(rng() % 5);         // ground size 3..7
  int count = 2 + static_cast<int>(rng() % 4);     // 2..5 generators
  std::vector<ElementSet> generators;
  generators.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::uint32_t mask = rng() % (1u << n);
    ElementSet s(n);
    for (int e = 0; e < n; ++e)
      if ((mask >> e) & 1u) s.set(e);
    generators.push_back(s);
  }
  return cxs::closure_from_generators(n, generators);
}

std::vector<Entry> named_spaces() {
  std::vector<Entry> out;
  for (int n = 3; n <= 8; ++n)
    out.push_back({"interval(" + std::to_string(n) + ")", cxs::make_interval_space(n)});
  for (int n = 2; n <= 6; ++n)
    out.push_back({"free(" + std::to_string(n) + ")", cxs::make_free_space(n)});
  for (int n = 2; n <= 4; ++n)
    out.push_back({"powerset(" + std::to_string(n) + ")", cxs::make_powerset_space(n)});

  using P = std::vector<std::array<long long, 2>>;
  out.push_back({"planar:square4",
                 cxs::make_planar_trace_space(P{{0, 0}, {1, 0}, {0, 1}, {1, 1}})});
  out.push_back({"planar:triangle_center4",
                 cxs::make_planar_trace_space(P{{0, 0}, {3, 0}, {0, 3}, {1, 1}})});
  out.push_back({"planar:collinear5",
                 cxs::make_planar_trace_space(P{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}})});
  out.push_back({"planar:pentagon5",
                 cxs::make_planar_trace_space(P{{0, 0}, {2, 0}, {3, 2}, {1, 4}, {-1, 2}})});
  out.push_back({"planar:hexagon6",
                 cxs::make_planar_trace_space(P{{0, 0}, {2, 0}, {3, 2}, {2, 4}, {0, 4}, {-1, 2}})});
  out.push_back({"planar:grid3x2", cxs::make_grid_trace_space(3, 2)});
  out.push_back({"planar:hexagon_center7",
                 cxs::make_planar_trace_space(
                     P{{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}, {2, 3}})});
  out.push_back({"planar:clusters6",
                 cxs::make_planar_trace_space(P{{0, 0}, {1, 0}, {0, 1}, {5, 5}, {6, 5}, {5, 6}})});
  return out;
}

std::vector<Entry> seeded_closures() {
  std::vector<Entry> out;
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    out.push_back({"closure(seed=" + std::to_string(seed) + ")", seeded_closure(seed)});
  return out;
}

std::vector<Entry> standard_corpus() {
  std::vector<Entry> out = named_spaces();
  std::vector<Entry> closures = seeded_closures();
  out.insert(out.end(), closures.begin(), closures.end());
  return out;
}

}  // namespace corpus
