#include "cxs/builders.hpp"

#include <algorithm>
#include <set>

namespace cxs {

namespace {

using Point = std::array<long long, 2>;

constexpr long long kCoordLimit = 1'000'000'000'000LL;  // keeps 128-bit products exact

void check_n(int n) {
  if (n < 1) throw Error(ErrorKind::DegenerateInput, "builder parameter n must be positive");
}

// Strict convex hull (collinear interior points dropped), monotone chain.
// Input must be sorted lexicographically and duplicate-free.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  __int128 cross = static_cast<__int128>(b[0] - a[0]) * (c[1] - a[1]) -
                   static_cast<__int128>(b[1] - a[1]) * (c[0] - a[0]);
  return cross > 0 ? 1 : cross < 0 ? -1 : 0;
}

bool point_in_hull(const Point& p, const std::vector<Point>& pts) {
  if (pts.empty()) return false;
  std::vector<Point> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Point> h = convex_hull(sorted);
  if (h.size() == 1) return p == h[0];
  if (h.size() == 2) return on_segment(h[0], h[1], p);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (orientation(h[i], h[(i + 1) % h.size()], p) < 0) return false;
  }
  return true;
}

ConvexitySpace make_interval_space(int n, Budget* budget) {
  check_n(n);
  std::vector<ElementSet> sets;
  sets.push_back(ElementSet(n));
  for (int i = 0; i < n; ++i) {
    ElementSet s(n);
    for (int j = i; j < n; ++j) {
      s.set(j);
      sets.push_back(s);
    }
  }
  return validate_space(n, std::move(sets), budget);
}

ConvexitySpace make_free_space(int n, Budget* budget) {
  check_n(n);
  return validate_space(n, {ElementSet(n), ElementSet::full(n)}, budget);
}

ConvexitySpace make_powerset_space(int n, std::size_t cap, Budget* budget) {
  BudgetScope b(budget);
  check_n(n);
  if (n >= 63 || (std::uint64_t{1} << n) > cap)
    throw Error(ErrorKind::BudgetExceeded, "powerset exceeds the closure size cap");
  std::vector<ElementSet> sets;
  sets.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    b->charge();
    ElementSet s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s.set(i);
    sets.push_back(s);
  }
  // Closed under intersection by construction; skip the quadratic check.
  return detail_space_from_closed(n, std::move(sets));
}

ConvexitySpace make_planar_trace_space(const std::vector<Point>& points, std::size_t cap,
                                       Budget* budget) {
  BudgetScope b(budget);
  if (points.empty()) throw Error(ErrorKind::DegenerateInput, "planar trace needs at least one point");
  for (const Point& p : points)
    if (std::llabs(p[0]) > kCoordLimit || std::llabs(p[1]) > kCoordLimit)
      throw Error(ErrorKind::DegenerateInput, "point coordinate too large");

  std::vector<Point> pts = points;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw Error(ErrorKind::DegenerateInput, "duplicate points in planar trace");

  const int n = static_cast<int>(pts.size());
  if (n >= 63 || (std::uint64_t{1} << n) > cap)
    throw Error(ErrorKind::BudgetExceeded, "planar trace subset count exceeds the size cap");

  std::set<ElementSet> traces;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    b->charge();
    std::vector<Point> chosen;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) chosen.push_back(pts[i]);
    ElementSet trace(n);
    if (!chosen.empty()) {
      for (int i = 0; i < n; ++i)
        if (point_in_hull(pts[i], chosen)) trace.set(i);
    }
    traces.insert(trace);
  }
  std::vector<ElementSet> sets(traces.begin(), traces.end());
  return validate_space(n, std::move(sets), b.operator->());
}

ConvexitySpace make_grid_trace_space(int width, int height, std::size_t cap, Budget* budget) {
  if (width < 1 || height < 1)
    throw Error(ErrorKind::DegenerateInput, "grid dimensions must be positive");
  std::vector<Point> pts;
  for (long long x = 0; x < width; ++x)
    for (long long y = 0; y < height; ++y) pts.push_back({x, y});
  return make_planar_trace_space(pts, cap, budget);
}

ConvexitySpace build(const BuilderSpec& spec, Budget* budget) {
  switch (spec.kind) {
    case BuilderSpec::Kind::Interval:    return make_interval_space(spec.n, budget);
    case BuilderSpec::Kind::Free:        return make_free_space(spec.n, budget);
    case BuilderSpec::Kind::Powerset:    return make_powerset_space(spec.n, spec.closure_cap, budget);
    case BuilderSpec::Kind::PlanarTrace: return make_planar_trace_space(spec.points, spec.closure_cap, budget);
    case BuilderSpec::Kind::GridTrace:   return make_grid_trace_space(spec.width, spec.height, spec.closure_cap, budget);
    case BuilderSpec::Kind::Generators:  return closure_from_generators(spec.ground_size, spec.sets, spec.closure_cap, budget);
    case BuilderSpec::Kind::Explicit:    return validate_space(spec.ground_size, spec.sets, budget);
  }
  throw Error(ErrorKind::UsageError, "unknown builder kind");
}

}  // namespace cxs
