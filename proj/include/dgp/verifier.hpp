#pragma once

#include "dgp/geodesic.hpp"
#include "dgp/polygon.hpp"
#include "dgp/triangulation.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dgp {

struct Verdict {
  bool covers = false;
  bool dispersion_ok = false;
  // Exactly one witness is set when the corresponding check fails; both are
  // independently re-checkable (sees / geodesic distance).
  std::optional<Point> uncovered_witness;
  std::optional<std::pair<size_t, size_t>> dispersion_witness;
  bool ok() const { return covers && dispersion_ok; }
};

// Exact coverage and dispersion certification for one polygon. Caches
// visibility polygons and triangle-coverage answers across queries.
class Verifier {
 public:
  explicit Verifier(Polygon poly);

  const Polygon& polygon() const { return poly_; }
  GeodesicOracle& oracle() { return oracle_; }

  // Exact visibility region of vertex v as a star-shaped polygon; its vertex
  // list may contain non-vertex "window" endpoints. Simple polygons only.
  const std::vector<Point>& visibility_polygon(size_t v);

  // True iff the (convex) triangle with the given corner points lies entirely
  // inside the visibility region of g. Exact, via half-plane clipping.
  bool triangle_covered(const std::array<size_t, 3>& tri, size_t g);

  // Exact check that guard g sees point p.
  bool guard_sees(size_t g, const Point& p);

  // covers: every point of the polygon is seen by some guard;
  // dispersion_ok: pairwise geodesic guard distances are all >= ell.
  // For simple polygons coverage is certified exactly by slicing a fixed
  // triangulation along visibility-window lines. For polygons with holes the
  // coverage check samples interior points and tests all vertices and the
  // caller-supplied critical targets exactly.
  Verdict verify_solution(const std::vector<size_t>& guards,
                          const Rational& ell,
                          const std::vector<Point>& critical_targets = {},
                          int samples = 10000, unsigned seed = 1);

 private:
  Polygon poly_;
  GeodesicOracle oracle_;
  std::map<size_t, std::vector<Point>> vis_cache_;
  std::map<std::pair<size_t, std::array<size_t, 3>>, bool> cover_cache_;
};

// Area of a (possibly degenerate) polygon given as a point list.
Rational polygon_area(const std::vector<Point>& pts);

// Clip a polygon by the left half-plane of directed line a->b
// (Sutherland-Hodgman step; exact).
std::vector<Point> clip_half_plane(const std::vector<Point>& pts,
                                   const Point& a, const Point& b);

}  // namespace dgp
