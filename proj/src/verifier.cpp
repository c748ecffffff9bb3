#include "dgp/verifier.hpp"

#include "dgp/errors.hpp"

#include <algorithm>
#include <random>

namespace dgp {

Rational polygon_area(const std::vector<Point>& pts) {
  if (pts.size() < 3) return 0;
  return signed_area(pts);
}

std::vector<Point> clip_half_plane(const std::vector<Point>& pts,
                                   const Point& a, const Point& b) {
  std::vector<Point> out;
  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& cur = pts[i];
    const Point& nxt = pts[(i + 1) % n];
    const int sc = sign_of(cross(a, b, cur));
    const int sn = sign_of(cross(a, b, nxt));
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      auto x = line_intersection(a, b, cur, nxt);
      if (!x) throw InternalError("clip edge parallel to crossing line");
      out.push_back(*x);
    }
  }
  return out;
}

Verifier::Verifier(Polygon poly)
    : poly_(std::move(poly)), oracle_(poly_) {}

const std::vector<Point>& Verifier::visibility_polygon(size_t v) {
  auto it = vis_cache_.find(v);
  if (it != vis_cache_.end()) return it->second;
  if (poly_.has_holes())
    throw PreconditionError("visibility polygon requires a simple polygon");

  const Point& vp = poly_.vertex(v);
  const auto& ring = poly_.rings()[0];
  const size_t n = ring.size();

  // Walk the boundary in order; on each edge, split at every crossing with a
  // ray from the viewpoint through a polygon vertex (visibility along an edge
  // can only change behind a vertex), then keep the sub-pieces whose midpoint
  // is visible. Star-shapedness makes boundary order equal angular order, so
  // concatenating the visible pieces yields the region; gaps between
  // consecutive pieces lie on common rays ("windows").
  std::vector<Point> region;
  auto push = [&region](const Point& p) {
    if (region.empty() || region.back() != p) region.push_back(p);
  };
  for (size_t e = 0; e < n; ++e) {
    const Point& p0 = ring[e];
    const Point& p1 = ring[(e + 1) % n];
    const Rational dx = p1.x - p0.x, dy = p1.y - p0.y;
    const bool use_x = (dx < 0 ? -dx : dx) >= (dy < 0 ? -dy : dy);
    std::vector<Rational> ts{Rational(0), Rational(1)};
    for (size_t w = 0; w < n; ++w) {
      if (ring[w] == vp) continue;
      auto x = line_intersection(vp, ring[w], p0, p1);
      if (x && on_segment(p0, p1, *x))
        ts.push_back(use_x ? (x->x - p0.x) / dx : (x->y - p0.y) / dy);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
      Rational tm = (ts[i] + ts[i + 1]) / 2;
      Point mid{p0.x + tm * dx, p0.y + tm * dy};
      if (poly_.sees(vp, mid)) {
        push({p0.x + ts[i] * dx, p0.y + ts[i] * dy});
        push({p0.x + ts[i + 1] * dx, p0.y + ts[i + 1] * dy});
      }
    }
  }
  if (region.size() > 1 && region.front() == region.back()) region.pop_back();
  return vis_cache_.emplace(v, std::move(region)).first->second;
}

bool Verifier::triangle_covered(const std::array<size_t, 3>& tri, size_t g) {
  std::array<size_t, 3> key = tri;
  std::sort(key.begin(), key.end());
  auto it = cover_cache_.find({g, key});
  if (it != cover_cache_.end()) return it->second;

  std::vector<Point> t{poly_.vertex(key[0]), poly_.vertex(key[1]),
                       poly_.vertex(key[2])};
  if (signed_area(t) < 0) std::swap(t[1], t[2]);
  std::vector<Point> clip = visibility_polygon(g);
  for (int k = 0; k < 3 && !clip.empty(); ++k)
    clip = clip_half_plane(clip, t[k], t[(k + 1) % 3]);
  bool covered = polygon_area(clip) == polygon_area(t);
  cover_cache_.emplace(std::make_pair(g, key), covered);
  return covered;
}

bool Verifier::guard_sees(size_t g, const Point& p) {
  return poly_.sees(poly_.vertex(g), p);
}

Verdict Verifier::verify_solution(const std::vector<size_t>& guards,
                                  const Rational& ell,
                                  const std::vector<Point>& critical_targets,
                                  int samples, unsigned seed) {
  if (ell < 0) throw PreconditionError("negative dispersion threshold");
  Verdict verdict;

  verdict.dispersion_ok = true;
  for (size_t i = 0; i < guards.size() && verdict.dispersion_ok; ++i) {
    for (size_t j = i + 1; j < guards.size(); ++j) {
      if (oracle_.distance(guards[i], guards[j]).compare(ell) < 0) {
        verdict.dispersion_ok = false;
        verdict.dispersion_witness = {guards[i], guards[j]};
        break;
      }
    }
  }

  auto seen_by_some = [&](const Point& p) {
    for (size_t g : guards) {
      if (guard_sees(g, p)) return true;
    }
    return false;
  };

  verdict.covers = true;
  if (!poly_.has_holes()) {
    // Exact: slice every triangulation triangle along all guards' window
    // lines; each resulting convex cell lies entirely in or out of each
    // guard's region, so its centroid decides the whole cell.
    Triangulation tri = triangulate(poly_);
    std::vector<std::pair<Point, Point>> windows;
    for (size_t g : guards) {
      const auto& vis = visibility_polygon(g);
      for (size_t i = 0; i < vis.size(); ++i) {
        const Point& p = vis[i];
        const Point& q = vis[(i + 1) % vis.size()];
        if (p != q &&
            orientation(poly_.vertex(g), p, q) == Orientation::Collinear)
          windows.push_back({p, q});
      }
    }
    for (const Triangle& t : tri.triangles) {
      bool whole = false;
      for (size_t g : guards) {
        if (triangle_covered(t.v, g)) {
          whole = true;
          break;
        }
      }
      if (whole) continue;
      std::vector<std::vector<Point>> cells{
          {poly_.vertex(t.v[0]), poly_.vertex(t.v[1]), poly_.vertex(t.v[2])}};
      for (const auto& [a, b] : windows) {
        std::vector<std::vector<Point>> next;
        for (const auto& cell : cells) {
          auto left = clip_half_plane(cell, a, b);
          auto right = clip_half_plane(cell, b, a);
          if (polygon_area(left) > 0) next.push_back(std::move(left));
          if (polygon_area(right) > 0) next.push_back(std::move(right));
        }
        cells = std::move(next);
      }
      for (const auto& cell : cells) {
        Point c = centroid(cell);
        if (!seen_by_some(c)) {
          verdict.covers = false;
          verdict.uncovered_witness = c;
          return verdict;
        }
      }
    }
  } else {
    // Sampled coverage plus exact checks of all vertices and the supplied
    // critical targets.
    for (size_t v = 0; v < poly_.vertex_count(); ++v) {
      if (!seen_by_some(poly_.vertex(v))) {
        verdict.covers = false;
        verdict.uncovered_witness = poly_.vertex(v);
        return verdict;
      }
    }
    for (const Point& p : critical_targets) {
      if (!seen_by_some(p)) {
        verdict.covers = false;
        verdict.uncovered_witness = p;
        return verdict;
      }
    }
    Rational xmin = poly_.vertex(0).x, xmax = xmin;
    Rational ymin = poly_.vertex(0).y, ymax = ymin;
    for (size_t v = 1; v < poly_.rings()[0].size(); ++v) {
      xmin = std::min(xmin, poly_.vertex(v).x);
      xmax = std::max(xmax, poly_.vertex(v).x);
      ymin = std::min(ymin, poly_.vertex(v).y);
      ymax = std::max(ymax, poly_.vertex(v).y);
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> d(0, (1L << 20) - 1);
    int found = 0;
    for (long tries = 0; found < samples && tries < 40L * samples; ++tries) {
      Point p{xmin + Rational(d(rng), 1L << 20) * (xmax - xmin),
              ymin + Rational(d(rng), 1L << 20) * (ymax - ymin)};
      if (poly_.contains(p) != Containment::Interior) continue;
      ++found;
      if (!seen_by_some(p)) {
        verdict.covers = false;
        verdict.uncovered_witness = p;
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace dgp
