#include "dgp/polygon.hpp"

#include "dgp/errors.hpp"

#include <algorithm>
#include <optional>

namespace dgp {

namespace {

// Strictly inside a single ring by even-odd parity (half-open edge rule).
// Assumes p is not on the ring boundary.
bool inside_ring(const std::vector<Point>& ring, const Point& p) {
  bool inside = false;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& u = ring[i];
    const Point& v = ring[(i + 1) % n];
    if ((u.y > p.y) != (v.y > p.y)) {
      // x-coordinate of the edge at height p.y, exactly.
      Rational x = u.x + (p.y - u.y) * (v.x - u.x) / (v.y - u.y);
      if (x > p.x) inside = !inside;
    }
  }
  return inside;
}

bool point_on_ring(const std::vector<Point>& ring, const Point& p) {
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    if (on_segment(ring[i], ring[(i + 1) % n], p)) return true;
  }
  return false;
}

void validate_ring(const std::vector<Point>& ring) {
  if (ring.size() < 3) throw PreconditionError("ring has fewer than 3 vertices");
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    if (ring[i] == ring[(i + 1) % n])
      throw PreconditionError("ring has repeated consecutive vertices");
  }
  // Simplicity: non-adjacent edges must be disjoint; adjacent edges may meet
  // only at their shared vertex.
  for (size_t i = 0; i < n; ++i) {
    Point a0 = ring[i], a1 = ring[(i + 1) % n];
    for (size_t j = i + 1; j < n; ++j) {
      Point b0 = ring[j], b1 = ring[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // The shared vertex is a1==b0 (or a0==b1 for the wrap edge).
        const Point& shared = (j == i + 1) ? a1 : a0;
        if (segments_properly_intersect(a0, a1, b0, b1) ||
            on_segment(a0, a1, (shared == b0) ? b1 : b0) ||
            on_segment(b0, b1, (shared == a1) ? a0 : a1))
          throw PreconditionError("ring is self-intersecting");
      } else if (segments_intersect(a0, a1, b0, b1)) {
        throw PreconditionError("ring is self-intersecting");
      }
    }
  }
}

}  // namespace

Polygon Polygon::create(std::vector<std::vector<Point>> rings) {
  if (rings.empty()) throw PreconditionError("polygon has no rings");
  for (const auto& ring : rings) validate_ring(ring);

  if (signed_area(rings[0]) <= 0)
    throw PreconditionError("outer ring must be counterclockwise");
  for (size_t h = 1; h < rings.size(); ++h) {
    if (signed_area(rings[h]) >= 0)
      throw PreconditionError("hole rings must be clockwise");
  }

  // Rings must be pairwise disjoint (no shared points at all).
  for (size_t r = 0; r < rings.size(); ++r) {
    for (size_t s = r + 1; s < rings.size(); ++s) {
      const size_t nr = rings[r].size(), ns = rings[s].size();
      for (size_t i = 0; i < nr; ++i) {
        for (size_t j = 0; j < ns; ++j) {
          if (segments_intersect(rings[r][i], rings[r][(i + 1) % nr],
                                 rings[s][j], rings[s][(j + 1) % ns]))
            throw PreconditionError("rings intersect");
        }
      }
    }
  }

  // Holes strictly inside the outer ring, and not nested in one another.
  for (size_t h = 1; h < rings.size(); ++h) {
    if (!inside_ring(rings[0], rings[h][0]))
      throw PreconditionError("hole lies outside the outer ring");
    for (size_t g = 1; g < rings.size(); ++g) {
      if (g != h && inside_ring(rings[g], rings[h][0]))
        throw PreconditionError("holes are nested");
    }
  }

  Polygon p;
  p.rings_ = std::move(rings);
  p.index();
  return p;
}

Polygon Polygon::simple(std::vector<Point> outer) {
  std::vector<std::vector<Point>> rings;
  rings.push_back(std::move(outer));
  return create(std::move(rings));
}

void Polygon::index() {
  for (size_t r = 0; r < rings_.size(); ++r) {
    const size_t n = rings_[r].size();
    for (size_t i = 0; i < n; ++i) {
      ring_pos_.push_back({r, i});
      edges_.push_back({rings_[r][i], rings_[r][(i + 1) % n]});
    }
  }
}

size_t Polygon::global_index(size_t ring, size_t pos) const {
  size_t base = 0;
  for (size_t r = 0; r < ring; ++r) base += rings_[r].size();
  return base + pos;
}

std::pair<size_t, size_t> Polygon::neighbours(size_t i) const {
  auto [r, pos] = ring_pos_[i];
  const size_t n = rings_[r].size();
  size_t base = i - pos;
  return {base + (pos + n - 1) % n, base + (pos + 1) % n};
}

Containment Polygon::contains(const Point& p) const {
  for (const auto& ring : rings_) {
    if (point_on_ring(ring, p)) return Containment::Boundary;
  }
  bool inside = false;
  for (const auto& ring : rings_) {
    if (inside_ring(ring, p)) inside = !inside;
  }
  return inside ? Containment::Interior : Containment::Exterior;
}

bool Polygon::sees(const Point& a, const Point& b) const {
  if (a == b) return contains(a) != Containment::Exterior;

  // Any edge crossing the open segment transversally blocks visibility.
  for (const auto& [u, v] : edges_) {
    if (segments_properly_intersect(a, b, u, v)) return false;
  }

  // Remaining contacts between [a,b] and the boundary happen at a, b, and
  // polygon vertices lying on [a,b]. Split at those points and test that the
  // interior of every piece stays within the closed region.
  std::vector<Rational> params;
  params.push_back(0);
  params.push_back(1);
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  const bool use_x = (dx < 0 ? -dx : dx) >= (dy < 0 ? -dy : dy);
  for (size_t i = 0; i < vertex_count(); ++i) {
    const Point& v = vertex(i);
    if (on_segment(a, b, v)) {
      params.push_back(use_x ? (v.x - a.x) / dx : (v.y - a.y) / dy);
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  for (size_t i = 0; i + 1 < params.size(); ++i) {
    Rational t = (params[i] + params[i + 1]) / 2;
    Point m{a.x + t * dx, a.y + t * dy};
    if (contains(m) == Containment::Exterior) return false;
  }
  return true;
}

bool Polygon::is_reflex(size_t i) const {
  auto [prev, next] = neighbours(i);
  // Outer ring counterclockwise and holes clockwise both keep the interior on
  // the left of the directed boundary, so a clockwise turn is reflex.
  return orientation(vertex(prev), vertex(i), vertex(next)) ==
         Orientation::Clockwise;
}

}  // namespace dgp
