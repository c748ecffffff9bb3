#include "dgp/geometry.hpp"

#include "dgp/errors.hpp"

namespace dgp {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  int s = sign_of(cross(p, q, r));
  if (s > 0) return Orientation::CounterClockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  // p within the bounding box of [a,b].
  if ((p.x < a.x && p.x < b.x) || (p.x > a.x && p.x > b.x)) return false;
  if ((p.y < a.y && p.y < b.y) || (p.y > a.y && p.y > b.y)) return false;
  return true;
}

bool segments_properly_intersect(const Point& a, const Point& b,
                                 const Point& c, const Point& d) {
  int o1 = static_cast<int>(orientation(a, b, c));
  int o2 = static_cast<int>(orientation(a, b, d));
  int o3 = static_cast<int>(orientation(c, d, a));
  int o4 = static_cast<int>(orientation(c, d, b));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect(const Point& a, const Point& b,
                        const Point& c, const Point& d) {
  if (segments_properly_intersect(a, b, c, d)) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) ||
         on_segment(c, d, a) || on_segment(c, d, b);
}

std::optional<Point> line_intersection(const Point& a, const Point& b,
                                       const Point& c, const Point& d) {
  Rational rx = b.x - a.x, ry = b.y - a.y;
  Rational sx = d.x - c.x, sy = d.y - c.y;
  Rational denom = rx * sy - ry * sx;
  if (denom == 0) return std::nullopt;
  Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
  return Point(a.x + t * rx, a.y + t * ry);
}

Point midpoint(const Point& a, const Point& b) {
  return Point((a.x + b.x) / 2, (a.y + b.y) / 2);
}

Rational signed_area(const std::vector<Point>& ring) {
  Rational twice(0);
  size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2;
}

Point centroid(const std::vector<Point>& pts) {
  if (pts.empty()) throw InternalError("centroid of empty point set");
  Rational sx(0), sy(0);
  for (const Point& p : pts) {
    sx += p.x;
    sy += p.y;
  }
  return Point(sx / static_cast<long>(pts.size()), sy / static_cast<long>(pts.size()));
}

}  // namespace dgp
