#pragma once

#include "dgp/rational.hpp"

#include <optional>
#include <vector>

namespace dgp {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

// Sign of the cross product (q-p) x (r-p); exact.
Orientation orientation(const Point& p, const Point& q, const Point& r);

Rational cross(const Point& o, const Point& a, const Point& b);
Rational dot(const Point& o, const Point& a, const Point& b);
Rational squared_distance(const Point& a, const Point& b);

// True iff p lies on the closed segment [a,b].
bool on_segment(const Point& a, const Point& b, const Point& p);

// True iff the open interiors of [a,b] and [c,d] cross transversally.
bool segments_properly_intersect(const Point& a, const Point& b,
                                 const Point& c, const Point& d);

// True iff closed segments share at least one point.
bool segments_intersect(const Point& a, const Point& b,
                        const Point& c, const Point& d);

// Intersection point of non-parallel lines (a,b) and (c,d), if any.
std::optional<Point> line_intersection(const Point& a, const Point& b,
                                       const Point& c, const Point& d);

Point midpoint(const Point& a, const Point& b);

// Signed area (positive for counterclockwise rings).
Rational signed_area(const std::vector<Point>& ring);

Point centroid(const std::vector<Point>& pts);

}  // namespace dgp
