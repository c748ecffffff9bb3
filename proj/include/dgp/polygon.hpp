#pragma once

#include "dgp/geometry.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace dgp {

enum class Containment { Exterior, Boundary, Interior };

// Polygon with optional holes. Ring 0 is the outer boundary, counterclockwise;
// holes are clockwise. Immutable after construction; all queries are exact.
class Polygon {
 public:
  // Validates and constructs. Throws PreconditionError when a ring is
  // degenerate, self-intersecting, mis-oriented, or when holes are not
  // strictly inside the outer ring / not pairwise disjoint.
  static Polygon create(std::vector<std::vector<Point>> rings);

  // Convenience for simple polygons.
  static Polygon simple(std::vector<Point> outer);

  const std::vector<std::vector<Point>>& rings() const { return rings_; }
  bool has_holes() const { return rings_.size() > 1; }

  // Global vertex indexing: outer ring first, then holes in order.
  size_t vertex_count() const { return ring_pos_.size(); }
  const Point& vertex(size_t i) const {
    return rings_[ring_pos_[i].first][ring_pos_[i].second];
  }
  // (ring, position within ring) for a global index.
  std::pair<size_t, size_t> locate(size_t i) const { return ring_pos_[i]; }
  size_t global_index(size_t ring, size_t pos) const;
  // Global indices of the boundary neighbours of vertex i (within its ring).
  std::pair<size_t, size_t> neighbours(size_t i) const;

  Containment contains(const Point& p) const;

  // Closed visibility: true iff segment [a,b] stays within the closed region.
  // Boundary grazing (running along an edge, passing through a vertex) counts.
  bool sees(const Point& a, const Point& b) const;

  // Interior angle at vertex i exceeds pi.
  bool is_reflex(size_t i) const;

  // All boundary edges as point pairs (for intersection sweeps).
  const std::vector<std::pair<Point, Point>>& edges() const { return edges_; }

 private:
  Polygon() = default;
  void index();

  std::vector<std::vector<Point>> rings_;
  std::vector<std::pair<size_t, size_t>> ring_pos_;
  std::vector<std::pair<Point, Point>> edges_;
};

}  // namespace dgp
