#pragma once

#include "dgp/polygon.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace dgp {

struct Triangle {
  std::array<size_t, 3> v;  // polygon vertex indices, counterclockwise
};

struct Triangulation {
  std::vector<Triangle> triangles;
  // dual[i] = triangles sharing a diagonal with triangle i (tree edges).
  std::vector<std::vector<size_t>> dual;
};

// Ear clipping, always removing the lowest-index available ear. Deterministic.
// Throws PreconditionError on polygons with holes.
Triangulation triangulate(const Polygon& poly);

struct Caterpillar {
  std::vector<size_t> path;  // triangle indices, a leaf-to-leaf dual path
  // (path triangle, foot triangle) for every off-path neighbour of the path.
  std::vector<std::pair<size_t, size_t>> feet;
  // Dual edges (caterpillar triangle, outside triangle) spawning children.
  std::vector<std::pair<size_t, size_t>> exits;
};

struct CaterpillarPartition {
  std::vector<Caterpillar> caterpillars;
  // parent[i] = index of caterpillar whose exit spawned caterpillar i
  // (SIZE_MAX for the root).
  std::vector<size_t> parent;
};

// First caterpillar follows a longest leaf-to-leaf path of the dual tree
// (ties: lexicographically smallest index sequence); children recurse on the
// subtrees hanging off feet.
CaterpillarPartition caterpillar_partition(const Triangulation& t);

}  // namespace dgp
