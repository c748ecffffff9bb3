#pragma once

#include "dgp/length.hpp"
#include "dgp/polygon.hpp"

#include <optional>
#include <vector>

namespace dgp {

// Vertex-to-vertex visibility adjacency; weights are straight-line lengths.
struct VisGraph {
  std::vector<std::vector<bool>> adjacent;
  bool sees(size_t u, size_t v) const { return adjacent[u][v]; }
};

VisGraph visibility_graph(const Polygon& poly);

// All geodesic machinery for one polygon, with memoized distances. Geodesics
// between vertices bend only at (reflex) vertices, so shortest paths over the
// visibility graph are exact.
class GeodesicOracle {
 public:
  explicit GeodesicOracle(Polygon poly);

  const Polygon& polygon() const { return poly_; }
  const VisGraph& graph() const { return graph_; }

  const Length& distance(size_t u, size_t v);

  // Minimum over all vertex pairs; attained on a visibility edge, since every
  // geodesic is a chain of visibility edges.
  Length min_pairwise_vertex_distance();

  // Minimum pairwise geodesic distance of a guard set; nullopt = infinite.
  std::optional<Length> dispersion(const std::vector<size_t>& guards);

  // Membership shortcut: an invisible pair is joined by a path of >= 2 edges,
  // each of length >= 1 under the stated precondition, hence distance >= 2.
  // Requires min_pairwise_vertex_distance() >= 1.
  bool pair_distance_at_least_2(size_t u, size_t v);

 private:
  void run_dijkstra(size_t source);

  Polygon poly_;
  VisGraph graph_;
  std::vector<std::vector<std::optional<Length>>> dist_;
  std::vector<bool> solved_;
  std::optional<Length> min_pairwise_;
  std::optional<bool> precondition_ok_;
};

}  // namespace dgp
