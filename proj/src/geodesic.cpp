#include "dgp/geodesic.hpp"

#include "dgp/errors.hpp"

namespace dgp {

VisGraph visibility_graph(const Polygon& poly) {
  const size_t n = poly.vertex_count();
  VisGraph g;
  g.adjacent.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      bool vis = poly.sees(poly.vertex(i), poly.vertex(j));
      g.adjacent[i][j] = g.adjacent[j][i] = vis;
    }
  }
  return g;
}

GeodesicOracle::GeodesicOracle(Polygon poly)
    : poly_(std::move(poly)), graph_(visibility_graph(poly_)) {
  const size_t n = poly_.vertex_count();
  dist_.assign(n, std::vector<std::optional<Length>>(n));
  solved_.assign(n, false);
}

void GeodesicOracle::run_dijkstra(size_t source) {
  if (solved_[source]) return;
  const size_t n = poly_.vertex_count();
  auto& d = dist_[source];
  std::vector<bool> done(n, false);
  d[source] = Length();
  for (;;) {
    size_t best = n;
    for (size_t v = 0; v < n; ++v) {
      if (!done[v] && d[v] && (best == n || *d[v] < *d[best])) best = v;
    }
    if (best == n) break;
    done[best] = true;
    for (size_t v = 0; v < n; ++v) {
      if (done[v] || !graph_.sees(best, v)) continue;
      Length cand = *d[best] + Length::distance(poly_.vertex(best),
                                                poly_.vertex(v));
      if (!d[v] || cand < *d[v]) d[v] = std::move(cand);
    }
  }
}

const Length& GeodesicOracle::distance(size_t u, size_t v) {
  if (u >= poly_.vertex_count() || v >= poly_.vertex_count())
    throw PreconditionError("vertex index out of range");
  if (!solved_[u]) {
    run_dijkstra(u);
    solved_[u] = true;
  }
  if (!dist_[u][v])
    throw InternalError("vertex pair unreachable in visibility graph");
  return *dist_[u][v];
}

Length GeodesicOracle::min_pairwise_vertex_distance() {
  if (min_pairwise_) return *min_pairwise_;
  const size_t n = poly_.vertex_count();
  if (n < 2) throw PreconditionError("need at least 2 vertices");
  std::optional<Length> best;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (!graph_.sees(i, j)) continue;
      Length d = Length::distance(poly_.vertex(i), poly_.vertex(j));
      if (!best || d < *best) best = std::move(d);
    }
  }
  if (!best) throw InternalError("no visible vertex pair");
  min_pairwise_ = std::move(best);
  return *min_pairwise_;
}

std::optional<Length> GeodesicOracle::dispersion(
    const std::vector<size_t>& guards) {
  std::optional<Length> best;
  for (size_t i = 0; i < guards.size(); ++i) {
    for (size_t j = i + 1; j < guards.size(); ++j) {
      const Length& d = distance(guards[i], guards[j]);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

bool GeodesicOracle::pair_distance_at_least_2(size_t u, size_t v) {
  if (!precondition_ok_)
    precondition_ok_ = min_pairwise_vertex_distance().compare(Rational(1)) >= 0;
  if (!*precondition_ok_)
    throw PreconditionError("minimum pairwise vertex distance below 1");
  if (u == v) return false;
  if (!graph_.sees(u, v)) return true;
  return squared_distance(poly_.vertex(u), poly_.vertex(v)) >= 4;
}

}  // namespace dgp
