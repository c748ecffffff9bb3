#include "dgp/triangulation.hpp"

#include "dgp/errors.hpp"

#include <algorithm>
#include <map>

namespace dgp {

namespace {

// p in the closed triangle (a,b,c), a,b,c counterclockwise.
bool in_closed_triangle(const Point& a, const Point& b, const Point& c,
                        const Point& p) {
  return orientation(a, b, p) != Orientation::Clockwise &&
         orientation(b, c, p) != Orientation::Clockwise &&
         orientation(c, a, p) != Orientation::Clockwise;
}

}  // namespace

Triangulation triangulate(const Polygon& poly) {
  if (poly.has_holes()) throw PreconditionError("simple polygon required");
  const auto& ring = poly.rings()[0];
  const size_t n = ring.size();

  Triangulation out;
  if (n < 3) throw PreconditionError("degenerate polygon");

  std::vector<size_t> rem(n);
  for (size_t i = 0; i < n; ++i) rem[i] = i;

  while (rem.size() > 3) {
    size_t clip = rem.size();
    for (size_t i = 0; i < rem.size(); ++i) {
      const size_t prev = rem[(i + rem.size() - 1) % rem.size()];
      const size_t cur = rem[i];
      const size_t next = rem[(i + 1) % rem.size()];
      if (orientation(ring[prev], ring[cur], ring[next]) !=
          Orientation::CounterClockwise)
        continue;
      bool blocked = false;
      for (size_t other : rem) {
        if (other == prev || other == cur || other == next) continue;
        if (in_closed_triangle(ring[prev], ring[cur], ring[next],
                               ring[other])) {
          blocked = true;
          break;
        }
      }
      if (!blocked && (clip == rem.size() || cur < rem[clip])) clip = i;
    }
    if (clip == rem.size())
      throw InternalError("no ear found in simple polygon");
    const size_t prev = rem[(clip + rem.size() - 1) % rem.size()];
    const size_t next = rem[(clip + 1) % rem.size()];
    out.triangles.push_back({{prev, rem[clip], next}});
    rem.erase(rem.begin() + clip);
  }
  out.triangles.push_back({{rem[0], rem[1], rem[2]}});

  // Dual edges via shared vertex pairs.
  out.dual.assign(out.triangles.size(), {});
  std::map<std::pair<size_t, size_t>, std::vector<size_t>> side_owner;
  for (size_t t = 0; t < out.triangles.size(); ++t) {
    const auto& v = out.triangles[t].v;
    for (int k = 0; k < 3; ++k) {
      size_t a = v[k], b = v[(k + 1) % 3];
      side_owner[{std::min(a, b), std::max(a, b)}].push_back(t);
    }
  }
  for (const auto& [side, owners] : side_owner) {
    if (owners.size() > 2) throw InternalError("triangle side shared 3 ways");
    if (owners.size() == 2) {
      out.dual[owners[0]].push_back(owners[1]);
      out.dual[owners[1]].push_back(owners[0]);
    }
  }
  for (auto& adj : out.dual) std::sort(adj.begin(), adj.end());

  if (out.triangles.size() != n - 2)
    throw InternalError("triangle count is not n - 2");
  return out;
}

namespace {

// Unique tree path from u to v, restricted to `alive` nodes.
std::vector<size_t> tree_path(const std::vector<std::vector<size_t>>& adj,
                              const std::vector<char>& alive, size_t u,
                              size_t v) {
  std::vector<size_t> parent(adj.size(), SIZE_MAX), stack{u};
  std::vector<char> seen(adj.size(), 0);
  seen[u] = 1;
  while (!stack.empty()) {
    size_t x = stack.back();
    stack.pop_back();
    if (x == v) break;
    for (size_t y : adj[x]) {
      if (alive[y] && !seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<size_t> path;
  for (size_t x = v; x != SIZE_MAX; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  if (path.front() != u) throw InternalError("dual tree is disconnected");
  return path;
}

void build_caterpillar(const std::vector<std::vector<size_t>>& adj,
                       std::vector<char>& alive,
                       const std::vector<size_t>& nodes, size_t parent_index,
                       CaterpillarPartition& out) {
  // Longest leaf-to-leaf path among the alive nodes of this subtree, ties
  // broken by lexicographically smallest index sequence (both directions of
  // each path are candidates).
  std::vector<size_t> best;
  for (size_t u : nodes) {
    for (size_t v : nodes) {
      if (u == v && nodes.size() > 1) continue;
      std::vector<size_t> p = tree_path(adj, alive, u, v);
      if (p.size() > best.size() || (p.size() == best.size() && p < best))
        best = std::move(p);
    }
  }

  Caterpillar cat;
  cat.path = best;
  std::vector<char> on_path(adj.size(), 0);
  for (size_t t : best) on_path[t] = 1;
  for (size_t t : best) {
    for (size_t f : adj[t]) {
      if (alive[f] && !on_path[f]) cat.feet.push_back({t, f});
    }
  }
  for (size_t t : cat.path) alive[t] = 0;
  for (auto& [t, f] : cat.feet) alive[f] = 0;

  for (auto& [t, f] : cat.feet) {
    for (size_t c : adj[f]) {
      if (alive[c]) cat.exits.push_back({f, c});
    }
  }

  size_t my_index = out.caterpillars.size();
  out.caterpillars.push_back(cat);
  out.parent.push_back(parent_index);

  for (auto& [f, c] : cat.exits) {
    if (!alive[c]) continue;  // consumed by an earlier sibling (cannot happen
                              // in a tree, but keep the guard)
    // Collect the subtree hanging below c.
    std::vector<size_t> sub{c};
    std::vector<char> seen(adj.size(), 0);
    seen[c] = 1;
    for (size_t i = 0; i < sub.size(); ++i) {
      for (size_t y : adj[sub[i]]) {
        if (alive[y] && !seen[y]) {
          seen[y] = 1;
          sub.push_back(y);
        }
      }
    }
    build_caterpillar(adj, alive, sub, my_index, out);
  }
}

}  // namespace

CaterpillarPartition caterpillar_partition(const Triangulation& t) {
  const size_t m = t.triangles.size();
  CaterpillarPartition out;
  if (m == 0) return out;
  std::vector<char> alive(m, 1);
  std::vector<size_t> all(m);
  for (size_t i = 0; i < m; ++i) all[i] = i;
  build_caterpillar(t.dual, alive, all, SIZE_MAX, out);
  for (char a : alive) {
    if (a) throw InternalError("caterpillar partition missed a triangle");
  }
  return out;
}

}  // namespace dgp
