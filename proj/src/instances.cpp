#include "dgp/instances.hpp"

#include "dgp/errors.hpp"
#include "dgp/geodesic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace dgp {

namespace {

Point add(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point scale(const Point& a, const Rational& s) { return {a.x * s, a.y * s}; }

// Rotation by a rational unit vector (c, s) with c^2 + s^2 = 1, so all
// distances are preserved exactly.
struct Spin {
  Rational c{1};
  Rational s{0};

  Point apply(const Point& p) const {
    return {c * p.x - s * p.y, s * p.x + c * p.y};
  }
  Spin inverse() const { return {c, -s}; }
};

Point transform(const Point& p, const Spin& spin, const Point& shift) {
  return add(spin.apply(p), shift);
}

Rational rat_int(long num) { return Rational(num); }

}  // namespace

void MonotoneFormula::validate() const {
  if (!depth.empty() && depth.size() != clauses.size()) {
    throw ParseError("layout depth list does not match clause count");
  }
  for (const Clause& cl : clauses) {
    for (const Literal& lit : cl.lits) {
      if (lit.var >= variable_count) {
        throw ParseError("clause references undeclared variable");
      }
      if (lit.negated != cl.lits[0].negated) {
        throw ParseError("clause mixes positive and negative literals");
      }
    }
  }
}

bool satisfiable(const MonotoneFormula& formula) {
  formula.validate();
  if (formula.variable_count > 24) {
    throw PreconditionError("formula too large for exhaustive satisfiability");
  }
  const size_t limit = size_t{1} << formula.variable_count;
  for (size_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (const Clause& cl : formula.clauses) {
      bool sat = false;
      for (const Literal& lit : cl.lits) {
        const bool value = (mask >> lit.var) & 1u;
        sat = sat || (value != lit.negated);
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return formula.clauses.empty();
}

// ---------------------------------------------------------------------------
// Variable gadget.
//
// A hexagon built from a near-unit rhombus with two unit-length spikes leaning
// across it. The spike tips are blocked by the opposite rhombus corners, which
// pins four geodesic distances to exactly 2 and leaves exactly four covering
// sets at dispersion 2: {v1,v6}, {v3,v6} (the "true" side) and {v2,v5},
// {v4,v5} (the "false" side).
// ---------------------------------------------------------------------------

namespace {

struct VariablePoints {
  Point v1{Rational(-209, 241), Rational(121, 241)};
  Point v2{Rational(0), Rational(1)};
  Point v3{Rational(0), Rational(0)};
  Point v4{Rational(209, 241), Rational(120, 241)};
  Point v5{Rational(119, 169), Rational(-120, 169)};
  Point v6{Rational(-119, 169), Rational(289, 169)};
};

}  // namespace

std::pair<Polygon, GadgetReport> gen_variable_gadget() {
  const VariablePoints p;
  Polygon poly = Polygon::simple({p.v1, p.v5, p.v3, p.v4, p.v6, p.v2});

  GadgetReport report;
  report.kind = "variable";
  report.labels = {{"v1", 0}, {"v5", 1}, {"v3", 2},
                   {"v4", 3}, {"v6", 4}, {"v2", 5}};
  // Interior points of the two spike triangles; any covering set must reach
  // into both.
  report.targets = {centroid({p.v1, p.v5, p.v3}), centroid({p.v4, p.v6, p.v2})};
  // Positive corridor attaches along edge v2->v1, negative along v3->v4.
  report.ports = {{5, 0}, {2, 3}};
  report.certified = {
      "|v1v2| = |v3v4| = |v2v3| = |v3v5| = |v2v6| = 1",
      "geodesic(v2,v5) = geodesic(v4,v5) = geodesic(v1,v6) = geodesic(v3,v6) = 2",
      "|v1v5| = |v4v6| < 2",
  };

  // Certify the unit edges and the spike blockers.
  const Rational one(1);
  if (squared_distance(p.v1, p.v2) != one || squared_distance(p.v3, p.v4) != one ||
      squared_distance(p.v2, p.v3) != one || squared_distance(p.v3, p.v5) != one ||
      squared_distance(p.v2, p.v6) != one) {
    throw InternalError("variable gadget unit edges are off");
  }
  if (squared_distance(p.v1, p.v5) >= Rational(4) ||
      squared_distance(p.v4, p.v6) >= Rational(4)) {
    throw InternalError("variable gadget spike diagonals are too long");
  }
  if (poly.sees(p.v5, p.v2) || poly.sees(p.v5, p.v4) ||
      poly.sees(p.v6, p.v1) || poly.sees(p.v6, p.v3)) {
    throw InternalError("variable gadget spike tips are not blocked");
  }
  return {std::move(poly), std::move(report)};
}

// ---------------------------------------------------------------------------
// Godfried's polygon family.
//
// A near-unit triangle core a, b, c with |ab| = |ac| = 1 exactly and |bc|
// slightly above 1, plus one blunt spike per side. Every spike vertex lies at
// Euclidean distance exactly 1 from a core vertex that is itself at distance
// exactly 1 from the core vertex opposite the spike, or is directly visible
// from that opposite vertex at distance below 2. Hence whenever a guard set
// pairs a core vertex with a guard deep in the opposite spike, the two are at
// geodesic distance at most 2 -- and the pair (c, first ab-spike tip) attains
// exactly 2, because the reflex corner at a blocks the straight segment.
// Covering the spikes without a nearby partner is impossible, so the optimum
// dispersion is exactly 2 regardless of how many spike vertices are added.
// ---------------------------------------------------------------------------

Polygon gen_godfried(size_t spikes) {
  if (spikes < 3) {
    throw PreconditionError("godfried polygon needs at least 3 spikes");
  }
  if (spikes > 6) {
    throw PreconditionError(
        "godfried polygon supports at most 6 spike vertices: the unit-distance "
        "and dispersion-2 constraints saturate beyond that");
  }
  const Point a{rat_int(0), rat_int(0)};
  const Point b{rat_int(1), rat_int(0)};
  const Point c{Rational(95, 193), Rational(168, 193)};

  // Candidate spike vertices in the order they are enabled as `spikes` grows.
  // ab spike hangs below edge ab, anchored at a; bc spike is anchored at b;
  // ca spike is anchored at a just above the ab spike, leaving a thin exterior
  // sliver at a that keeps the two tips mutually invisible.
  const Point ab_t1 = add(a, Point{Rational(-24, 25), Rational(-7, 25)});
  const Point ab_t2 = add(a, Point{rat_int(0), rat_int(-1)});
  const Point ab_t3{rat_int(1), rat_int(-1)};  // unit from both b and ab_t2
  const Point bc_t1 = add(b, Point{Rational(20, 29), Rational(-21, 29)});
  const Point bc_t2 = add(b, Point{Rational(15, 17), Rational(8, 17)});
  const Point ca_t1 = add(a, Point{Rational(-63, 65), Rational(-16, 65)});

  const bool has_ab_t2 = spikes >= 4;
  const bool has_bc_t2 = spikes >= 5;
  const bool has_ab_t3 = spikes >= 6;

  std::vector<Point> ring;
  ring.push_back(a);
  ring.push_back(ab_t1);
  if (has_ab_t2) ring.push_back(ab_t2);
  if (has_ab_t3) ring.push_back(ab_t3);
  ring.push_back(b);
  ring.push_back(bc_t1);
  if (has_bc_t2) ring.push_back(bc_t2);
  ring.push_back(c);
  ring.push_back(ca_t1);
  return Polygon::simple(std::move(ring));
}

// ---------------------------------------------------------------------------
// Dumbbell: two mirrored bells joined through a vertical slit of height eps.
// Each bell is a zigzag comb of k/2 teeth.  Both legs of every tooth have
// length exactly zeta (the leg directions are rational unit vectors), and the
// straight segment between consecutive tips leaves the polygon at the notch
// between them, so consecutive tips are at geodesic distance exactly 2*zeta.
// Placing one guard on every tip covers the polygon with dispersion 2*zeta,
// while any other covering set is forced below that bound:
//   - within a bell every non-tip pair that can jointly cover two adjacent
//     teeth is at geodesic distance <= 2*zeta (the notch chain has step
//     length < zeta), and adjacent tips sit at exactly 2*zeta;
//   - a single vertex covering a whole bell exists only for k = 4 (the middle
//     notch), and the two middle notches are within 2*zeta of each other
//     through the slit.
// The two slit vertices realize the minimum pairwise distance eps.
// ---------------------------------------------------------------------------
Polygon gen_dumbbell(size_t k, const Rational& eps, const Rational& zeta) {
  if (k < 4 || k % 2 != 0) {
    throw PreconditionError("dumbbell needs an even number of spikes, k >= 4");
  }
  if (eps <= Rational(0) || zeta <= Rational(0)) {
    throw PreconditionError("dumbbell needs positive eps and zeta");
  }
  if (eps * Rational(4) > zeta) {
    throw PreconditionError(
        "dumbbell requires eps <= zeta / 4: larger ratios collapse the slit "
        "into the comb structure");
  }
  const size_t m = k / 2;  // teeth per bell

  // Leg directions: rational unit vectors.  Tooth legs alternate between the
  // two pairs so the notch chain zigzags with step (-+8/65, 64/65), keeping
  // the step length (sqrt(4160)/65) strictly below 1.
  const Point u_a{Rational(4, 5), Rational(3, 5)};
  const Point v_a{Rational(12, 13), Rational(-5, 13)};
  const Point u_b{Rational(12, 13), Rational(5, 13)};
  const Point v_b{Rational(4, 5), Rational(-3, 5)};

  // The slit must sit above the extension of every middle tooth's upper leg;
  // otherwise the slit vertices (and, through the slit, the opposite bell)
  // could peek into that tooth's apex.  For tooth i with upper-leg slope s
  // and tip (w + 52/65, y_i), the extension crosses x = 0 at
  // y_i + s * (w + 52/65); with w = Y/8 + 11/65 the requirement Y > crossing
  // becomes Y * (1 - s/8) > y_i + 63*s/65.
  Rational y_top = Rational(64 * static_cast<long>(m - 1) + 20, 65);
  for (size_t i = 1; i < m; ++i) {
    const bool odd = (i % 2 == 1);
    const Rational s = odd ? Rational(5, 12) : Rational(3, 4);
    const Rational y_i =
        Rational(64 * static_cast<long>(i) - (odd ? 25 : 39), 65);
    const Rational bound =
        (y_i + Rational(63) * s / Rational(65)) / (Rational(1) - s / Rational(8)) +
        Rational(2) * (eps / zeta) + Rational(1, 65);
    y_top = std::max(y_top, bound);
  }
  const Rational spine_x = y_top / Rational(8) + Rational(11, 65);

  std::vector<Point> right;  // B_0, T_1, B_1, ..., T_m (bottom to top)
  Point notch{spine_x * zeta, Rational(0)};
  right.push_back(notch);
  for (size_t i = 1; i <= m; ++i) {
    const bool odd = (i % 2 == 1);
    const Point& u = odd ? u_a : u_b;
    const Point& v = odd ? v_a : v_b;
    const Point tip = add(notch, scale(u, zeta));
    right.push_back(tip);
    if (i < m) {
      notch = sub(tip, scale(v, zeta));
      right.push_back(notch);
    }
  }

  const Point s_top{rat_int(0), y_top * zeta};
  const Point s_bot{rat_int(0), y_top * zeta - eps};

  std::vector<Point> ring;
  ring.push_back(s_bot);
  for (const Point& p : right) ring.push_back(p);
  ring.push_back(s_top);
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    ring.push_back(Point{-it->x, it->y});
  }
  return Polygon::simple(std::move(ring));
}

// ---------------------------------------------------------------------------
// Random simple polygons: random integer points, closed into a polygon by
// repeatedly uncrossing intersecting edge pairs (2-opt), then rescaled so the
// minimum pairwise geodesic vertex distance is at least 1.
// ---------------------------------------------------------------------------

namespace {

bool ring_has_crossing(const std::vector<Point>& ring, size_t& ei, size_t& ej) {
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % n];
      const Point& c = ring[j];
      const Point& d = ring[(j + 1) % n];
      if ((i + 1) % n == j || (j + 1) % n == i) {
        // Adjacent edges: only a fold-back overlap is a problem.
        const Point& shared = ((i + 1) % n == j) ? ring[j] : ring[i];
        const Point& u = ((i + 1) % n == j) ? a : c;
        const Point& w = ((i + 1) % n == j) ? d : b;
        if (orientation(u, shared, w) == Orientation::Collinear &&
            dot(shared, u, w) > Rational(0)) {
          ei = i;
          ej = j;
          return true;
        }
        continue;
      }
      if (segments_intersect(a, b, c, d)) {
        ei = i;
        ej = j;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Polygon gen_random_simple(size_t n, unsigned seed) {
  if (n < 3) throw PreconditionError("polygon needs at least 3 vertices");
  std::mt19937 rng(seed);
  const long span = static_cast<long>(4 * n);
  std::uniform_int_distribution<long> coord(0, span);

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Point> ring;
    std::set<std::pair<long, long>> used;
    while (ring.size() < n) {
      const long x = coord(rng);
      const long y = coord(rng);
      if (used.insert({x, y}).second) {
        ring.emplace_back(rat_int(x), rat_int(y));
      }
    }
    // 2-opt uncrossing: reversing the chain between two crossing edges
    // removes the crossing and strictly shortens the tour, so it terminates.
    bool ok = true;
    size_t ei = 0;
    size_t ej = 0;
    size_t budget = 64 * n * n;
    while (ring_has_crossing(ring, ei, ej)) {
      if (budget-- == 0) {
        ok = false;
        break;
      }
      std::reverse(ring.begin() + static_cast<long>(ei) + 1,
                   ring.begin() + static_cast<long>(ej) + 1);
    }
    if (!ok) continue;
    // Drop collinear chains, which Polygon::create rejects.
    std::vector<Point> cleaned;
    for (size_t i = 0; i < ring.size(); ++i) {
      const Point& prev = ring[(i + ring.size() - 1) % ring.size()];
      const Point& next = ring[(i + 1) % ring.size()];
      if (orientation(prev, ring[i], next) != Orientation::Collinear) {
        cleaned.push_back(ring[i]);
      }
    }
    if (cleaned.size() < 3) continue;
    if (signed_area(cleaned) < Rational(0)) {
      std::reverse(cleaned.begin(), cleaned.end());
    }
    std::vector<Polygon> holder;
    try {
      holder.push_back(Polygon::simple(cleaned));
    } catch (const PreconditionError&) {
      continue;
    }
    Polygon& poly = holder.front();
    // Rescale so the minimum pairwise geodesic vertex distance is at least 1
    // (and below 9/8, to keep the instances snug). The minimum over vertex
    // pairs is attained by a mutually visible pair, so a rational squared
    // Euclidean minimum drives the scale factor.
    GeodesicOracle oracle(poly);
    Rational best_sq(-1);
    for (size_t i = 0; i < poly.vertex_count(); ++i) {
      for (size_t j = i + 1; j < poly.vertex_count(); ++j) {
        if (!poly.sees(poly.vertex(i), poly.vertex(j))) continue;
        const Rational d = squared_distance(poly.vertex(i), poly.vertex(j));
        if (best_sq < Rational(0) || d < best_sq) best_sq = d;
      }
    }
    if (best_sq <= Rational(0)) continue;
    // Smallest power of two k with k^2 * best_sq >= 1; doubling keeps the
    // rescale exact and the resulting minimum within [1, 2).
    Rational factor(1);
    while (factor * factor * best_sq < Rational(1)) factor *= Rational(2);
    while (factor * factor * best_sq >= Rational(4)) factor /= Rational(2);
    std::vector<Point> scaled;
    scaled.reserve(cleaned.size());
    for (const Point& p : cleaned) scaled.push_back(scale(p, factor));
    return Polygon::simple(std::move(scaled));
  }
  throw InternalError("random polygon generation did not converge");
}

}  // namespace dgp
