#include "dgp/placer.hpp"

#include "dgp/errors.hpp"
#include "dgp/lemma5.hpp"

#include <algorithm>
#include <sstream>

namespace dgp {

namespace {

std::vector<size_t> shared_vertices(const Triangle& s, const Triangle& t) {
  std::vector<size_t> out;
  for (size_t x : s.v) {
    for (size_t y : t.v) {
      if (x == y) out.push_back(x);
    }
  }
  return out;
}

size_t third_vertex(const Triangle& t, size_t x, size_t y) {
  for (size_t v : t.v) {
    if (v != x && v != y) return v;
  }
  throw InternalError("degenerate triangle");
}

bool has_vertex(const Triangle& t, size_t x) {
  return t.v[0] == x || t.v[1] == x || t.v[2] == x;
}

}  // namespace

// Resolved labels of the schematic configuration: path triangles
// 2=(a,b,d), 3=(d,a,i), 4=(e,d,i), 5=(e,g,i), 7=(g,h,i), optional feet
// 1=(b,c,d) on 2 and 6=(e,f,g) on 5; triangle 8 continues past 7.
struct Placer::Pattern {
  size_t a, b, d, e, g, h, i;
  size_t c = SIZE_MAX;  // apex of foot 1, if present
  size_t f = SIZE_MAX;  // apex of foot 6, if present
  size_t t3;            // triangle index of schematic triangle 3
  bool has_foot1() const { return c != SIZE_MAX; }
  bool has_foot6() const { return f != SIZE_MAX; }
};

Placer::Placer(Polygon poly)
    : ver_(std::move(poly)),
      tri_(triangulate(ver_.polygon())),
      part_(caterpillar_partition(tri_)) {}

bool Placer::covered(const Triangle& t) {
  for (size_t g : guards_) {
    if (ver_.triangle_covered(t.v, g)) return true;
  }
  return false;
}

bool Placer::sees_vertex(size_t from, size_t to) {
  return ver_.oracle().graph().sees(from, to);
}

bool Placer::seen_by_any_guard(size_t v) {
  for (size_t g : guards_) {
    if (g == v || sees_vertex(g, v)) return true;
  }
  return false;
}

bool Placer::far_from_all_guards(size_t v) {
  for (size_t g : guards_) {
    if (g == v || ver_.oracle().distance(g, v).compare(Rational(2)) < 0)
      return false;
  }
  return true;
}

void Placer::place(size_t v, const std::string& label) {
  // Exact runtime re-check of the paper's distance argument: every placement
  // must keep all pairwise guard distances >= 2.
  if (!far_from_all_guards(v)) {
    std::ostringstream os;
    os << "guard placement on vertex " << v
       << " violates the dispersion bound (case " << label << ")";
    throw InternalError(os.str());
  }
  guards_.push_back(v);
  trace_.push_back({label, v});
}

bool Placer::reflex_wrt(size_t u, size_t v, size_t w, const Point& ref) const {
  // Angle at v swept from ray v->u to ray v->w through the side containing
  // ref; reflex iff that sweep exceeds 180 degrees.
  const Point& pu = ver_.polygon().vertex(u);
  const Point& pv = ver_.polygon().vertex(v);
  const Point& pw = ver_.polygon().vertex(w);
  const int cu = sign_of(cross(pv, pu, ref));
  if (cu == 0) throw InternalError("degenerate reflex_wrt reference");
  const int cw = sign_of(cross(pv, pu, pw));
  if (cw == 0) return dot(pv, pu, pw) > 0;  // collinear: 360 vs 180 sweep
  // Sweeping counterclockwise (cu > 0) passes 180 degrees exactly when w is
  // on the clockwise side of u, and symmetrically.
  return cu > 0 ? cw < 0 : cw > 0;
}

std::optional<Placer::Pattern> Placer::match_pattern(const Caterpillar& cat,
                                                     size_t p, size_t a) {
  if (p + 4 >= cat.path.size()) return std::nullopt;
  const Triangle& t2 = tri_.triangles[cat.path[p]];
  const Triangle& t3 = tri_.triangles[cat.path[p + 1]];
  const Triangle& t4 = tri_.triangles[cat.path[p + 2]];
  const Triangle& t5 = tri_.triangles[cat.path[p + 3]];
  const Triangle& t7 = tri_.triangles[cat.path[p + 4]];
  if (!has_vertex(t2, a)) return std::nullopt;

  auto s23 = shared_vertices(t2, t3);
  if (s23.size() != 2 || (s23[0] != a && s23[1] != a)) return std::nullopt;
  Pattern pat;
  pat.a = a;
  pat.d = s23[0] == a ? s23[1] : s23[0];
  pat.b = third_vertex(t2, a, pat.d);
  pat.i = third_vertex(t3, a, pat.d);

  auto s34 = shared_vertices(t3, t4);
  if (s34.size() != 2) return std::nullopt;
  if (!((s34[0] == pat.d && s34[1] == pat.i) ||
        (s34[0] == pat.i && s34[1] == pat.d)))
    return std::nullopt;
  pat.e = third_vertex(t4, pat.d, pat.i);

  auto s45 = shared_vertices(t4, t5);
  if (s45.size() != 2) return std::nullopt;
  if (!((s45[0] == pat.e && s45[1] == pat.i) ||
        (s45[0] == pat.i && s45[1] == pat.e)))
    return std::nullopt;
  pat.g = third_vertex(t5, pat.e, pat.i);

  auto s57 = shared_vertices(t5, t7);
  if (s57.size() != 2) return std::nullopt;
  if (!((s57[0] == pat.g && s57[1] == pat.i) ||
        (s57[0] == pat.i && s57[1] == pat.g)))
    return std::nullopt;
  pat.h = third_vertex(t7, pat.g, pat.i);

  for (const auto& [pt, ft] : cat.feet) {
    const Triangle& foot = tri_.triangles[ft];
    if (pt == cat.path[p] && has_vertex(foot, pat.b) && has_vertex(foot, pat.d))
      pat.c = third_vertex(foot, pat.b, pat.d);
    if (pt == cat.path[p + 3] && has_vertex(foot, pat.e) &&
        has_vertex(foot, pat.g))
      pat.f = third_vertex(foot, pat.e, pat.g);
  }
  pat.t3 = cat.path[p + 1];
  return pat;
}

bool Placer::run_foot_cases(const Pattern& pat) {
  const Polygon& poly = ver_.polygon();
  auto dist_ge2 = [this](size_t x, size_t y) {
    return ver_.oracle().distance(x, y).compare(Rational(2)) >= 0;
  };
  // Placement that aborts the engine instead of failing when the schematic
  // reading was wrong; already-placed guards remain valid.
  auto try_place = [this](size_t v, const std::string& label) {
    if (std::count(guards_.begin(), guards_.end(), v)) return true;
    if (!far_from_all_guards(v)) {
      trace_.push_back({"engine-abort", SIZE_MAX});
      return false;
    }
    place(v, label);
    return true;
  };
  auto contradiction = [this, &poly](const std::array<size_t, 7>& labels,
                                     const char* where) {
    std::array<Point, 7> pts;
    for (int k = 0; k < 7; ++k) pts[k] = poly.vertex(labels[k]);
    Lemma5Report rep = check_lemma5(pts);
    if (rep.hypotheses_hold) {
      // The supposedly impossible configuration occurred: report it loudly.
      std::ostringstream os;
      os << "impossible configuration in case " << where << "; heptagon:";
      for (const Point& p : pts)
        os << " (" << format_rational(p.x) << "," << format_rational(p.y)
           << ")";
      throw InternalError(os.str());
    }
    // The local geometry does not actually satisfy the schematic reading;
    // abort to the generic walk.
    trace_.push_back({"engine-abort", SIZE_MAX});
    return false;
  };

  const size_t a = pat.a;
  bool c_placed = false;
  if (pat.has_foot1() && !sees_vertex(a, pat.c)) {
    if (!try_place(pat.c, "pre-c")) return false;
    c_placed = true;
  }
  auto A = [&](size_t x) {
    return sees_vertex(a, x) || (c_placed && sees_vertex(pat.c, x));
  };
  const Triangle& t3 = tri_.triangles[pat.t3];
  Point ref = centroid(
      {poly.vertex(t3.v[0]), poly.vertex(t3.v[1]), poly.vertex(t3.v[2])});

  if (reflex_wrt(a, pat.i, pat.g, ref)) {  // case 1
    if (!try_place(pat.g, "1")) return false;
    if (pat.has_foot6() && !A(pat.e) && !sees_vertex(pat.g, pat.e)) {
      if (!try_place(pat.e, "1b")) return false;
    } else {
      trace_.push_back({"1a", SIZE_MAX});
    }
    return true;
  }

  if (pat.has_foot6() && reflex_wrt(a, pat.d, pat.e, ref)) {  // case 2a
    const size_t e = pat.e, f = pat.f, g = pat.g, h = pat.h;
    if (dist_ge2(a, f)) {  // 2a.i
      if (!try_place(f, "2a.i")) return false;
      if (!A(h) && !sees_vertex(f, h)) return try_place(h, "2a.i");
      return true;
    }
    if (dist_ge2(a, g)) {  // 2a.ii
      if (!try_place(g, "2a.ii")) return false;
      if (!A(e) && !sees_vertex(g, e)) return try_place(e, "2a.ii");
      return true;
    }
    if (!sees_vertex(e, g) && !sees_vertex(e, h)) {  // 2a.iii
      if (!A(h) && !try_place(h, "2a.iii")) return false;
      return try_place(e, "2a.iii");
    }
    if (sees_vertex(e, g) && !sees_vertex(e, h)) {  // 2a.iv
      if (!A(h)) {
        return try_place(e, "2a.iv") && try_place(h, "2a.iv");
      }
      return try_place(e, "2a.iv");
    }
    if (sees_vertex(e, h) && !sees_vertex(e, g)) {  // 2a.v
      if (dist_ge2(e, h))
        return try_place(e, "2a.v") && try_place(h, "2a.v");
      return contradiction({e, pat.d, a, pat.i, h, g, f}, "2a.v");
    }
    // 2a.vi: e sees both g and h.
    if (A(h)) return try_place(e, "2a.vi");
    if (!try_place(h, "2a.vi")) return false;
    if (sees_vertex(h, f)) return true;
    if (dist_ge2(e, h)) return try_place(e, "2a.vi");
    return contradiction({a, pat.i, h, g, f, e, pat.d}, "2a.vi");
  }

  // case 2b: a also sees f (if present) and triangles 5, 6, 7.
  if (A(pat.h)) {
    trace_.push_back({"2b.i", SIZE_MAX});
    return true;
  }
  return try_place(pat.h, "2b.ii");
}

void Placer::cover_triangle(const Triangle& t, const Caterpillar& cat,
                            size_t path_pos) {
  if (guards_.empty()) {
    // First guard: the tip of the first ear (its vertex off the diagonal
    // shared with the second path triangle) sees its whole triangle.
    const Triangle& first = tri_.triangles[cat.path[0]];
    size_t tip = *std::min_element(first.v.begin(), first.v.end());
    if (cat.path.size() > 1) {
      auto shared =
          shared_vertices(first, tri_.triangles[cat.path[1]]);
      for (size_t v : first.v) {
        if (!std::count(shared.begin(), shared.end(), v)) tip = v;
      }
    }
    place(tip, "start");
    if (covered(t)) return;
  }

  // Try the schematic decision tree anchored at a nearby path position with
  // a current guard in the anchor triangle.
  for (size_t back = 0; back <= 4 && back <= path_pos; ++back) {
    size_t p = path_pos - back;
    for (auto it = guards_.rbegin(); it != guards_.rend(); ++it) {
      auto pat = match_pattern(cat, p, *it);
      if (!pat) continue;
      if (run_foot_cases(*pat) && covered(t)) return;
    }
  }

  // Generic ladder. An unseen vertex is always a safe guard position: the
  // view is blocked by a reflex vertex, so the geodesic has >= 2 unit edges.
  std::array<size_t, 3> vs = t.v;
  std::sort(vs.begin(), vs.end());
  for (size_t v : vs) {
    if (!seen_by_any_guard(v)) {
      place(v, "path");
      return;
    }
  }
  trace_.push_back({"unmatched", SIZE_MAX});
  for (size_t v : vs) {
    if (far_from_all_guards(v)) {
      place(v, "path-far");
      return;
    }
  }
  // Recovery: any sufficiently distant vertex that covers the triangle.
  for (size_t v = 0; v < ver_.polygon().vertex_count(); ++v) {
    if (far_from_all_guards(v) && ver_.triangle_covered(t.v, v)) {
      place(v, "recovery");
      return;
    }
  }
  std::ostringstream os;
  os << "dead end: triangle (" << t.v[0] << "," << t.v[1] << "," << t.v[2]
     << ") uncovered and no feasible guard; guards:";
  for (size_t g : guards_) os << " " << g;
  throw InternalError(os.str());
}

void Placer::process_caterpillar(const Caterpillar& cat) {
  std::vector<std::pair<size_t, size_t>> sequence;  // (triangle, path pos)
  for (size_t pos = 0; pos < cat.path.size(); ++pos) {
    sequence.push_back({cat.path[pos], pos});
    for (const auto& [pt, ft] : cat.feet) {
      if (pt == cat.path[pos]) sequence.push_back({ft, pos});
    }
  }
  for (const auto& [ti, pos] : sequence) {
    // A triangle may need several placements before it is fully covered.
    for (int rounds = 0; !covered(tri_.triangles[ti]); ++rounds) {
      if (rounds > 8) throw InternalError("coverage loop did not converge");
      cover_triangle(tri_.triangles[ti], cat, pos);
    }
  }
}

GuardSet Placer::run() {
  GeodesicOracle& oracle = ver_.oracle();
  if (oracle.min_pairwise_vertex_distance().compare(Rational(1)) < 0) {
    const Polygon& poly = ver_.polygon();
    for (size_t i = 0; i < poly.vertex_count(); ++i) {
      for (size_t j = i + 1; j < poly.vertex_count(); ++j) {
        if (oracle.graph().sees(i, j) &&
            squared_distance(poly.vertex(i), poly.vertex(j)) < 1) {
          std::ostringstream os;
          os << "vertices " << i << " and " << j
             << " have geodesic distance below 1";
          throw PreconditionError(os.str());
        }
      }
    }
    throw PreconditionError("minimum pairwise vertex distance below 1");
  }

  for (const Caterpillar& cat : part_.caterpillars) process_caterpillar(cat);

  GuardSet result;
  result.guards = guards_;
  result.dispersion = oracle.dispersion(guards_);
  Verdict verdict = ver_.verify_solution(guards_, Rational(2));
  result.covers = verdict.covers;
  if (!verdict.dispersion_ok)
    throw InternalError("final dispersion check failed despite per-step asserts");
  result.trace = trace_;
  return result;
}

GuardSet place_guards(const Polygon& poly) {
  return Placer(poly).run();
}

}  // namespace dgp
