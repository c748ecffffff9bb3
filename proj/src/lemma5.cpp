#include "dgp/lemma5.hpp"

#include "dgp/errors.hpp"
#include "dgp/geodesic.hpp"
#include "dgp/polygon.hpp"

namespace dgp {

Lemma5Report check_lemma5(const std::array<Point, 7>& v) {
  Lemma5Report report;
  Polygon hept = [&v]() -> Polygon {
    try {
      return Polygon::simple({v.begin(), v.end()});
    } catch (const PreconditionError&) {
      return Polygon::simple({{0, 0}, {1, 0}, {0, 1}});  // sentinel
    }
  }();
  if (hept.vertex_count() != 7) return report;  // not a simple CCW heptagon

  if (!hept.is_reflex(1) || !hept.is_reflex(3) || !hept.is_reflex(6))
    return report;

  GeodesicOracle oracle(hept);
  if (oracle.min_pairwise_vertex_distance().compare(Rational(1)) < 0)
    return report;
  if (oracle.distance(0, 4).compare(Rational(2)) >= 0) return report;

  report.hypotheses_hold = true;
  report.conclusion_holds = oracle.distance(2, 5).compare(Rational(2)) >= 0;
  return report;
}

}  // namespace dgp
