#pragma once

#include "dgp/geometry.hpp"

#include <array>

namespace dgp {

// The heptagon inequality: for a simple heptagon v1..v7 in counterclockwise
// order with all pairwise geodesic vertex distances >= 1, delta(v1,v5) < 2,
// and reflex interior angles at v2, v4, v7, the distance delta(v3,v6) is
// >= 2. `hypotheses_hold` is false when any assumption fails (including the
// points not forming a simple counterclockwise heptagon); `conclusion_holds`
// is only meaningful when the hypotheses hold.
struct Lemma5Report {
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
};

Lemma5Report check_lemma5(const std::array<Point, 7>& v);

}  // namespace dgp
