#pragma once

#include "dgp/polygon.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dgp {

// Companion data emitted with a generated polygon: named vertices, critical
// target points (spike tips, corridor depths) that exact checks must cover,
// attachment edges for corridors, and the list of strict inequalities that
// were certified during generation.
struct GadgetReport {
  std::string kind;
  std::map<std::string, size_t> labels;
  std::vector<Point> targets;
  std::vector<std::pair<size_t, size_t>> ports;
  std::vector<std::string> certified;
};

// A monotone 3-CNF clause: three literals over variable indices, either all
// positive or all negative.
struct Literal {
  size_t var = 0;
  bool negated = false;
};

struct Clause {
  std::array<Literal, 3> lits;
  bool negative() const { return lits[0].negated; }
};

// Planar monotone 3-SAT instance. Positive clauses attach above the variable
// row, negative ones below; `depth` gives the nesting order per side (0 =
// innermost). For the desk-scale instances handled here the depths are only
// used for horizontal staggering.
struct MonotoneFormula {
  size_t variable_count = 0;
  std::vector<Clause> clauses;
  std::vector<int> depth;  // parallel to clauses; empty = all zero

  void validate() const;  // throws ParseError on structural violations
};

bool satisfiable(const MonotoneFormula& formula);

struct ReductionResult {
  Polygon polygon;
  GadgetReport report;
};

// Paper instance generators.
Polygon gen_godfried(size_t spikes);
Polygon gen_dumbbell(size_t k, const Rational& eps, const Rational& zeta);
std::pair<Polygon, GadgetReport> gen_similar_edges(const Rational& eps);

// Hardness gadgets (closed polygons: attachment edges carry stub corridors
// when generated standalone).
std::pair<Polygon, GadgetReport> gen_variable_gadget();
std::pair<Polygon, GadgetReport> gen_clause_gadget();
std::pair<Polygon, GadgetReport> gen_split_gadget(const Rational& eps);
std::pair<Polygon, GadgetReport> gen_connector_gadget();

// Full reduction from planar monotone 3-SAT to dispersive guarding with
// threshold 2 on a polygon (with holes when the incidence graph has cycles).
ReductionResult reduce(const MonotoneFormula& formula);

// Random simple polygon on an integer grid (2-opt uncrossing), rescaled so
// the minimum pairwise geodesic vertex distance is at least 1.
Polygon gen_random_simple(size_t n, unsigned seed);

}  // namespace dgp
