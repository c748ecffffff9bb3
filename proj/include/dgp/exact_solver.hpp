#pragma once

#include "dgp/lemma5.hpp"
#include "dgp/verifier.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dgp {

struct SolverOptions {
  size_t max_vertices = 48;
  // Exact must-cover points (gadget-critical targets) for polygons with
  // holes, where no exact visibility region machinery exists.
  std::vector<Point> targets;
  int samples = 2000;  // interior sample points (holes only)
  unsigned seed = 1;
};

// Ground-truth search over vertex guard sets: existence of a covering set
// with dispersion >= ell, exact solution counting, and the optimal
// dispersion. For simple polygons, coverage is certified exactly via
// counterexample-guided refinement against the verifier; for polygons with
// holes, coverage means covering all vertices, targets, and samples (an
// "exists" answer of none is then still exact, since the constraints are
// only relaxed).
class ExactSolver {
 public:
  explicit ExactSolver(Polygon poly, SolverOptions opt = {});

  // Lexicographically least covering set with all pairwise geodesic
  // distances >= ell, or nullopt.
  std::optional<std::vector<size_t>> exists_guard_set(const Length& ell);
  std::optional<std::vector<size_t>> exists_guard_set(const Rational& ell);

  // Number of vertex sets that cover the polygon and have dispersion >= ell.
  // Exhaustive over independent sets; vertex count must be <= 20.
  std::uint64_t count_covering_sets(const Rational& ell);

  // (optimum, lexicographically least realizing set); nullopt = infinite
  // (a single vertex covers everything).
  std::pair<std::optional<Length>, std::vector<size_t>> optimal_dispersion();

  Verifier& verifier() { return ver_; }

 private:
  bool element_seen(size_t v, size_t e);
  void add_element(const Point& p);
  bool covers_universe(const std::vector<size_t>& guards);
  // True coverage including refinement (exact for simple polygons).
  bool covers_exactly(const std::vector<size_t>& guards);
  bool conflict(size_t u, size_t v, const Length& ell);
  bool dfs(const Length& ell, std::vector<char>& available,
           std::vector<char>& covered, size_t covered_count);
  bool feasible(const Length& ell, const std::vector<size_t>& forced,
                size_t forbidden_below);
  std::optional<std::vector<size_t>> lex_least(const Length& ell);

  Verifier ver_;
  SolverOptions opt_;
  std::vector<Point> universe_;
  // seen_[v][e]: vertex v sees universe element e (lazily extended).
  std::vector<std::vector<char>> seen_;
};

}  // namespace dgp
