#pragma once

#include "dgp/triangulation.hpp"
#include "dgp/verifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgp {

// One placement or branch decision; label names the case of the decision
// tree that fired ("start", "path", "pre-c", "1", "1b", "2a.i", ...,
// "unmatched" for configurations outside the schematic).
struct TraceRecord {
  std::string label;
  size_t vertex = SIZE_MAX;  // placed guard, SIZE_MAX for pure decisions
};

struct GuardSet {
  std::vector<size_t> guards;
  std::optional<Length> dispersion;  // nullopt = infinite (|guards| <= 1)
  bool covers = false;
  std::vector<TraceRecord> trace;
};

// Guard placement with dispersion >= 2 for simple polygons whose vertices
// have pairwise geodesic distance >= 1. Walks the caterpillar partition,
// placing guards on unseen vertices (always >= 2 away from all previous
// guards, since an unseen vertex is separated by a reflex bend) and running
// the foot-triangle decision tree where the local configuration matches the
// schematic. Every placement is re-checked exactly at runtime.
class Placer {
 public:
  explicit Placer(Polygon poly);

  GuardSet run();

 private:
  struct Pattern;  // resolved schematic labels a..i and triangles 1..8

  bool covered(const Triangle& t);
  bool sees_vertex(size_t from, size_t to);
  bool seen_by_any_guard(size_t v);
  bool far_from_all_guards(size_t v);  // geodesic >= 2 to every guard
  void place(size_t v, const std::string& label);

  void process_caterpillar(const Caterpillar& cat);
  void cover_triangle(const Triangle& t, const Caterpillar& cat,
                      size_t path_pos);

  std::optional<Pattern> match_pattern(const Caterpillar& cat, size_t p,
                                       size_t a);
  // Returns true if the decision tree ran to completion (placements applied).
  bool run_foot_cases(const Pattern& pat);
  bool reflex_wrt(size_t u, size_t v, size_t w, const Point& ref) const;

  Verifier ver_;
  Triangulation tri_;
  CaterpillarPartition part_;
  std::vector<size_t> guards_;
  std::vector<TraceRecord> trace_;
};

GuardSet place_guards(const Polygon& poly);

}  // namespace dgp
