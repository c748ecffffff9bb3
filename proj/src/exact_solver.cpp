#include "dgp/exact_solver.hpp"

#include "dgp/errors.hpp"
#include "dgp/triangulation.hpp"

#include <algorithm>
#include <random>

namespace dgp {

ExactSolver::ExactSolver(Polygon poly, SolverOptions opt)
    : ver_(std::move(poly)), opt_(std::move(opt)) {
  const Polygon& p = ver_.polygon();
  if (p.vertex_count() > opt_.max_vertices)
    throw PreconditionError("instance too large for exact solver");

  for (size_t v = 0; v < p.vertex_count(); ++v) add_element(p.vertex(v));
  for (const Point& t : opt_.targets) add_element(t);
  if (!p.has_holes()) {
    Triangulation tri = triangulate(p);
    for (const Triangle& t : tri.triangles)
      add_element(centroid(
          {p.vertex(t.v[0]), p.vertex(t.v[1]), p.vertex(t.v[2])}));
  } else {
    Rational xmin = p.vertex(0).x, xmax = xmin;
    Rational ymin = p.vertex(0).y, ymax = ymin;
    for (size_t v = 1; v < p.vertex_count(); ++v) {
      xmin = std::min(xmin, p.vertex(v).x);
      xmax = std::max(xmax, p.vertex(v).x);
      ymin = std::min(ymin, p.vertex(v).y);
      ymax = std::max(ymax, p.vertex(v).y);
    }
    std::mt19937 rng(opt_.seed);
    std::uniform_int_distribution<long> d(0, (1L << 20) - 1);
    int found = 0;
    for (long tries = 0; found < opt_.samples && tries < 40L * opt_.samples;
         ++tries) {
      Point q{xmin + Rational(d(rng), 1L << 20) * (xmax - xmin),
              ymin + Rational(d(rng), 1L << 20) * (ymax - ymin)};
      if (p.contains(q) == Containment::Interior) {
        add_element(q);
        ++found;
      }
    }
  }
}

void ExactSolver::add_element(const Point& p) { universe_.push_back(p); }

bool ExactSolver::element_seen(size_t v, size_t e) {
  if (seen_.size() < ver_.polygon().vertex_count())
    seen_.resize(ver_.polygon().vertex_count());
  auto& row = seen_[v];
  if (row.size() <= e) {
    size_t old = row.size();
    row.resize(universe_.size(), 2);
    for (size_t k = old; k < row.size(); ++k) row[k] = 2;
  }
  if (row[e] == 2)
    row[e] = ver_.polygon().sees(ver_.polygon().vertex(v), universe_[e]) ? 1 : 0;
  return row[e] == 1;
}

bool ExactSolver::covers_universe(const std::vector<size_t>& guards) {
  for (size_t e = 0; e < universe_.size(); ++e) {
    bool ok = false;
    for (size_t g : guards) {
      if (element_seen(g, e)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool ExactSolver::covers_exactly(const std::vector<size_t>& guards) {
  if (!covers_universe(guards)) return false;
  if (ver_.polygon().has_holes()) return true;  // universe is the contract
  Verdict v = ver_.verify_solution(guards, Rational(0));
  if (v.covers) return true;
  // Counterexample-guided refinement: remember the uncovered witness so the
  // search cannot propose this gap again.
  add_element(*v.uncovered_witness);
  return false;
}

bool ExactSolver::conflict(size_t u, size_t v, const Length& ell) {
  return ver_.oracle().distance(u, v).compare(ell) < 0;
}

bool ExactSolver::dfs(const Length& ell, std::vector<char>& available,
                      std::vector<char>& covered, size_t covered_count) {
  if (covered_count == universe_.size()) return true;
  const size_t n = ver_.polygon().vertex_count();
  // Branch on the uncovered element with the fewest candidate coverers.
  size_t best_e = universe_.size();
  std::vector<size_t> best_cands;
  for (size_t e = 0; e < universe_.size(); ++e) {
    if (covered[e]) continue;
    std::vector<size_t> cands;
    for (size_t v = 0; v < n; ++v) {
      if (available[v] && element_seen(v, e)) cands.push_back(v);
    }
    if (best_e == universe_.size() || cands.size() < best_cands.size()) {
      best_e = e;
      best_cands = std::move(cands);
      if (best_cands.empty()) return false;
    }
  }
  for (size_t v : best_cands) {
    std::vector<char> avail2 = available;
    std::vector<char> cov2 = covered;
    size_t cnt2 = covered_count;
    avail2[v] = 0;
    for (size_t u = 0; u < n; ++u) {
      if (avail2[u] && conflict(u, v, ell)) avail2[u] = 0;
    }
    for (size_t e = 0; e < universe_.size(); ++e) {
      if (!cov2[e] && element_seen(v, e)) {
        cov2[e] = 1;
        ++cnt2;
      }
    }
    if (dfs(ell, avail2, cov2, cnt2)) return true;
  }
  return false;
}

bool ExactSolver::feasible(const Length& ell, const std::vector<size_t>& forced,
                           size_t forbidden_below) {
  const size_t n = ver_.polygon().vertex_count();
  std::vector<char> available(n, 1);
  for (size_t v = 0; v < forbidden_below && v < n; ++v) available[v] = 0;
  for (size_t f : forced) {
    available[f] = 0;
    for (size_t u = 0; u < n; ++u) {
      if (available[u] && conflict(u, f, ell)) available[u] = 0;
    }
  }
  for (size_t i = 0; i < forced.size(); ++i) {
    for (size_t j = i + 1; j < forced.size(); ++j) {
      if (conflict(forced[i], forced[j], ell)) return false;
    }
  }
  std::vector<char> covered(universe_.size(), 0);
  size_t count = 0;
  for (size_t e = 0; e < universe_.size(); ++e) {
    for (size_t f : forced) {
      if (element_seen(f, e)) {
        covered[e] = 1;
        ++count;
        break;
      }
    }
  }
  return dfs(ell, available, covered, count);
}

std::optional<std::vector<size_t>> ExactSolver::lex_least(const Length& ell) {
  if (!feasible(ell, {}, 0)) return std::nullopt;
  const size_t n = ver_.polygon().vertex_count();
  std::vector<size_t> chosen;
  for (size_t v = 0; v < n && !covers_universe(chosen); ++v) {
    std::vector<size_t> with = chosen;
    with.push_back(v);
    if (feasible(ell, with, v + 1)) chosen = std::move(with);
  }
  if (!covers_universe(chosen))
    throw InternalError("lexicographic reconstruction failed");
  return chosen;
}

std::optional<std::vector<size_t>> ExactSolver::exists_guard_set(
    const Length& ell) {
  for (;;) {
    auto sol = lex_least(ell);
    if (!sol) return std::nullopt;
    if (covers_exactly(*sol)) return sol;
    // covers_exactly extended the universe; search again.
  }
}

std::optional<std::vector<size_t>> ExactSolver::exists_guard_set(
    const Rational& ell) {
  if (ell < 0) throw PreconditionError("negative dispersion threshold");
  return exists_guard_set(Length::of(ell));
}

std::uint64_t ExactSolver::count_covering_sets(const Rational& ell) {
  const size_t n = ver_.polygon().vertex_count();
  if (n > 20)
    throw PreconditionError("instance too large for exhaustive counting");
  const Length L = Length::of(ell);
  std::uint64_t count = 0;
  std::vector<size_t> chosen;
  // Enumerate independent sets of the conflict graph; check coverage on each.
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == n) {
      if (!chosen.empty() && covers_exactly(chosen)) ++count;
      return;
    }
    self(self, idx + 1);
    for (size_t u : chosen) {
      if (conflict(u, idx, L)) return;
    }
    chosen.push_back(idx);
    self(self, idx + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
  return count;
}

std::pair<std::optional<Length>, std::vector<size_t>>
ExactSolver::optimal_dispersion() {
  const size_t n = ver_.polygon().vertex_count();
  for (size_t v = 0; v < n; ++v) {
    if (covers_exactly({v})) return {std::nullopt, {v}};
  }
  // The optimum is attained as some pairwise geodesic distance.
  std::vector<Length> cands;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j)
      cands.push_back(ver_.oracle().distance(i, j));
  }
  std::sort(cands.begin(), cands.end(),
            [](const Length& a, const Length& b) { return a < b; });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Length& a, const Length& b) {
                            return a.compare(b) == 0;
                          }),
              cands.end());
  long lo = 0, hi = static_cast<long>(cands.size()) - 1, best = -1;
  std::vector<size_t> best_set;
  while (lo <= hi) {
    long mid = (lo + hi) / 2;
    auto sol = exists_guard_set(cands[mid]);
    if (sol) {
      best = mid;
      best_set = *sol;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  if (best < 0)
    throw InternalError("no covering guard set at the smallest distance");
  return {cands[best], best_set};
}

}  // namespace dgp
