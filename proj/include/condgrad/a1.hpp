#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "condgrad/problem.hpp"

namespace condgrad {

// Outcome of the gradient/recession-cone compatibility check. On failure the
// witness fields carry a sampled feasible point, a nonzero recession
// direction d with <grad F_i(x), d> <= 0 for every objective, and the index
// of the most violated objective. samples_checked records that the
// certificate is sampled, not universal.
struct A1Report {
  bool holds = true;
  std::optional<Vec> witness_point;
  std::optional<std::size_t> witness_gradient_index;
  std::optional<Vec> witness_direction;
  std::size_t samples_checked = 0;
};

// Certifies, at sampled feasible points, the condition that keeps the
// linearised subproblem solvable on an unbounded region: no nonzero
// recession direction may have nonpositive inner product with every
// objective gradient at once. Bounded regions pass trivially.
//
// Two LP stages per sample, both over the recession cone cut to the unit
// box (compact, so always solvable):
//   1. minimise the worst-case gradient inner product max_i <g_i, d>; a
//      value below -a1_tol is a strict violation and the minimiser is the
//      witness;
//   2. push each coordinate in both directions subject to <g_i, d> <= 0 for
//      all i; any nonzero optimum exposes a flat direction (boundary case),
//      also a violation.
inline A1Report check_assumption_a1(const MultiObjectiveProblem& prob, std::size_t sample_count,
                                    std::uint64_t seed) {
  const std::size_t n = prob.n;
  const std::size_t m = prob.m;
  const PolyhedralCone cone = recession_cone(prob.region);
  const std::size_t pc = cone.a.rows;
  if (is_bounded(cone)) return A1Report{true, {}, {}, {}, 0};

  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < sample_count; ++s) {
    const Vec x = sample_feasible(prob, rng);
    const Matrix jac = eval_jacobian(prob, x);

    const auto violation = [&](Vec d) {
      std::size_t worst = 0;
      double worst_val = kInfinity;
      for (std::size_t i = 0; i < m; ++i) {
        const double v = dot(jac.row(i), d);
        if (v < worst_val) {
          worst_val = v;
          worst = i;
        }
      }
      return A1Report{false, x, worst, std::move(d), s + 1};
    };

    // Stage 1: epigraph variables (d, gamma), minimise gamma.
    {
      Vec c(n + 1, 0.0);
      c[n] = 1.0;
      Matrix rows(m + pc, n + 1);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows(i, j) = jac(i, j);
        rows(i, n) = -1.0;
      }
      for (std::size_t r = 0; r < pc; ++r)
        for (std::size_t j = 0; j < n; ++j) rows(m + r, j) = cone.a(r, j);
      Vec lo(n + 1, -1.0), hi(n + 1, 1.0);
      lo[n] = -kInfinity;
      hi[n] = kInfinity;
      const LpSolution sol = solve_lp(LinearProgram{c, rows, Vec(m + pc, 0.0), lo, hi});
      if (sol.status != LpStatus::Optimal)
        throw std::runtime_error("check_assumption_a1: stage-1 LP failed");
      if (sol.objective < -tol::a1) return violation(Vec(sol.x.begin(), sol.x.begin() + n));
    }

    // Stage 2: boundary probe.
    Matrix rows(m + pc, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) rows(i, j) = jac(i, j);
    for (std::size_t r = 0; r < pc; ++r)
      for (std::size_t j = 0; j < n; ++j) rows(m + r, j) = cone.a(r, j);
    for (std::size_t j = 0; j < n; ++j) {
      for (const double sgn : {1.0, -1.0}) {
        Vec c(n, 0.0);
        c[j] = -sgn;
        const LpSolution sol =
            solve_lp(LinearProgram{c, rows, Vec(m + pc, 0.0), Vec(n, -1.0), Vec(n, 1.0)});
        if (sol.status != LpStatus::Optimal)
          throw std::runtime_error("check_assumption_a1: stage-2 LP failed");
        if (-sol.objective > tol::cone_zero) return violation(sol.x);
      }
    }
  }
  return A1Report{true, {}, {}, {}, sample_count};
}

}  // namespace condgrad
