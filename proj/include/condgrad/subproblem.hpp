#pragma once

#include <cmath>
#include <stdexcept>

#include "condgrad/problem.hpp"

namespace condgrad {

enum class SubproblemStatus { Solved, UnboundedBelow };

// Solution of the linearised minimax subproblem at a feasible point x:
// p minimises max_i <grad F_i(x), u - x> over the region, theta is the
// optimal value (nonpositive; zero exactly at Pareto critical points) and
// direction = p - x. UnboundedBelow means the linearisation has no
// minimiser, which on an unbounded region signals that some recession
// direction decreases every objective -- the solver aborts on it rather
// than stepping to infinity.
struct SubproblemSolution {
  SubproblemStatus status = SubproblemStatus::Solved;
  Vec p;
  double theta = 0.0;
  Vec direction;
};

// Epigraph reformulation: variables (u, gamma), minimise gamma subject to
// <grad F_i(x), u> - gamma <= <grad F_i(x), x> and u in the region. The pair
// (u, gamma) = (x, 0) is always feasible, so the LP cannot be infeasible.
inline SubproblemSolution solve_subproblem(const MultiObjectiveProblem& prob, const Vec& x) {
  if (x.size() != prob.n) throw std::invalid_argument("solve_subproblem: x has wrong dimension");
  if (!membership(prob.region, x)) throw std::invalid_argument("solve_subproblem: x is infeasible");
  const std::size_t n = prob.n;
  const std::size_t m = prob.m;
  const std::size_t p = prob.region.num_rows();
  const Matrix jac = eval_jacobian(prob, x);

  Vec c(n + 1, 0.0);
  c[n] = 1.0;
  Matrix rows(m + p, n + 1);
  Vec rhs(m + p, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = jac(i, j);
    rows(i, n) = -1.0;
    rhs[i] = dot(jac.row(i), x);
  }
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t j = 0; j < n; ++j) rows(m + r, j) = prob.region.a(r, j);
    rhs[m + r] = prob.region.b[r];
  }

  const LpSolution sol =
      solve_lp(LinearProgram::free_vars(std::move(c), std::move(rows), std::move(rhs)));
  if (sol.status == LpStatus::Unbounded)
    return SubproblemSolution{SubproblemStatus::UnboundedBelow, {}, 0.0, {}};
  if (sol.status != LpStatus::Optimal)
    throw std::runtime_error("solve_subproblem: epigraph LP reported infeasible");

  SubproblemSolution out;
  out.p.assign(sol.x.begin(), sol.x.begin() + static_cast<long>(n));
  out.direction = subtract(out.p, x);
  // theta is recomputed from the returned minimiser so the pair (p, theta)
  // is consistent to roundoff.
  double theta = -kInfinity;
  for (std::size_t i = 0; i < m; ++i) theta = std::max(theta, dot(jac.row(i), out.direction));
  out.theta = theta;
  return out;
}

inline bool is_pareto_critical(const SubproblemSolution& sol, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("is_pareto_critical: eps must be positive");
  if (sol.status != SubproblemStatus::Solved)
    throw std::invalid_argument("is_pareto_critical: subproblem had no minimiser");
  return std::abs(sol.theta) <= eps;
}

}  // namespace condgrad
