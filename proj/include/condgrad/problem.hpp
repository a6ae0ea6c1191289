#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "condgrad/geometry.hpp"
#include "condgrad/rng.hpp"

namespace condgrad {

// A differentiable multiobjective instance: m objectives over a polyhedral
// feasible region, with exact gradients and a known Lipschitz constant of
// the gradient maps (lipschitz_L = max over objectives). Instances are
// immutable after construction and safe to share across concurrent solves.
struct MultiObjectiveProblem {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::function<Vec(const Vec&)> objective_eval;    // x -> (F_1(x), ..., F_m(x))
  std::function<Matrix(const Vec&)> jacobian_eval;  // x -> m x n, row i = grad F_i(x)
  double lipschitz_L = 0.0;
  Polyhedron region;
  bool is_convex = false;  // every objective convex on the region
  Vec sample_lo;           // rejection-sampling window for feasible starts
  Vec sample_hi;
};

inline Vec eval_objectives(const MultiObjectiveProblem& prob, const Vec& x) {
  if (x.size() != prob.n) throw std::invalid_argument("eval_objectives: x has wrong dimension");
  Vec f = prob.objective_eval(x);
  if (f.size() != prob.m) throw std::runtime_error("eval_objectives: objective map returned wrong size");
  return f;
}

inline Matrix eval_jacobian(const MultiObjectiveProblem& prob, const Vec& x) {
  if (x.size() != prob.n) throw std::invalid_argument("eval_jacobian: x has wrong dimension");
  Matrix j = prob.jacobian_eval(x);
  if (j.rows != prob.m || j.cols != prob.n)
    throw std::runtime_error("eval_jacobian: jacobian map returned wrong shape");
  return j;
}

// Central-difference validation of the analytic Jacobian. Entry (i, j) is
// |fd_ij - J_ij| / max(1, |J_ij|) with fd the symmetric difference of F_i
// along coordinate j.
inline Matrix check_gradients(const MultiObjectiveProblem& prob, const Vec& x, double h = 1e-6) {
  if (x.size() != prob.n) throw std::invalid_argument("check_gradients: x has wrong dimension");
  if (!(h > 0.0)) throw std::invalid_argument("check_gradients: h must be positive");
  const Matrix jac = eval_jacobian(prob, x);
  Matrix err(prob.m, prob.n);
  Vec xp = x, xm = x;
  for (std::size_t j = 0; j < prob.n; ++j) {
    xp[j] = x[j] + h;
    xm[j] = x[j] - h;
    const Vec fp = eval_objectives(prob, xp);
    const Vec fm = eval_objectives(prob, xm);
    for (std::size_t i = 0; i < prob.m; ++i) {
      const double fd = (fp[i] - fm[i]) / (2.0 * h);
      err(i, j) = std::abs(fd - jac(i, j)) / std::max(1.0, std::abs(jac(i, j)));
    }
    xp[j] = x[j];
    xm[j] = x[j];
  }
  return err;
}

// Uniform rejection sampling of a feasible point from the problem's window.
inline Vec sample_feasible(const MultiObjectiveProblem& prob, SplitMix64& rng,
                           std::size_t max_tries = 100000) {
  if (prob.sample_lo.size() != prob.n || prob.sample_hi.size() != prob.n)
    throw std::invalid_argument("sample_feasible: sampling window has wrong dimension");
  Vec x(prob.n);
  for (std::size_t t = 0; t < max_tries; ++t) {
    for (std::size_t j = 0; j < prob.n; ++j)
      x[j] = rng.next_double(prob.sample_lo[j], prob.sample_hi[j]);
    if (membership(prob.region, x)) return x;
  }
  throw std::runtime_error("sample_feasible: rejection sampling exhausted");
}

// Built-in two-objective test problems on unbounded planar regions.
//
//   ex1:  F = (x1 + 0.01 (x2+0.5)^2,  0.01 (x1+0.5)^2 + x2)
//         region x >= 0, x1 + x2 >= 1, x2 >= 0.5; both objectives convex,
//         gradient Lipschitz constant 0.02 (constant diagonal Hessians).
//   ex2:  F = (-x1 + 2 x2,  x1 + 0.5 sin(x2) + 1.1 x2)
//         region x2 >= 0.5 |x1|; second objective non-convex, gradient
//         Lipschitz constant 0.5 (|d^2 F_2 / dx2^2| = |0.5 sin(x2)| <= 0.5).
inline MultiObjectiveProblem builtin_problem(const std::string& name) {
  if (name == "ex1") {
    return MultiObjectiveProblem{
        "ex1",
        2,
        2,
        [](const Vec& x) {
          return Vec{x[0] + 0.01 * (x[1] + 0.5) * (x[1] + 0.5),
                     0.01 * (x[0] + 0.5) * (x[0] + 0.5) + x[1]};
        },
        [](const Vec& x) {
          return Matrix{{1.0, 0.02 * (x[1] + 0.5)}, {0.02 * (x[0] + 0.5), 1.0}};
        },
        0.02,
        Polyhedron(Matrix{{-1, 0}, {0, -1}, {-1, -1}, {0, -1}}, Vec{0, 0, -1, -0.5}),
        true,
        Vec{0, 0},
        Vec{5, 5}};
  }
  if (name == "ex2") {
    return MultiObjectiveProblem{
        "ex2",
        2,
        2,
        [](const Vec& x) {
          return Vec{-x[0] + 2.0 * x[1], x[0] + 0.5 * std::sin(x[1]) + 1.1 * x[1]};
        },
        [](const Vec& x) {
          return Matrix{{-1.0, 2.0}, {1.0, 0.5 * std::cos(x[1]) + 1.1}};
        },
        0.5,
        Polyhedron(Matrix{{0.5, -1}, {-0.5, -1}}, Vec{0, 0}),
        false,
        Vec{-5, 0},
        Vec{5, 5}};
  }
  throw std::invalid_argument("unknown problem '" + name + "'");
}

inline std::vector<std::string> builtin_problem_names() { return {"ex1", "ex2"}; }

}  // namespace condgrad
