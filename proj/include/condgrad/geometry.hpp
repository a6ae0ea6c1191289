#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>

#include "condgrad/linalg.hpp"
#include "condgrad/lp.hpp"
#include "condgrad/tolerances.hpp"

namespace condgrad {

// Closed convex polyhedron {x : a x <= b}, possibly unbounded. Construction
// proves the region nonempty with a phase-one LP and keeps the feasible
// point it found. Immutable by convention after construction.
struct Polyhedron {
  Matrix a;  // p x n
  Vec b;     // p
  Vec feasible_point;

  Polyhedron(Matrix a_in, Vec b_in) : a(std::move(a_in)), b(std::move(b_in)) {
    if (a.rows != b.size()) throw std::invalid_argument("polyhedron: row count mismatch");
    if (a.cols == 0) throw std::invalid_argument("polyhedron: dimension must be positive");
    LpSolution sol = solve_lp(LinearProgram::free_vars(Vec(a.cols, 0.0), a, b));
    if (sol.status != LpStatus::Optimal)
      throw std::invalid_argument("polyhedron: feasible region is empty");
    feasible_point = std::move(sol.x);
  }

  std::size_t dim() const { return a.cols; }
  std::size_t num_rows() const { return a.rows; }
};

inline bool membership(const Polyhedron& region, std::span<const double> x) {
  if (x.size() != region.dim()) throw std::invalid_argument("membership: dimension mismatch");
  for (std::size_t i = 0; i < region.num_rows(); ++i)
    if (dot(region.a.row(i), x) - region.b[i] > tol::feasibility) return false;
  return true;
}

// {d : a d <= 0}: the directions along which the parent region recedes.
struct PolyhedralCone {
  Matrix a;

  std::size_t dim() const { return a.cols; }

  bool contains(std::span<const double> d) const {
    if (d.size() != dim()) throw std::invalid_argument("cone: dimension mismatch");
    for (std::size_t i = 0; i < a.rows; ++i)
      if (dot(a.row(i), d) > tol::cone_zero) return false;
    return true;
  }
};

inline PolyhedralCone recession_cone(const Polyhedron& region) { return PolyhedralCone{region.a}; }

// True iff the cone is {0}, i.e. the parent region is bounded. Each
// coordinate is pushed in both directions over the cone cut to the unit box;
// the cuts make every LP compact, so the verdict is exact up to tolerance.
inline bool is_bounded(const PolyhedralCone& cone) {
  const std::size_t n = cone.dim();
  for (std::size_t j = 0; j < n; ++j) {
    for (const double sgn : {1.0, -1.0}) {
      Vec c(n, 0.0);
      c[j] = -sgn;  // minimising -sgn*d_j maximises sgn*d_j
      LpSolution sol =
          solve_lp(LinearProgram{c, cone.a, Vec(cone.a.rows, 0.0), Vec(n, -1.0), Vec(n, 1.0)});
      if (sol.status != LpStatus::Optimal) throw std::runtime_error("is_bounded: cone LP failed");
      if (-sol.objective > tol::cone_zero) return false;
    }
  }
  return true;
}

}  // namespace condgrad
