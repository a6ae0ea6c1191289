#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "condgrad/linalg.hpp"
#include "condgrad/tolerances.hpp"

namespace condgrad {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

// min <c, x>  s.t.  a_ub x <= b_ub,  lower <= x <= upper.
// Bound entries may be -inf / +inf.
struct LinearProgram {
  Vec c;
  Matrix a_ub;
  Vec b_ub;
  Vec lower;
  Vec upper;

  std::size_t num_vars() const { return c.size(); }
  std::size_t num_rows() const { return b_ub.size(); }

  static LinearProgram free_vars(Vec c_, Matrix a, Vec b) {
    const std::size_t n = c_.size();
    return LinearProgram{std::move(c_), std::move(a), std::move(b), Vec(n, -kInfinity),
                         Vec(n, kInfinity)};
  }
};

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Vec x;                   // present iff Optimal
  double objective = 0.0;  // present iff Optimal
  Vec ray;                 // certified improving direction, present iff Unbounded
  std::size_t pivots = 0;
};

namespace detail {

enum class VarKind { Shifted, Mirrored, Split };

struct VarMap {
  VarKind kind;
  std::size_t col;  // first standard-form column
  double offset;    // x = offset + y (Shifted), x = offset - y (Mirrored)
};

struct Tableau {
  std::size_t ns = 0;                // structural columns
  std::size_t width = 0;             // total columns, rhs last
  std::size_t first_artificial = 0;  // columns >= this are artificial
  std::vector<Vec> rows;
  std::vector<std::size_t> basis;  // basic column per row
  std::vector<bool> allowed;       // columns eligible to enter

  double rhs(std::size_t i) const { return rows[i][width - 1]; }
};

inline void subtract_scaled(Vec& target, const Vec& source, double factor) {
  if (factor == 0.0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * source[j];
}

inline void pivot(Tableau& t, std::vector<Vec*> cost_rows, std::size_t r, std::size_t jc) {
  Vec& prow = t.rows[r];
  const double pe = prow[jc];
  if (std::abs(pe) <= tol::lp) throw std::runtime_error("lp: degenerate pivot element");
  for (double& v : prow) v /= pe;
  prow[jc] = 1.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i == r) continue;
    subtract_scaled(t.rows[i], prow, t.rows[i][jc]);
    t.rows[i][jc] = 0.0;
  }
  for (Vec* cr : cost_rows) {
    subtract_scaled(*cr, prow, (*cr)[jc]);
    (*cr)[jc] = 0.0;
  }
  t.basis[r] = jc;
}

// Bland's rule: lowest-index eligible column with a negative reduced cost.
inline long entering_column(const Tableau& t, const Vec& cost) {
  for (std::size_t j = 0; j + 1 < t.width; ++j)
    if (t.allowed[j] && cost[j] < -tol::lp) return static_cast<long>(j);
  return -1;
}

// Minimum-ratio row; ties resolved toward the smallest basic variable index
// (Bland's anti-cycling rule). -1 when no row blocks the entering column.
inline long leaving_row(const Tableau& t, std::size_t jc) {
  long best = -1;
  double best_ratio = 0.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double a = t.rows[i][jc];
    if (a <= tol::lp) continue;
    const double ratio = t.rhs(i) / a;
    if (best < 0) {
      best = static_cast<long>(i);
      best_ratio = ratio;
      continue;
    }
    const double window = 1e-12 * (1.0 + std::abs(best_ratio));
    if (ratio < best_ratio - window) {
      best = static_cast<long>(i);
      best_ratio = ratio;
    } else if (ratio <= best_ratio + window && t.basis[i] < t.basis[static_cast<std::size_t>(best)]) {
      best = static_cast<long>(i);
      best_ratio = std::min(best_ratio, ratio);
    }
  }
  return best;
}

}  // namespace detail

// Two-phase dense tableau simplex with Bland's rule. Free variables are
// split into nonnegative parts, lower bounds shifted out, and two-sided
// bounds turned into an extra row, so phase-one assembly sees one uniform
// standard form. Unbounded verdicts carry a re-verified improving ray.
//
// max_pivots = 0 selects the default cap of 10 * (rows + vars + finite
// bounds) pivots across both phases.
inline LpSolution solve_lp(const LinearProgram& lp, std::size_t max_pivots = 0) {
  const std::size_t n = lp.num_vars();
  const std::size_t p = lp.num_rows();
  if (n == 0) throw std::invalid_argument("lp: no variables");
  if (lp.a_ub.rows != p) throw std::invalid_argument("lp: constraint row count mismatch");
  if (p > 0 && lp.a_ub.cols != n) throw std::invalid_argument("lp: constraint column count mismatch");
  if (lp.lower.size() != n || lp.upper.size() != n)
    throw std::invalid_argument("lp: bound vector length mismatch");

  std::size_t finite_bounds = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = lp.lower[j], hi = lp.upper[j];
    if (std::isnan(lo) || std::isnan(hi)) throw std::invalid_argument("lp: NaN bound");
    if (std::isfinite(lo)) ++finite_bounds;
    if (std::isfinite(hi)) ++finite_bounds;
    if (std::isfinite(lo) && std::isfinite(hi) && lo > hi)
      throw std::invalid_argument("lp: lower bound exceeds upper bound");
  }
  if (max_pivots == 0) max_pivots = 10 * (p + n + finite_bounds);

  // Variable mapping into nonnegative standard form.
  std::vector<detail::VarMap> vmap(n);
  std::size_t ns = 0;
  struct BoxRow {
    std::size_t col;
    double range;
  };
  std::vector<BoxRow> box_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = lp.lower[j], hi = lp.upper[j];
    if (std::isfinite(lo)) {
      vmap[j] = {detail::VarKind::Shifted, ns, lo};
      if (std::isfinite(hi)) box_rows.push_back({ns, hi - lo});
      ++ns;
    } else if (std::isfinite(hi)) {
      vmap[j] = {detail::VarKind::Mirrored, ns, hi};
      ++ns;
    } else {
      vmap[j] = {detail::VarKind::Split, ns, 0.0};
      ns += 2;
    }
  }

  // Rows in structural coordinates: coeffs | rhs.
  const std::size_t rows_n = p + box_rows.size();
  std::vector<Vec> raw(rows_n, Vec(ns + 1, 0.0));
  for (std::size_t i = 0; i < p; ++i) {
    double rhs = lp.b_ub[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double a = lp.a_ub(i, j);
      const auto& vm = vmap[j];
      switch (vm.kind) {
        case detail::VarKind::Shifted:
          raw[i][vm.col] += a;
          rhs -= a * vm.offset;
          break;
        case detail::VarKind::Mirrored:
          raw[i][vm.col] -= a;
          rhs -= a * vm.offset;
          break;
        case detail::VarKind::Split:
          raw[i][vm.col] += a;
          raw[i][vm.col + 1] -= a;
          break;
      }
    }
    raw[i][ns] = rhs;
  }
  for (std::size_t k = 0; k < box_rows.size(); ++k) {
    raw[p + k][box_rows[k].col] = 1.0;
    raw[p + k][ns] = box_rows[k].range;
  }

  // Tableau: structural | slack | artificial | rhs. Rows whose rhs came out
  // negative are negated (surplus slack) and given an artificial variable.
  std::size_t na = 0;
  for (const auto& r : raw)
    if (r[ns] < 0.0) ++na;
  detail::Tableau t;
  t.ns = ns;
  t.first_artificial = ns + rows_n;
  t.width = ns + rows_n + na + 1;
  t.rows.assign(rows_n, Vec(t.width, 0.0));
  t.basis.resize(rows_n);
  t.allowed.assign(t.width - 1, true);
  std::size_t next_art = t.first_artificial;
  for (std::size_t i = 0; i < rows_n; ++i) {
    const double sgn = raw[i][ns] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < ns; ++j) t.rows[i][j] = sgn * raw[i][j];
    t.rows[i][ns + i] = sgn;
    t.rows[i][t.width - 1] = sgn * raw[i][ns];
    if (sgn < 0.0) {
      t.rows[i][next_art] = 1.0;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = ns + i;
    }
  }

  Vec c_std(t.width - 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& vm = vmap[j];
    switch (vm.kind) {
      case detail::VarKind::Shifted: c_std[vm.col] += lp.c[j]; break;
      case detail::VarKind::Mirrored: c_std[vm.col] -= lp.c[j]; break;
      case detail::VarKind::Split:
        c_std[vm.col] += lp.c[j];
        c_std[vm.col + 1] -= lp.c[j];
        break;
    }
  }

  std::size_t pivots = 0;
  auto spend_pivot = [&] {
    if (++pivots > max_pivots) throw std::runtime_error("lp: pivot limit exceeded (cycling suspected)");
  };

  // Phase one: minimise the sum of artificials.
  if (na > 0) {
    Vec w(t.width, 0.0);
    for (std::size_t j = t.first_artificial; j + 1 < t.width; ++j) w[j] = 1.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      if (t.basis[i] >= t.first_artificial) detail::subtract_scaled(w, t.rows[i], w[t.basis[i]]);
    while (true) {
      const long jc = detail::entering_column(t, w);
      if (jc < 0) break;
      const long r = detail::leaving_row(t, static_cast<std::size_t>(jc));
      if (r < 0) throw std::runtime_error("lp: phase-one column unbounded");
      spend_pivot();
      detail::pivot(t, {&w}, static_cast<std::size_t>(r), static_cast<std::size_t>(jc));
    }
    double infeas = 0.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      if (t.basis[i] >= t.first_artificial) infeas += t.rhs(i);
    if (infeas > tol::lp) return LpSolution{LpStatus::Infeasible, {}, 0.0, {}, pivots};

    // Drive leftover artificials out of the basis; a row that offers no
    // pivot is redundant and dropped.
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basis[i] < t.first_artificial) continue;
      long jc = -1;
      for (std::size_t j = 0; j < t.first_artificial; ++j)
        if (std::abs(t.rows[i][j]) > tol::lp) {
          jc = static_cast<long>(j);
          break;
        }
      if (jc >= 0) {
        spend_pivot();
        detail::pivot(t, {&w}, i, static_cast<std::size_t>(jc));
      } else {
        drop.push_back(i);
      }
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      t.rows.erase(t.rows.begin() + static_cast<long>(*it));
      t.basis.erase(t.basis.begin() + static_cast<long>(*it));
    }
    for (std::size_t j = t.first_artificial; j + 1 < t.width; ++j) t.allowed[j] = false;
  }

  // Phase two.
  Vec z(t.width, 0.0);
  for (std::size_t j = 0; j + 1 < t.width; ++j) z[j] = c_std[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    detail::subtract_scaled(z, t.rows[i], z[t.basis[i]]);
  while (true) {
    const long jc = detail::entering_column(t, z);
    if (jc < 0) break;
    const long r = detail::leaving_row(t, static_cast<std::size_t>(jc));
    if (r < 0) {
      // Unbounded: increasing column jc improves the objective with no
      // blocking row. Reconstruct and certify the ray in original space.
      Vec yray(ns, 0.0);
      if (static_cast<std::size_t>(jc) < ns) yray[static_cast<std::size_t>(jc)] = 1.0;
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < ns) yray[t.basis[i]] = -t.rows[i][static_cast<std::size_t>(jc)];
      Vec d(n, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const auto& vm = vmap[j];
        switch (vm.kind) {
          case detail::VarKind::Shifted: d[j] = yray[vm.col]; break;
          case detail::VarKind::Mirrored: d[j] = -yray[vm.col]; break;
          case detail::VarKind::Split: d[j] = yray[vm.col] - yray[vm.col + 1]; break;
        }
      }
      double scale = 0.0;
      for (double v : d) scale = std::max(scale, std::abs(v));
      if (scale <= tol::lp) throw std::runtime_error("lp: unbounded verdict without a moving variable");
      for (double& v : d) v /= scale;
      for (std::size_t i = 0; i < p; ++i)
        if (dot(lp.a_ub.row(i), d) > tol::cone_zero)
          throw std::runtime_error("lp: unbounded ray failed constraint re-verification");
      if (dot(lp.c, d) >= 0.0) throw std::runtime_error("lp: unbounded ray does not improve the objective");
      return LpSolution{LpStatus::Unbounded, {}, 0.0, std::move(d), pivots};
    }
    spend_pivot();
    detail::pivot(t, {&z}, static_cast<std::size_t>(r), static_cast<std::size_t>(jc));
  }

  Vec y(ns, 0.0);
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < ns) y[t.basis[i]] = t.rhs(i);
  Vec x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& vm = vmap[j];
    switch (vm.kind) {
      case detail::VarKind::Shifted: x[j] = vm.offset + y[vm.col]; break;
      case detail::VarKind::Mirrored: x[j] = vm.offset - y[vm.col]; break;
      case detail::VarKind::Split: x[j] = y[vm.col] - y[vm.col + 1]; break;
    }
  }
  const double objective = dot(lp.c, x);
  return LpSolution{LpStatus::Optimal, std::move(x), objective, {}, pivots};
}

}  // namespace condgrad
