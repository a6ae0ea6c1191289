#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "condgrad/subproblem.hpp"

namespace condgrad {

struct SolverConfig {
  double eps = 1e-6;  // stop when |theta| <= eps
  std::size_t max_iter = 1000;
  bool record_trajectory = false;
};

// One row per solved subproblem. step is the step length taken FROM this
// iterate; the final record of a run keeps step = 0 because no step was
// taken from it.
struct IterationRecord {
  std::size_t k = 0;
  Vec x;
  Vec f;
  double theta = 0.0;
  Vec p;
  double step = 0.0;
  double elapsed_s = 0.0;
};

enum class SolveStatus { Critical, MaxIterations, SubproblemUnbounded };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Critical: return "Critical";
    case SolveStatus::MaxIterations: return "MaxIterations";
    case SolveStatus::SubproblemUnbounded: return "SubproblemUnbounded";
  }
  return "?";
}

inline SolveStatus solve_status_from_string(const std::string& s) {
  if (s == "Critical") return SolveStatus::Critical;
  if (s == "MaxIterations") return SolveStatus::MaxIterations;
  if (s == "SubproblemUnbounded") return SolveStatus::SubproblemUnbounded;
  throw std::invalid_argument("unknown solve status '" + s + "'");
}

struct SolveResult {
  SolveStatus status = SolveStatus::Critical;
  Vec final_x;
  double final_theta = 0.0;
  std::size_t iterations = 0;
  std::size_t gradient_evaluations = 0;  // one Jacobian per subproblem, = iterations + 1
  double elapsed_s = 0.0;
  std::vector<IterationRecord> trajectory;  // populated iff config.record_trajectory
};

// t = min{1, |theta| / (L ||p - x||^2)}. Requires theta < 0 and p != x;
// both hold at every non-critical iterate, so a violation indicates a
// subproblem bug rather than bad user input.
inline double adaptive_step(double theta, const Vec& p, const Vec& x, double lipschitz_L) {
  if (!(theta < 0.0)) throw std::invalid_argument("adaptive_step: theta must be negative");
  if (!(lipschitz_L > 0.0)) throw std::invalid_argument("adaptive_step: L must be positive");
  const double dist2 = squared_norm(subtract(p, x));
  if (dist2 == 0.0) throw std::runtime_error("adaptive_step: p == x with negative theta");
  return std::min(1.0, -theta / (lipschitz_L * dist2));
}

// Main loop: solve the linearised subproblem, stop once |theta| <= eps,
// otherwise step x <- x + t (p - x) with the adaptive step size. Iterates
// stay feasible (convex combinations of feasible points).
inline SolveResult condg_solve(const MultiObjectiveProblem& prob, const Vec& x0,
                               const SolverConfig& config = {}) {
  if (!(config.eps > 0.0)) throw std::invalid_argument("condg_solve: eps must be positive");
  if (config.max_iter < 1) throw std::invalid_argument("condg_solve: max_iter must be positive");
  if (x0.size() != prob.n) throw std::invalid_argument("condg_solve: x0 has wrong dimension");
  if (!membership(prob.region, x0)) throw std::invalid_argument("initial point infeasible");

  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  SolveResult out;
  Vec x = x0;
  SubproblemSolution sub = solve_subproblem(prob, x);
  out.gradient_evaluations = 1;
  std::size_t k = 0;
  while (true) {
    if (sub.status == SubproblemStatus::UnboundedBelow) {
      out.status = SolveStatus::SubproblemUnbounded;
      out.final_theta = -kInfinity;
      break;
    }
    if (config.record_trajectory)
      out.trajectory.push_back(
          {k, x, eval_objectives(prob, x), sub.theta, sub.p, 0.0, elapsed()});
    if (std::abs(sub.theta) <= config.eps) {
      out.status = SolveStatus::Critical;
      out.final_theta = sub.theta;
      break;
    }
    if (k >= config.max_iter) {
      out.status = SolveStatus::MaxIterations;
      out.final_theta = sub.theta;
      break;
    }
    const double t = adaptive_step(sub.theta, sub.p, x, prob.lipschitz_L);
    if (config.record_trajectory) out.trajectory.back().step = t;
    for (std::size_t j = 0; j < prob.n; ++j) x[j] += t * sub.direction[j];
    sub = solve_subproblem(prob, x);
    ++out.gradient_evaluations;
    ++k;
  }
  out.final_x = std::move(x);
  out.iterations = k;
  out.elapsed_s = elapsed();
  return out;
}

// Worst slack of the per-iteration componentwise descent inequality
//   F(x_{k+1}) - F(x_k) <= -1/2 min{theta_k^2 / (L ||p_k - x_k||^2), -theta_k} e
// over all consecutive recorded pairs and objectives. A run satisfies the
// inequality when the returned value is <= tol::descent.
inline double verify_descent(const MultiObjectiveProblem& prob,
                             const std::vector<IterationRecord>& trajectory) {
  if (trajectory.size() < 2)
    throw std::invalid_argument("verify_descent: need at least two records");
  double worst = -kInfinity;
  for (std::size_t k = 0; k + 1 < trajectory.size(); ++k) {
    const IterationRecord& cur = trajectory[k];
    const IterationRecord& nxt = trajectory[k + 1];
    const double dist2 = squared_norm(subtract(cur.p, cur.x));
    if (!(dist2 > 0.0)) throw std::runtime_error("verify_descent: zero step direction mid-run");
    const double rhs =
        -0.5 * std::min(cur.theta * cur.theta / (prob.lipschitz_L * dist2), -cur.theta);
    for (std::size_t i = 0; i < prob.m; ++i)
      worst = std::max(worst, nxt.f[i] - cur.f[i] - rhs);
  }
  return worst;
}

// Post-hoc objective-gap rate constants over a recorded run:
//   rho   = max_k max_i ||grad F_i(x_k)||
//   sigma = max_k ||p_k - x_k||
//   beta  = min{1/(2 rho sigma), 1/(2 L sigma^2)}
// and the per-iteration bound min_i(F_i(x_k) - F_i(x_ref)) <= 1/(beta k).
// Only meaningful for convex problems; the suprema in the constants are
// realised as maxima over the recorded (finite) trajectory.
struct RateCertificate {
  double rho = 0.0;
  double sigma = 0.0;
  double beta = 0.0;
  std::vector<double> bounds;  // 1/(beta k) for each recorded k >= 1
  bool passed = false;
};

inline RateCertificate rate_certificate(const MultiObjectiveProblem& prob,
                                        const std::vector<IterationRecord>& trajectory,
                                        const Vec& x_ref) {
  if (!prob.is_convex) throw std::invalid_argument("rate certificate requires convexity");
  if (trajectory.empty()) throw std::invalid_argument("rate_certificate: empty trajectory");
  if (x_ref.size() != prob.n) throw std::invalid_argument("rate_certificate: x_ref dimension");

  RateCertificate cert;
  for (const IterationRecord& rec : trajectory) {
    const Matrix jac = eval_jacobian(prob, rec.x);
    for (std::size_t i = 0; i < prob.m; ++i) cert.rho = std::max(cert.rho, norm(jac.row(i)));
    cert.sigma = std::max(cert.sigma, norm(subtract(rec.p, rec.x)));
  }
  if (cert.sigma == 0.0) {
    // No step was ever proposed (critical start); nothing to bound.
    cert.beta = kInfinity;
    cert.passed = true;
    return cert;
  }
  cert.beta = std::min(1.0 / (2.0 * cert.rho * cert.sigma),
                       1.0 / (2.0 * prob.lipschitz_L * cert.sigma * cert.sigma));
  cert.passed = true;
  const Vec f_ref = eval_objectives(prob, x_ref);
  for (const IterationRecord& rec : trajectory) {
    if (rec.k < 1) continue;
    double gap = kInfinity;
    for (std::size_t i = 0; i < prob.m; ++i) gap = std::min(gap, rec.f[i] - f_ref[i]);
    const double bound = 1.0 / (cert.beta * static_cast<double>(rec.k));
    cert.bounds.push_back(bound);
    if (gap > bound + tol::rate) cert.passed = false;
  }
  return cert;
}

inline RateCertificate rate_certificate(const MultiObjectiveProblem& prob,
                                        const std::vector<IterationRecord>& trajectory) {
  if (trajectory.empty()) throw std::invalid_argument("rate_certificate: empty trajectory");
  return rate_certificate(prob, trajectory, trajectory.back().x);
}

inline std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Columns: k, x_1..x_n, F_1..F_m, theta, t, elapsed_s.
inline void write_trajectory_csv(std::ostream& os, const std::vector<IterationRecord>& trajectory) {
  if (trajectory.empty()) throw std::invalid_argument("write_trajectory_csv: empty trajectory");
  const std::size_t n = trajectory.front().x.size();
  const std::size_t m = trajectory.front().f.size();
  os << "k";
  for (std::size_t j = 0; j < n; ++j) os << ",x_" << j + 1;
  for (std::size_t i = 0; i < m; ++i) os << ",F_" << i + 1;
  os << ",theta,t,elapsed_s\n";
  for (const IterationRecord& rec : trajectory) {
    os << rec.k;
    for (std::size_t j = 0; j < n; ++j) os << ',' << format_g17(rec.x[j]);
    for (std::size_t i = 0; i < m; ++i) os << ',' << format_g17(rec.f[i]);
    os << ',' << format_g17(rec.theta) << ',' << format_g17(rec.step) << ','
       << format_g17(rec.elapsed_s) << '\n';
  }
}

}  // namespace condgrad
