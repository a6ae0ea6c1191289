#pragma once

namespace condgrad::tol {

// Numeric tolerances shared across the solver stack. The LP pivot tolerance
// anchors the scale; the membership and certificate tolerances sit an order
// of magnitude to either side so verdicts do not flap on pivot noise.
inline constexpr double lp = 1e-9;           // simplex pivot / reduced-cost threshold
inline constexpr double feasibility = 1e-8;  // polyhedron membership slack
inline constexpr double a1 = 1e-9;           // recession-direction violation threshold
inline constexpr double cone_zero = 1e-7;    // "direction is numerically zero" threshold
inline constexpr double subproblem = 1e-9;   // allowed positive excursion of theta
inline constexpr double descent = 1e-8;      // per-iteration descent inequality slack
inline constexpr double rate = 1e-8;         // objective-gap rate bound slack

}  // namespace condgrad::tol
