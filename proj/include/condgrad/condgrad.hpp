#pragma once

// Conditional gradient method for multiobjective optimization over closed
// convex polyhedral regions, bounded or not. Umbrella header.

#include "condgrad/linalg.hpp"
#include "condgrad/tolerances.hpp"
#include "condgrad/rng.hpp"
#include "condgrad/lp.hpp"
#include "condgrad/geometry.hpp"
#include "condgrad/problem.hpp"
#include "condgrad/a1.hpp"
#include "condgrad/subproblem.hpp"
#include "condgrad/solver.hpp"
#include "condgrad/bench.hpp"
