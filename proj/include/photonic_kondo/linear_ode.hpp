#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "photonic_kondo/vec3.hpp"

namespace pkondo {

// Constant-coefficient linear system dx/dt = M x + b used as an independent
// oracle against the closed-form solutions.
struct LinearSystem {
    std::size_t dimension = 0;            // at most 12
    std::vector<Complex> matrix;          // row-major dimension x dimension
    std::vector<Complex> inhomogeneity;   // length dimension
    std::vector<Complex> initial;         // length dimension
};

// Largest row sum of |matrix|, a cheap eigenvalue bound used for the step
// stability guard.
double row_sum_norm(const LinearSystem& system);

// Classical fixed-step fourth-order Runge-Kutta.  The step is shrunk
// uniformly so the final time is hit exactly.  Samples at every step,
// including t = 0.  Throws StepTooLarge when step > 0.1 / row_sum_norm and
// InvalidParameter on inconsistent sizes.
std::vector<std::pair<double, std::vector<Complex>>> integrate_rk4(const LinearSystem& system,
                                                                   double t_max, double step);

// Integrates to t at a default step and at half that step; returns the
// max-norm difference at t divided by 15, the standard fourth-order
// extrapolated error estimate.
double richardson_check(const LinearSystem& system, double t);

}  // namespace pkondo
