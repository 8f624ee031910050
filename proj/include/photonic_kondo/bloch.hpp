#pragma once

#include <vector>

#include "photonic_kondo/model.hpp"

namespace pkondo {

// Uniformly sampled Bloch trajectory with purity recorded per sample.
struct BlochTrajectory {
    std::vector<double> times;
    std::vector<Vec3> states;
    std::vector<double> purities;
};

// Right-hand side of the dissipative Bloch equation
// ds/dt = h_eff x s - gamma (s - n_cl / 2).
Vec3 bloch_rhs(const DrivenConfig& config, const Vec3& s);

// Decaying-precession propagator shared by the Bloch solution and the
// photon-correlation vector: fixed_point + exp(-gamma t) [parallel part +
// rotating transverse part] of (v0 - fixed_point) about n_h.
Vec3 relax_toward(const DrivenConfig& config, const Vec3& fixed_point, const Vec3& v0, double t);

// Closed-form solution of the Bloch equation.  Exact s0 at t = 0; valid for
// gamma = 0 (pure precession).  Throws InvalidParameter for t < 0.
Vec3 bloch_evolve(const DrivenConfig& config, const Vec3& s0, double t);

// Stationary Bloch vector
// [n_cl + lambda n_h x n_cl + lambda^2 cos(psi) n_h] / (2 (1 + lambda^2)).
// Throws NoDissipation when gamma = 0.
Vec3 stationary_bloch(const DrivenConfig& config);

// Purity gamma = (1 + 4 |s|^2) / 2 of a Bloch vector.
double purity(const Vec3& s);

// Stationary purity [1 + (lambda^2/4)(3 + cos 2 psi)] / (1 + lambda^2).
// Throws NoDissipation when gamma = 0.
double stationary_purity(const DrivenConfig& config);

// Complement 1 - stationary_purity computed without cancellation as
// lambda^2 sin^2(psi) / (2 (1 + lambda^2)); exact zero for psi = 0.
double stationary_purity_deficit(const DrivenConfig& config);

// Closed-form trajectory on a uniform grid of n_samples points spanning
// [0, t_max] inclusive; n_samples >= 2.
BlochTrajectory evolve_trajectory(const DrivenConfig& config, const Vec3& s0, double t_max,
                                  std::size_t n_samples);

}  // namespace pkondo
