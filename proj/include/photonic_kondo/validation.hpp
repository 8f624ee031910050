#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "photonic_kondo/model.hpp"

namespace pkondo {

// Outcome of one self-check: the worst observed deviation of its dominant
// part against that part's tolerance, a per-part breakdown in detail, and
// the wall time (checked against seconds_limit when nonzero).
struct CheckResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
    double seconds = 0.0;
    double seconds_limit = 0.0;
};

// Deterministic driven configuration hitting the prescribed lambda =
// Omega/Gamma and tilt psi exactly (up to rounding).  The drive axis sits at
// polar angle theta, azimuth chi; the precession frequency is normalized to
// 1, so Gamma = 1/lambda.  Requires 0 < theta and theta + psi < pi.
DrivenConfig config_for(double lambda, double psi, double theta, double chi,
                        double carrier = 100.0);

// Pair of configurations with tilts psi and pi - psi sharing identical
// exchange, photon density and decay rate, for the reflection-symmetry check.
// drive_weight is the common ratio Omega0 / Omega, in (0, 1].
std::pair<DrivenConfig, DrivenConfig> mirror_configs(double lambda, double psi,
                                                     double drive_weight);

// Uniformly random unit vector.
Vec3 sample_unit(std::mt19937_64& rng);

// Random configuration with log-uniform lambda and uniform psi.
DrivenConfig sample_config(std::mt19937_64& rng, double lambda_lo = 0.1, double lambda_hi = 50.0,
                           double psi_lo = 1e-3, double psi_hi = 3.140592653589793);

// Self-checks backing the validate command.  Each compares an independent
// computational path (Runge-Kutta oracle, exact identity, structural scan)
// against the closed-form implementation.
CheckResult check_bloch_oracle(std::size_t n_configs = 1000);
CheckResult check_correlator_oracle(std::size_t n_configs = 500);
CheckResult check_purity_limits(std::size_t n_configs = 200);
CheckResult check_power_conservation(std::size_t n_configs = 200);
CheckResult check_inelastic_vanishing();
CheckResult check_spectral_symmetry();
CheckResult check_outgoing_field(std::size_t n_configs = 500);
CheckResult check_g2_laws(std::size_t n_configs = 500);
CheckResult check_three_peaks();

// Runs every check; fast mode cuts the random-config counts tenfold.
std::vector<CheckResult> run_all_checks(bool fast = false);

}  // namespace pkondo
