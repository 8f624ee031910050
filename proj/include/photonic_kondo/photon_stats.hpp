#pragma once

#include <vector>

#include "photonic_kondo/model.hpp"

namespace pkondo {

// Unscaled photon-correlation vector K(tau).  It obeys the same
// decaying-precession equation as the Bloch vector with fixed point
// source_norm * S_st; source_norm is m.C_s(0) for a detector channel and the
// photon density f for the scalar channel.  Kept unscaled so detector
// directions with m.C_s(0) = 0 stay finite.
struct KVector {
    double tau = 0.0;
    Vec3 value;
    double source_norm = 0.0;
};

// The four second-order combinations entering the coincidence rate.
struct GCombination {
    double tau = 0.0;
    double nm = 0.0;         // G_{n,m}
    double n0 = 0.0;         // G_{n,0}
    double zero_m = 0.0;     // G_{0,m}
    double zero_zero = 0.0;  // G_{0,0}
};

// Normalized coincidence curve for detector axes n (later photon) and m.
struct G2Curve {
    Vec3 n;
    Vec3 m;
    std::vector<double> taus;
    std::vector<double> values;
};

// Stationary outgoing spin density C_s(0) =
// (f/2)[cos^2(phi/2) n_cl + 2 sin^2(phi/2) S_st - sin(phi) n_cl x S_st].
Vec3 cs_zero(const DrivenConfig& config);

// Initial condition of the detector channel m (unit vector), or of the
// scalar channel when m is omitted.
KVector k_initial(const DrivenConfig& config, const Vec3& m);
KVector k_initial(const DrivenConfig& config);

// Propagates a K vector by delay tau through the shared decaying-precession
// code path (identical to the Bloch propagator).
KVector k_evolve(const DrivenConfig& config, const KVector& k0, double tau);

// Second-order combinations at delay tau for unit detector axes n, m.
GCombination g_combinations(const DrivenConfig& config, const Vec3& n, const Vec3& m, double tau);

// Normalized coincidence rate, evaluated through the closed form.  Throws
// DetectorDark when either single-detector rate vanishes.
double g2(const DrivenConfig& config, const Vec3& n, const Vec3& m, double tau);

// g2 evaluated from the ratio of G combinations at tau and tau -> infinity;
// agrees with g2 to rounding and is used as an internal cross-check.
double g2_from_combinations(const DrivenConfig& config, const Vec3& n, const Vec3& m, double tau);

// Coincidence curve on a uniform delay grid of n_samples points in [0, tau_max].
G2Curve g2_curve(const DrivenConfig& config, const Vec3& n, const Vec3& m, double tau_max,
                 std::size_t n_samples);

}  // namespace pkondo
