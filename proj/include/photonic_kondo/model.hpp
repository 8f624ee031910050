#pragma once

#include "photonic_kondo/vec3.hpp"

namespace pkondo {

// Lambda-type emitter in a chiral waveguide: couplings of the two ground
// states to the excited level, the transition frequency of that level and the
// two-photon detuning of the drive.
struct EmitterSpec {
    double g_plus = 0.0;
    double g_minus = 0.0;
    double transition_freq = 0.0;  // must be positive
    double detuning = 0.0;
};

// Effective exchange couplings after adiabatic elimination of the excited
// level.  anisotropic is set when the parallel and perpendicular values
// differ; dynamics entry points accept the isotropic case only.
struct KondoCouplings {
    double isotropic = 0.0;      // J, meaningful when !anisotropic
    double parallel = 0.0;       // J_par = 2(g+^2 + g-^2) / omega3
    double perpendicular = 0.0;  // J_perp = 4 g+ g- / omega3
    bool anisotropic = false;
};

// Parameters of the isotropic photonic Kondo model.
struct KondoParams {
    double exchange = 0.0;        // J >= 0
    double photon_density = 0.0;  // f = linear photon density of the drive
    double detuning = 0.0;        // two-photon detuning
    double carrier = 0.0;         // carrier frequency of the drive
};

// Circular amplitudes of a classical drive pulse of quantization length
// `length`; photon density and Stokes-like spin density derive from these.
struct JonesPolarization {
    Complex alpha_plus{0.0, 0.0};
    Complex alpha_minus{0.0, 0.0};
    double length = 1.0;
};

// Intensive drive quantities: photon density f, photon spin density s_cl and
// the unit polarization axis n_cl = 2 s_cl / f.
struct JonesState {
    double photon_density = 0.0;
    Vec3 spin_density;
    Vec3 axis;
};

// A fully derived drive configuration.  All dynamics modules consume this.
struct DrivenConfig {
    KondoParams params;
    Vec3 n_cl;               // drive polarization axis, unit length
    double phi = 0.0;        // scattering phase 2 atan(pi J)
    double lamb_shift = 0.0; // Omega0 = pi J f cos^2(phi/2)
    Vec3 h_eff;              // effective field Omega0 n_cl + delta e_z
    double omega = 0.0;      // precession frequency |h_eff|
    double gamma = 0.0;      // spin decay rate (pi/2) J f sin(phi)
    Vec3 n_h;                // effective field axis
    double lambda_ratio = 0.0;  // omega / gamma, +inf when gamma = 0
    double psi = 0.0;        // angle between n_h and n_cl
    bool degenerate_axis = false;  // set when omega = 0 and n_h was defaulted
};

// Maps emitter data to exchange couplings.  Throws InvalidParameter when the
// transition frequency is not positive.
KondoCouplings derive_kondo_coupling(const EmitterSpec& emitter);

// Isotropic model parameters from emitter data.  Throws InvalidParameter when
// the couplings are anisotropic (g_plus != g_minus).
KondoParams params_from_emitter(const EmitterSpec& emitter, double photon_density,
                                double carrier);

// Scattering phase phi = 2 atan(pi J) in [0, pi).  Throws InvalidParameter
// for negative exchange.
double scattering_phase(double exchange);

// Photon density, spin density and polarization axis of a drive pulse.
// Throws ZeroField when both amplitudes vanish and InvalidParameter for a
// non-positive length.
JonesState jones_from_amplitudes(const JonesPolarization& pol);

// Circular amplitudes realizing a given axis and photon density (inverse of
// jones_from_amplitudes up to a global phase).
JonesPolarization polarization_for(const Vec3& axis, double photon_density,
                                   double length = 1.0);

// Derives every drive quantity from model parameters and a unit polarization
// axis.  When the effective field vanishes, n_h defaults to e_z and the
// config is flagged degenerate.
DrivenConfig build_driven_config(const KondoParams& params, const Vec3& n_cl);

}  // namespace pkondo
