#pragma once

#include <vector>

#include "photonic_kondo/model.hpp"

namespace pkondo {

// Polarization unresolved inelastic spectral density on a grid of reduced
// detunings nu = (omega - carrier) / Omega, plus the weight of the elastic
// carrier line (the delta contribution, in units of photon flux).
struct SpectrumUnresolved {
    std::vector<double> nu;
    std::vector<double> inelastic;
    double elastic_weight = 0.0;
};

// Detector-resolved spectrum: the unresolved density, the projection of the
// vector-valued inelastic density on the detector axis and their sum, the
// resolved density seen by the detector.  elastic_vector_weight is the
// detector projection of the elastic outgoing Jones vector; added to
// base.elastic_weight it gives the resolved carrier-line weight.
struct SpectrumResolved {
    Vec3 detector;
    SpectrumUnresolved base;
    std::vector<double> vector_part;
    std::vector<double> resolved;
    double elastic_vector_weight = 0.0;
};

// Average outgoing field: its Jones vector and the ellipticity angle
// theta = arccos(e_z . s_q / |s_q|) in degrees.
struct OutgoingField {
    Vec3 s_q;
    double theta_deg = 0.0;
};

// Energy bookkeeping for the scattered light.  total and inelastic are the
// closed-form powers; numeric is quadrature over the grid plus the analytic
// Lorentzian tail correction, and should reproduce total.
struct PowerReport {
    double total = 0.0;
    double inelastic = 0.0;
    double numeric = 0.0;
    double elastic_weight = 0.0;
    double inelastic_flux = 0.0;
    double tail_fraction = 0.0;  // |tail correction| / inelastic power
};

// Weight of the elastic carrier line, f [1 - (3/2)(1 - gamma_st) sin^2(phi/2)].
double c0_elastic(const DrivenConfig& config);

// Elastic outgoing Jones vector, the zero-delay elastic correlator
// cs_zero + (f/4)(1 - gamma_st) sin^2(phi/2) (n_cl - 4 S_st).
Vec3 elastic_outgoing(const DrivenConfig& config);

// Inelastic first-order correlator at delay tau, carrier factor excluded:
// f sin^2(phi/2) [<S(t+tau).S(t)> - S_st^2 + i n_cl.<S(t+tau) x S(t)>].
Complex c0_inelastic(const DrivenConfig& config, double tau);

// Three-Lorentzian inelastic density sampled on nu_grid.  Requires a strictly
// increasing grid; throws NoDissipation when gamma = 0 and ZeroEffectiveField
// on degenerate configs (the reduced detuning divides by Omega).
SpectrumUnresolved spectrum_unresolved(const DrivenConfig& config,
                                       const std::vector<double>& nu_grid);

// Detector-resolved density for a unit detector axis n_d.
SpectrumResolved spectrum_resolved(const DrivenConfig& config, const Vec3& n_d,
                                   const std::vector<double>& nu_grid);

// Elastic outgoing Jones vector, computed from the average-field scattering
// matrix acting on the amplitudes and cross-checked internally against the
// closed form of the elastic correlator at zero delay.  pol must reproduce
// the photon density and axis of the config.
OutgoingField outgoing_field(const DrivenConfig& config, const JonesPolarization& pol);

// Total and inelastic scattered power; numeric power integrates the density
// over nu_grid (composite Simpson) and adds analytic tail corrections.
// Throws GridTooNarrow when the grid spans less than [-50, 50] or the tail
// correction exceeds 1% of the inelastic power.
PowerReport power_accounting(const DrivenConfig& config, const std::vector<double>& nu_grid);

// Uniform grid helper: n points spanning [lo, hi] inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

}  // namespace pkondo
