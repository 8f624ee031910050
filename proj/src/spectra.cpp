#include "photonic_kondo/spectra.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numbers>

#include "photonic_kondo/bloch.hpp"
#include "photonic_kondo/correlators.hpp"
#include "photonic_kondo/errors.hpp"
#include "photonic_kondo/photon_stats.hpp"

namespace pkondo {

namespace {

constexpr double pi = std::numbers::pi;

void require_spectral(const DrivenConfig& config) {
    if (!(config.gamma > 0.0)) {
        throw NoDissipation("spectral densities require a positive decay rate");
    }
    if (config.degenerate_axis || !(config.omega > 0.0)) {
        throw ZeroEffectiveField("reduced detuning is undefined for a zero effective field");
    }
}

void require_grid(const std::vector<double>& nu_grid) {
    if (nu_grid.size() < 2) {
        throw InvalidParameter("frequency grid needs at least two points");
    }
    for (std::size_t i = 1; i < nu_grid.size(); ++i) {
        if (!(nu_grid[i] > nu_grid[i - 1])) {
            throw InvalidParameter("frequency grid must be strictly increasing");
        }
    }
}

// Slopes and centers of the three Lorentzian lines: the numerator of line b
// is 1 + kappa[b] (nu - center[b]).
struct LineShape {
    std::array<double, 3> kappa;
    std::array<double, 3> center;
};

LineShape line_shape(const DrivenConfig& config) {
    const double c = std::cos(config.psi);
    return {{c, -0.5 * (1.0 + c), 0.5 * (1.0 - c)}, {0.0, 1.0, -1.0}};
}

// Integrates samples on a uniform grid with composite Simpson (trapezoid on
// the last interval when the point count is even).
double integrate_uniform(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
    double acc = 0.0;
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) {
        acc += (h / 3.0) * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
    }
    if (i + 1 < n) {
        acc += 0.5 * h * (y[i] + y[i + 1]);
    }
    return acc;
}

bool is_uniform(const std::vector<double>& x) {
    const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (std::abs(x[i] - x[i - 1] - h) > 1e-9 * std::max(1.0, std::abs(h))) return false;
    }
    return true;
}

double integrate_trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        acc += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    }
    return acc;
}

}  // namespace

Vec3 elastic_outgoing(const DrivenConfig& config) {
    if (config.phi == 0.0) {
        return 0.5 * config.params.photon_density * config.n_cl;
    }
    const Vec3 sst = stationary_bloch(config);
    const double sin_half = std::sin(0.5 * config.phi);
    const double deficit = stationary_purity_deficit(config);
    return cs_zero(config) + 0.25 * config.params.photon_density * sin_half * sin_half * deficit *
                                 (config.n_cl - 4.0 * sst);
}

double c0_elastic(const DrivenConfig& config) {
    if (config.phi == 0.0) {
        return config.params.photon_density;
    }
    const double sin_half = std::sin(0.5 * config.phi);
    return config.params.photon_density *
           (1.0 - 1.5 * stationary_purity_deficit(config) * sin_half * sin_half);
}

Complex c0_inelastic(const DrivenConfig& config, double tau) {
    const UnresolvedCorrelators u = unresolved_correlators(config, tau);
    const Vec3 sst = stationary_bloch(config);
    const double sin_half = std::sin(0.5 * config.phi);
    return config.params.photon_density * sin_half * sin_half *
           (u.dot + Complex{0.0, 1.0} * u.cross_cl - dot(sst, sst));
}

SpectrumUnresolved spectrum_unresolved(const DrivenConfig& config,
                                       const std::vector<double>& nu_grid) {
    require_spectral(config);
    require_grid(nu_grid);
    const double lam = config.lambda_ratio;
    const double sin_half = std::sin(0.5 * config.phi);
    const double pref = config.params.photon_density * stationary_purity_deficit(config) *
                        sin_half * sin_half / config.gamma;
    const LineShape lines = line_shape(config);
    SpectrumUnresolved out;
    out.nu = nu_grid;
    out.elastic_weight = c0_elastic(config);
    out.inelastic.reserve(nu_grid.size());
    for (double nu : nu_grid) {
        double density = 0.0;
        for (int b = 0; b < 3; ++b) {
            const double u = nu - lines.center[b];
            density += (1.0 + lines.kappa[b] * u) / (1.0 + lam * lam * u * u);
        }
        out.inelastic.push_back(pref * density);
    }
    return out;
}

SpectrumResolved spectrum_resolved(const DrivenConfig& config, const Vec3& n_d,
                                   const std::vector<double>& nu_grid) {
    if (std::abs(norm(n_d) - 1.0) > 1e-9) {
        throw InvalidParameter("detector axis must be unit length");
    }
    SpectrumResolved out;
    out.detector = n_d;
    out.base = spectrum_unresolved(config, nu_grid);
    const double lam = config.lambda_ratio;
    const double lam2 = lam * lam;
    const double lp = 1.0 + lam2;
    const double c = std::cos(config.psi);
    const double sin_half = std::sin(0.5 * config.phi);
    const double pref = 0.5 * config.params.photon_density * sin_half * sin_half *
                        stationary_purity_deficit(config) / config.omega;
    const Vec3 binormal = cross(config.n_cl, config.n_h);
    // Detector projections of the three basis vectors.
    const double pc = dot(n_d, config.n_cl);
    const double ph = dot(n_d, config.n_h);
    const double pv = dot(n_d, binormal);
    out.vector_part.reserve(nu_grid.size());
    out.resolved.reserve(nu_grid.size());
    for (std::size_t i = 0; i < nu_grid.size(); ++i) {
        const double nu = nu_grid[i];
        const double l0 = 1.0 / (lam2 * nu * nu + 1.0);
        const double lm = 1.0 / (lam2 * (nu - 1.0) * (nu - 1.0) + 1.0);
        const double lpl = 1.0 / (lam2 * (nu + 1.0) * (nu + 1.0) + 1.0);
        double acc = -(lam * pc - 2.0 * lam * c * ph + pv) * l0 + lam * nu * ph * l0;
        acc += (2.0 * lam * pc + 2.0 * lam * (1.0 + lam2 - c) * ph + (1.0 - lam2) * pv) * lm /
               (2.0 * lp);
        acc -= lam * (nu - 1.0) *
               ((1.0 - lam2) * pc + (1.0 + lam2 + 2.0 * lam2 * c) * ph - 2.0 * lam * pv) * lm /
               (2.0 * lp);
        acc += (2.0 * lam * pc - 2.0 * lam * (1.0 + lam2 + c) * ph + (1.0 - lam2) * pv) * lpl /
               (2.0 * lp);
        acc += lam * (nu + 1.0) *
               ((1.0 - lam2) * pc - (1.0 + lam2 - 2.0 * lam2 * c) * ph - 2.0 * lam * pv) * lpl /
               (2.0 * lp);
        const double vec = pref * acc;
        out.vector_part.push_back(vec);
        out.resolved.push_back(out.base.inelastic[i] + vec);
    }
    out.elastic_vector_weight = dot(n_d, elastic_outgoing(config));
    return out;
}

OutgoingField outgoing_field(const DrivenConfig& config, const JonesPolarization& pol) {
    const JonesState js = jones_from_amplitudes(pol);
    const double f = config.params.photon_density;
    if (std::abs(js.photon_density - f) > 1e-9 * std::max(1.0, f) ||
        norm(js.axis - config.n_cl) > 1e-9) {
        throw InvalidParameter("polarization amplitudes inconsistent with the drive config");
    }
    Vec3 sst{};
    if (config.phi != 0.0) {
        sst = stationary_bloch(config);
    }
    const Complex ephi{std::cos(config.phi), std::sin(config.phi)};
    const Complex scatter = 0.5 * (1.0 - ephi);
    const Complex pass = 0.25 * (3.0 + ephi);
    // U = scatter * (sigma . S_st) + pass * identity in the (+,-) basis.
    const Complex u00 = scatter * sst.z + pass;
    const Complex u01 = scatter * Complex{sst.x, -sst.y};
    const Complex u10 = scatter * Complex{sst.x, sst.y};
    const Complex u11 = -scatter * sst.z + pass;
    const Complex out_p = u00 * pol.alpha_plus + u01 * pol.alpha_minus;
    const Complex out_m = u10 * pol.alpha_plus + u11 * pol.alpha_minus;
    const Complex mixed = std::conj(out_p) * out_m;
    OutgoingField out;
    out.s_q = Vec3{mixed.real(), mixed.imag(), 0.5 * (std::norm(out_p) - std::norm(out_m))} /
              pol.length;
    assert(norm(out.s_q - elastic_outgoing(config)) <= 1e-12 * std::max(1.0, f));
    const double magnitude = norm(out.s_q);
    if (magnitude == 0.0) {
        throw ZeroField("outgoing field has zero spin density");
    }
    out.theta_deg = std::acos(std::clamp(out.s_q.z / magnitude, -1.0, 1.0)) * 180.0 / pi;
    return out;
}

PowerReport power_accounting(const DrivenConfig& config, const std::vector<double>& nu_grid) {
    const SpectrumUnresolved base = spectrum_unresolved(config, nu_grid);
    if (nu_grid.front() > -50.0 || nu_grid.back() < 50.0) {
        throw GridTooNarrow("power accounting requires the grid to span at least [-50, 50]");
    }
    const double f = config.params.photon_density;
    const double carrier = config.params.carrier;
    const double omega = config.omega;
    const double lam = config.lambda_ratio;
    const double sin_half = std::sin(0.5 * config.phi);
    const double deficit = stationary_purity_deficit(config);
    const double pref = f * deficit * sin_half * sin_half / config.gamma;

    PowerReport report;
    report.total = carrier * f;
    report.inelastic = 1.5 * carrier * f * deficit * sin_half * sin_half;
    report.elastic_weight = base.elastic_weight;
    report.inelastic_flux = 1.5 * f * deficit * sin_half * sin_half;

    // Quadrature of the sampled density and its first moment.
    std::vector<double> moment(base.inelastic.size());
    for (std::size_t i = 0; i < moment.size(); ++i) moment[i] = nu_grid[i] * base.inelastic[i];
    const bool uniform = is_uniform(nu_grid);
    const double flux_grid = uniform ? integrate_uniform(nu_grid, base.inelastic)
                                     : integrate_trapezoid(nu_grid, base.inelastic);
    const double moment_grid =
        uniform ? integrate_uniform(nu_grid, moment) : integrate_trapezoid(nu_grid, moment);

    // Analytic tails of each Lorentzian line outside [p, q].  The linearly
    // divergent moment pieces carry slopes summing to zero over the three
    // lines, so they are dropped from the per-line principal values and the
    // matching finite-range pieces cancel in the sum below.
    const LineShape lines = line_shape(config);
    const double p = nu_grid.front();
    const double q = nu_grid.back();
    double tail_flux = 0.0;
    double tail_moment = 0.0;
    for (int b = 0; b < 3; ++b) {
        const double kappa = lines.kappa[b];
        const double beta = lines.center[b];
        const double a = p - beta;
        const double bb = q - beta;
        const double datan = std::atan(lam * bb) - std::atan(lam * a);
        const double dlog = std::log((1.0 + lam * lam * bb * bb) / (1.0 + lam * lam * a * a));
        const double flux_fin = datan / lam + 0.5 * kappa * dlog / (lam * lam);
        const double moment_fin = 0.5 * (1.0 + beta * kappa) * dlog / (lam * lam) +
                                  kappa * ((q - p) / (lam * lam) - datan / (lam * lam * lam)) +
                                  beta * datan / lam;
        tail_flux += pi / lam - flux_fin;
        tail_moment += -kappa * pi / (lam * lam * lam) + beta * pi / lam - moment_fin +
                       kappa * (q - p) / (lam * lam);
    }

    const double tail_power = pref * (omega / (2.0 * pi)) * (carrier * tail_flux + omega * tail_moment);
    report.numeric = carrier * base.elastic_weight +
                     (omega / (2.0 * pi)) *
                         (carrier * (flux_grid + pref * tail_flux) +
                          omega * (moment_grid + pref * tail_moment));
    report.tail_fraction = report.inelastic > 0.0 ? std::abs(tail_power) / report.inelastic : 0.0;
    if (report.tail_fraction > 0.01) {
        throw GridTooNarrow("analytic tail correction exceeds 1% of the inelastic power");
    }
    return report;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) {
        throw InvalidParameter("grid needs at least two points and hi > lo");
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return out;
}

}  // namespace pkondo
