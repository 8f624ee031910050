#include "photonic_kondo/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "photonic_kondo/errors.hpp"

namespace pkondo {

namespace {
constexpr double pi = std::numbers::pi;
}

KondoCouplings derive_kondo_coupling(const EmitterSpec& emitter) {
    if (!(emitter.transition_freq > 0.0)) {
        throw InvalidParameter("transition frequency must be positive");
    }
    KondoCouplings out;
    out.parallel = 2.0 * (emitter.g_plus * emitter.g_plus + emitter.g_minus * emitter.g_minus) /
                   emitter.transition_freq;
    out.perpendicular = 4.0 * emitter.g_plus * emitter.g_minus / emitter.transition_freq;
    out.anisotropic = emitter.g_plus != emitter.g_minus;
    out.isotropic = out.anisotropic ? 0.0 : out.perpendicular;
    return out;
}

KondoParams params_from_emitter(const EmitterSpec& emitter, double photon_density,
                                double carrier) {
    KondoCouplings couplings = derive_kondo_coupling(emitter);
    if (couplings.anisotropic) {
        throw InvalidParameter("anisotropic couplings: dynamics requires g_plus == g_minus");
    }
    KondoParams params;
    params.exchange = couplings.isotropic;
    params.photon_density = photon_density;
    params.detuning = emitter.detuning;
    params.carrier = carrier;
    return params;
}

double scattering_phase(double exchange) {
    if (exchange < 0.0) {
        throw InvalidParameter("exchange coupling must be non-negative");
    }
    return 2.0 * std::atan(pi * exchange);
}

JonesState jones_from_amplitudes(const JonesPolarization& pol) {
    if (!(pol.length > 0.0)) {
        throw InvalidParameter("quantization length must be positive");
    }
    const double np = std::norm(pol.alpha_plus);
    const double nm = std::norm(pol.alpha_minus);
    if (np == 0.0 && nm == 0.0) {
        throw ZeroField("both polarization amplitudes vanish");
    }
    // s_cl = sum_{ss'} alpha_s^* (sigma_{ss'}/2L) alpha_s' with the standard
    // Pauli matrices in the (+,-) basis.
    const Complex mixed = std::conj(pol.alpha_plus) * pol.alpha_minus;
    JonesState out;
    out.photon_density = (np + nm) / pol.length;
    out.spin_density = {mixed.real() / pol.length, mixed.imag() / pol.length,
                        0.5 * (np - nm) / pol.length};
    out.axis = (2.0 / out.photon_density) * out.spin_density;
    return out;
}

JonesPolarization polarization_for(const Vec3& axis, double photon_density, double length) {
    if (!(photon_density > 0.0)) {
        throw ZeroField("photon density must be positive");
    }
    if (!(length > 0.0)) {
        throw InvalidParameter("quantization length must be positive");
    }
    if (std::abs(norm(axis) - 1.0) > 1e-9) {
        throw InvalidParameter("polarization axis must be unit length");
    }
    const double amp = std::sqrt(photon_density * length);
    const double half = 0.5 * std::acos(std::clamp(axis.z, -1.0, 1.0));
    const double azimuth = std::atan2(axis.y, axis.x);
    JonesPolarization pol;
    pol.alpha_plus = amp * std::cos(half);
    pol.alpha_minus = amp * std::sin(half) * Complex{std::cos(azimuth), std::sin(azimuth)};
    pol.length = length;
    return pol;
}

DrivenConfig build_driven_config(const KondoParams& params, const Vec3& n_cl) {
    if (params.exchange < 0.0) {
        throw InvalidParameter("exchange coupling must be non-negative");
    }
    if (params.photon_density < 0.0) {
        throw InvalidParameter("photon density must be non-negative");
    }
    if (std::abs(norm(n_cl) - 1.0) > 1e-12) {
        throw InvalidParameter("polarization axis must be unit length");
    }
    DrivenConfig cfg;
    cfg.params = params;
    cfg.n_cl = n_cl;
    cfg.phi = scattering_phase(params.exchange);
    const double half = 0.5 * cfg.phi;
    const double cos_half = std::cos(half);
    const double drive = pi * params.exchange * params.photon_density;
    cfg.lamb_shift = drive * cos_half * cos_half;
    cfg.gamma = 0.5 * drive * std::sin(cfg.phi);
    cfg.h_eff = cfg.lamb_shift * n_cl + params.detuning * unit_z;
    cfg.omega = norm(cfg.h_eff);
    if (cfg.omega > 0.0) {
        if (params.detuning == 0.0) {
            // h_eff is exactly parallel to n_cl; assign the axis directly so
            // psi is an exact zero.
            cfg.n_h = n_cl;
            cfg.psi = 0.0;
        } else {
            cfg.n_h = cfg.h_eff / cfg.omega;
            cfg.psi = std::acos(std::clamp(dot(cfg.n_h, n_cl), -1.0, 1.0));
        }
    } else {
        cfg.n_h = unit_z;
        cfg.psi = std::acos(std::clamp(n_cl.z, -1.0, 1.0));
        cfg.degenerate_axis = true;
    }
    cfg.lambda_ratio =
        cfg.gamma > 0.0 ? cfg.omega / cfg.gamma : std::numeric_limits<double>::infinity();
    return cfg;
}

}  // namespace pkondo
