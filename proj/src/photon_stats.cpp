#include "photonic_kondo/photon_stats.hpp"

#include <cmath>

#include "photonic_kondo/bloch.hpp"
#include "photonic_kondo/errors.hpp"

namespace pkondo {

namespace {

void require_unit(const Vec3& axis, const char* what) {
    if (std::abs(norm(axis) - 1.0) > 1e-9) {
        throw InvalidParameter(std::string(what) + " must be unit length");
    }
}

void require_dissipation(const DrivenConfig& config) {
    if (!(config.gamma > 0.0)) {
        throw NoDissipation("photon statistics require a positive decay rate");
    }
}

// n . [cos^2(phi/2) n_cl scale + 2 sin^2(phi/2) k - sin(phi) n_cl x k],
// the projection pattern shared by C_s(0) and the G combinations.
double scattered_projection(const DrivenConfig& config, const Vec3& n, const Vec3& k,
                            double scale) {
    const double half = 0.5 * config.phi;
    const double cos2 = std::cos(half) * std::cos(half);
    const double sin2 = std::sin(half) * std::sin(half);
    const Vec3 mixed = cos2 * scale * config.n_cl + 2.0 * sin2 * k -
                       std::sin(config.phi) * cross(config.n_cl, k);
    return dot(n, mixed);
}

}  // namespace

Vec3 cs_zero(const DrivenConfig& config) {
    if (config.phi == 0.0) {
        // No scattering: the outgoing spin density is the incoming one.
        return 0.5 * config.params.photon_density * config.n_cl;
    }
    require_dissipation(config);
    const Vec3 sst = stationary_bloch(config);
    const double half = 0.5 * config.phi;
    const double cos2 = std::cos(half) * std::cos(half);
    const double sin2 = std::sin(half) * std::sin(half);
    return 0.5 * config.params.photon_density *
           (cos2 * config.n_cl + 2.0 * sin2 * sst - std::sin(config.phi) * cross(config.n_cl, sst));
}

KVector k_initial(const DrivenConfig& config, const Vec3& m) {
    require_dissipation(config);
    require_unit(m, "detector axis");
    const Vec3 sst = stationary_bloch(config);
    const double f = config.params.photon_density;
    const double half = 0.5 * config.phi;
    const double cos2 = std::cos(half) * std::cos(half);
    const double sin2 = std::sin(half) * std::sin(half);
    KVector out;
    out.value = 0.5 * f *
                (cos2 * dot(config.n_cl, m) * sst + sin2 * dot(sst, m) * config.n_cl -
                 0.25 * std::sin(config.phi) * cross(m, config.n_cl - 2.0 * sst));
    out.source_norm = dot(m, cs_zero(config));
    return out;
}

KVector k_initial(const DrivenConfig& config) {
    require_dissipation(config);
    const Vec3 sst = stationary_bloch(config);
    const double f = config.params.photon_density;
    const double half = 0.5 * config.phi;
    const double cos2 = std::cos(half) * std::cos(half);
    const double sin2 = std::sin(half) * std::sin(half);
    KVector out;
    out.value = f * (cos2 * sst + 0.5 * sin2 * config.n_cl +
                     0.5 * std::sin(config.phi) * cross(config.n_cl, sst));
    out.source_norm = f;
    return out;
}

KVector k_evolve(const DrivenConfig& config, const KVector& k0, double tau) {
    require_dissipation(config);
    KVector out;
    out.tau = k0.tau + tau;
    out.source_norm = k0.source_norm;
    out.value = relax_toward(config, k0.source_norm * stationary_bloch(config), k0.value, tau);
    return out;
}

GCombination g_combinations(const DrivenConfig& config, const Vec3& n, const Vec3& m,
                            double tau) {
    require_unit(n, "detector axis");
    const double f = config.params.photon_density;
    const KVector km = k_evolve(config, k_initial(config, m), tau);
    const KVector k0 = k_evolve(config, k_initial(config), tau);
    GCombination out;
    out.tau = tau;
    out.nm = 0.5 * f * scattered_projection(config, n, km.value, km.source_norm);
    out.n0 = 0.5 * f * scattered_projection(config, n, k0.value, k0.source_norm);
    out.zero_m = f * km.source_norm;
    out.zero_zero = f * f;
    return out;
}

double g2(const DrivenConfig& config, const Vec3& n, const Vec3& m, double tau) {
    require_unit(n, "detector axis");
    require_unit(m, "detector axis");
    const double f = config.params.photon_density;
    if (!(f > 0.0)) {
        throw DetectorDark("coincidence rate requires a positive photon density");
    }
    const Vec3 cs0 = cs_zero(config);
    const double rate_m = 0.5 * f + dot(m, cs0);
    const double rate_n = 0.5 * f + dot(n, cs0);
    if (rate_m <= 1e-9 * f || rate_n <= 1e-9 * f) {
        throw DetectorDark("single-detector rate vanishes for this axis");
    }
    if (config.phi == 0.0) {
        // Unscattered coherent light stays uncorrelated at every delay.
        return 1.0;
    }
    const Vec3 sst = stationary_bloch(config);
    const double half = 0.5 * config.phi;
    const double sin_half = std::sin(half);
    const double cos_half = std::cos(half);
    const KVector km = k_evolve(config, k_initial(config, m), tau);
    const KVector k0 = k_evolve(config, k_initial(config), tau);
    // Unscaled transient parts K(tau) - source_norm * S_st.
    const Vec3 dm = km.value - km.source_norm * sst;
    const Vec3 d0 = k0.value - k0.source_norm * sst;
    const Vec3 lm = sin_half * dm - cos_half * cross(config.n_cl, dm);
    const Vec3 l0 = sin_half * d0 - cos_half * cross(config.n_cl, d0);
    const double numer = f * sin_half * (dot(n, lm) + 0.5 * dot(n, l0));
    return 1.0 + numer / (rate_m * rate_n);
}

double g2_from_combinations(const DrivenConfig& config, const Vec3& n, const Vec3& m,
                            double tau) {
    require_unit(m, "detector axis");
    const double f = config.params.photon_density;
    if (!(f > 0.0)) {
        throw DetectorDark("coincidence rate requires a positive photon density");
    }
    const GCombination now = g_combinations(config, n, m, tau);
    const Vec3 cs0 = cs_zero(config);
    const double am = dot(m, cs0);
    const double an = dot(n, cs0);
    const double late =
        am * an + 0.5 * (f * am + f * an) + 0.25 * f * f;  // G combinations at tau -> infinity
    if (late <= 0.0) {
        throw DetectorDark("single-detector rate vanishes for this axis");
    }
    return (now.nm + 0.5 * (now.zero_m + now.n0) + 0.25 * now.zero_zero) / late;
}

G2Curve g2_curve(const DrivenConfig& config, const Vec3& n, const Vec3& m, double tau_max,
                 std::size_t n_samples) {
    if (n_samples < 2) {
        throw InvalidParameter("coincidence curve requires at least two samples");
    }
    if (!(tau_max > 0.0)) {
        throw InvalidParameter("coincidence curve requires tau_max > 0");
    }
    G2Curve out;
    out.n = n;
    out.m = m;
    out.taus.reserve(n_samples);
    out.values.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double tau = tau_max * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        out.taus.push_back(tau);
        out.values.push_back(g2(config, n, m, tau));
    }
    return out;
}

}  // namespace pkondo
