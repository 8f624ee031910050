#include "photonic_kondo/bloch.hpp"

#include <cmath>

#include "photonic_kondo/errors.hpp"

namespace pkondo {

Vec3 bloch_rhs(const DrivenConfig& config, const Vec3& s) {
    return cross(config.h_eff, s) - config.gamma * (s - 0.5 * config.n_cl);
}

Vec3 relax_toward(const DrivenConfig& config, const Vec3& fixed_point, const Vec3& v0, double t) {
    if (t < 0.0) {
        throw InvalidParameter("evolution time must be non-negative");
    }
    if (t == 0.0) return v0;
    const Vec3 d = v0 - fixed_point;
    const Vec3 par = dot(d, config.n_h) * config.n_h;
    const Vec3 perp = d - par;
    const double damp = std::exp(-config.gamma * t);
    const double c = std::cos(config.omega * t);
    const double s = std::sin(config.omega * t);
    return fixed_point + damp * (par + c * perp + s * cross(config.n_h, d));
}

Vec3 bloch_evolve(const DrivenConfig& config, const Vec3& s0, double t) {
    const Vec3 fixed_point = config.gamma > 0.0 ? stationary_bloch(config) : Vec3{};
    return relax_toward(config, fixed_point, s0, t);
}

Vec3 stationary_bloch(const DrivenConfig& config) {
    if (!(config.gamma > 0.0)) {
        throw NoDissipation("stationary state requires a positive decay rate");
    }
    const double lam = config.lambda_ratio;
    const Vec3 numer = config.n_cl + lam * cross(config.n_h, config.n_cl) +
                       lam * lam * std::cos(config.psi) * config.n_h;
    return numer / (2.0 * (1.0 + lam * lam));
}

double purity(const Vec3& s) { return 0.5 * (1.0 + 4.0 * dot(s, s)); }

double stationary_purity(const DrivenConfig& config) {
    if (!(config.gamma > 0.0)) {
        throw NoDissipation("stationary purity requires a positive decay rate");
    }
    const double lam2 = config.lambda_ratio * config.lambda_ratio;
    return (1.0 + 0.25 * lam2 * (3.0 + std::cos(2.0 * config.psi))) / (1.0 + lam2);
}

double stationary_purity_deficit(const DrivenConfig& config) {
    if (!(config.gamma > 0.0)) {
        throw NoDissipation("stationary purity requires a positive decay rate");
    }
    const double lam2 = config.lambda_ratio * config.lambda_ratio;
    const double sp = std::sin(config.psi);
    return 0.5 * lam2 * sp * sp / (1.0 + lam2);
}

BlochTrajectory evolve_trajectory(const DrivenConfig& config, const Vec3& s0, double t_max,
                                  std::size_t n_samples) {
    if (n_samples < 2) {
        throw InvalidParameter("trajectory requires at least two samples");
    }
    if (!(t_max > 0.0)) {
        throw InvalidParameter("trajectory requires t_max > 0");
    }
    BlochTrajectory out;
    out.times.reserve(n_samples);
    out.states.reserve(n_samples);
    out.purities.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        const Vec3 s = bloch_evolve(config, s0, t);
        out.times.push_back(t);
        out.states.push_back(s);
        out.purities.push_back(purity(s));
    }
    return out;
}

}  // namespace pkondo
