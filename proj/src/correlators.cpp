#include "photonic_kondo/correlators.hpp"

#include <cmath>

#include "photonic_kondo/errors.hpp"

namespace pkondo {

namespace {

constexpr Complex I{0.0, 1.0};

// Quantities shared by every closed form below.
struct Shorthand {
    double lam;   // lambda
    double lp;    // 1 + lambda^2
    double c;     // cos psi
    double s2;    // sin^2 psi
    double cp2;   // cos^2 (psi/2)
    double sp2;   // sin^2 (psi/2)
    double x;     // (1 + lambda^2 cos^2 psi) / (1 + lambda^2)
    double y;     // lambda sin^2 psi / (1 + lambda^2)
    double damp;  // exp(-gamma tau)
    Complex em;   // exp(-(gamma - i omega) tau)
    Complex ep;   // exp(-(gamma + i omega) tau)
};

Shorthand prepare(const DrivenConfig& config, double tau) {
    if (!(config.gamma > 0.0)) {
        throw NoDissipation("two-time correlators require a positive decay rate");
    }
    if (tau < 0.0) {
        throw InvalidParameter("correlator delay must be non-negative");
    }
    Shorthand q;
    q.lam = config.lambda_ratio;
    q.lp = 1.0 + q.lam * q.lam;
    q.c = std::cos(config.psi);
    const double s = std::sin(config.psi);
    q.s2 = s * s;
    q.cp2 = 0.5 * (1.0 + q.c);
    q.sp2 = 0.5 * (1.0 - q.c);
    q.x = (1.0 + q.lam * q.lam * q.c * q.c) / q.lp;
    q.y = q.lam * q.s2 / q.lp;
    q.damp = std::exp(-config.gamma * tau);
    const double rot = config.omega * tau;
    q.em = q.damp * Complex{std::cos(rot), std::sin(rot)};
    q.ep = std::conj(q.em);
    return q;
}

}  // namespace

UnresolvedCorrelators unresolved_correlators(const DrivenConfig& config, double tau) {
    const Shorthand q = prepare(config, tau);
    const double edge = q.s2 / (4.0 * q.lp);  // recurring sin^2 psi / (4 (1+lambda^2))
    UnresolvedCorrelators out;
    out.tau = tau;
    out.hh = 0.25 * (q.c * q.c + q.s2 * q.damp);
    out.cl_h = 0.25 * q.c * (q.x + q.s2 * q.damp) -
               I * (q.s2 / 4.0) *
                   (q.cp2 * q.em / Complex{q.lam, 1.0} + q.sp2 * q.ep / Complex{q.lam, -1.0});
    out.v_h = (q.s2 / 4.0) * (q.cp2 * q.em / Complex{q.lam, 1.0} -
                              q.sp2 * q.ep / Complex{q.lam, -1.0} - q.lam * q.c / q.lp);
    out.dot = 0.25 * q.x + 0.25 * q.s2 * q.damp + 0.5 * (q.cp2 - edge) * q.em +
              0.5 * (q.sp2 - edge) * q.ep;
    out.cross_h = 0.5 * I * (q.cp2 - edge) * q.em - 0.5 * I * (q.sp2 - edge) * q.ep;
    out.cross_cl =
        I * edge * (1.0 - I * q.lam * q.c) * q.damp +
        I * (q.cp2 * (0.25 * q.s2 / Complex{1.0, -q.lam} + 0.5 * q.c) - 0.5 * q.c * edge) * q.em +
        I * (q.sp2 * (0.25 * q.s2 / Complex{1.0, q.lam} - 0.5 * q.c) + 0.5 * q.c * edge) * q.ep;
    return out;
}

ResolvedCorrelators resolved_correlators(const DrivenConfig& config, double tau) {
    const Shorthand q = prepare(config, tau);
    // Bracket shared by cl_cl / v_cl and by v_v / cl_v.
    const Complex brace_m{q.y + q.lam * (1.0 + q.c), -(q.c + q.x)};
    const Complex brace_p{q.y + q.lam * (1.0 - q.c), -(q.c - q.x)};
    const Complex ring_m = 1.0 + q.c + (I * q.lam / Complex{1.0, -q.lam}) * (q.s2 / q.lp);
    const Complex ring_p = 1.0 - q.c - (I * q.lam / Complex{1.0, q.lam}) * (q.s2 / q.lp);
    ResolvedCorrelators out;
    out.tau = tau;
    out.h_cl = 0.25 * q.c * q.x + 0.25 * q.y * Complex{q.lam * q.c, 1.0} * q.damp;
    out.cl_cl = 0.25 * q.x * q.x + 0.25 * q.c * q.y * Complex{q.lam * q.c, 1.0} * q.damp +
                0.125 * q.y * brace_m * q.em + 0.125 * q.y * brace_p * q.ep;
    out.v_cl = -0.25 * q.lam * q.s2 * q.x / q.lp + 0.125 * I * q.y * brace_m * q.em -
               0.125 * I * q.y * brace_p * q.ep;
    out.h_v = (q.s2 / (4.0 * q.lp)) * (-q.lam * q.c + Complex{q.lam * q.c, 1.0} * q.damp);
    out.v_v = 0.25 * q.y * q.y + 0.125 * q.s2 * ring_m * q.em + 0.125 * q.s2 * ring_p * q.ep;
    out.cl_v = -0.25 * q.y * q.x + 0.25 * (q.c * q.s2 / q.lp) * Complex{q.lam * q.c, 1.0} * q.damp -
               0.125 * I * q.s2 * ring_m * q.em + 0.125 * I * q.s2 * ring_p * q.ep;
    return out;
}

AbcCoefficients abc_coefficients(const DrivenConfig& config, double tau) {
    const Shorthand q = prepare(config, tau);
    const Complex skew_m = Complex{1.0, q.lam} / Complex{1.0, -q.lam};  // (1+i lam)/(1-i lam)
    const Complex skew_p = std::conj(skew_m);
    AbcCoefficients out;
    out.tau = tau;
    out.a = 0.25 * (1.0 - q.lam * q.lam) * q.x / q.lp - 0.25 * q.lam * q.y * q.damp -
            0.125 * I * q.y * (skew_m * q.em - skew_p * q.ep);
    out.b = 0.5 * q.lam * q.lam * q.c * q.x / q.lp + 0.25 * q.y * Complex{2.0 * q.lam * q.c, 1.0} * q.damp +
            0.125 * q.y *
                ((2.0 * q.lam - 2.0 * q.lam * q.c / Complex{1.0, -q.lam} - I) * q.em -
                 (2.0 * q.lam + 2.0 * q.lam * q.c / Complex{1.0, q.lam} + I) * q.ep);
    out.c = -0.5 * q.lam * q.x / q.lp - 0.25 * q.y * q.damp +
            0.125 * q.y * (skew_m * q.em + skew_p * q.ep);
    return out;
}

AbcCoefficients abc_stationary(const DrivenConfig& config) {
    const Shorthand q = prepare(config, 0.0);
    AbcCoefficients out;
    out.a = 0.25 * (1.0 - q.lam * q.lam) * q.x / q.lp;
    out.b = 0.5 * q.lam * q.lam * q.c * q.x / q.lp;
    out.c = -0.5 * q.lam * q.x / q.lp;
    return out;
}

UnresolvedCorrelators unresolved_rhs(const DrivenConfig& config,
                                     const UnresolvedCorrelators& state) {
    const Shorthand q = prepare(config, 0.0);
    const double om = config.omega;
    const double ga = config.gamma;
    UnresolvedCorrelators out;
    out.tau = state.tau;
    out.dot = om * state.cross_h - ga * (state.dot - 0.25 * q.x);
    out.cross_cl = om * (state.cl_h - q.c * state.dot) - ga * state.cross_cl;
    out.cross_h = om * (state.hh - state.dot) - ga * (state.cross_h - 0.25 * q.y);
    out.cl_h = om * state.v_h - ga * (state.cl_h - 0.25 * q.c);
    out.hh = -ga * (state.hh - 0.25 * q.c * q.c);
    out.v_h = om * (q.c * state.hh - state.cl_h) - ga * state.v_h;
    return out;
}

ResolvedCorrelators resolved_rhs(const DrivenConfig& config, const ResolvedCorrelators& state) {
    const Shorthand q = prepare(config, 0.0);
    const double om = config.omega;
    const double ga = config.gamma;
    ResolvedCorrelators out;
    out.tau = state.tau;
    out.cl_cl = om * state.v_cl - ga * (state.cl_cl - 0.25 * q.x);
    out.h_cl = -ga * (state.h_cl - 0.25 * q.c * q.x);
    out.cl_v = om * state.v_v - ga * (state.cl_v + 0.25 * q.y);
    out.v_v = om * (q.c * state.h_v - state.cl_v) - ga * state.v_v;
    out.h_v = -ga * (state.h_v + 0.25 * q.c * q.y);
    out.v_cl = om * (q.c * state.h_cl - state.cl_cl) - ga * state.v_cl;
    return out;
}

LinearSystem unresolved_system(const DrivenConfig& config) {
    const Shorthand q = prepare(config, 0.0);
    const double om = config.omega;
    const double ga = config.gamma;
    LinearSystem sys;
    sys.dimension = 6;
    // State order (dot, cross_cl, cross_h, cl_h, hh, v_h).
    sys.matrix = {
        -ga,          0.0, om,  0.0, 0.0,        0.0,  //
        -om * q.c,    -ga, 0.0, om,  0.0,        0.0,  //
        -om,          0.0, -ga, 0.0, om,         0.0,  //
        0.0,          0.0, 0.0, -ga, 0.0,        om,   //
        0.0,          0.0, 0.0, 0.0, -ga,        0.0,  //
        0.0,          0.0, 0.0, -om, om * q.c,   -ga,
    };
    sys.inhomogeneity = {0.25 * ga * q.x, 0.0,      0.25 * ga * q.y,
                         0.25 * ga * q.c, 0.25 * ga * q.c * q.c, 0.0};
    sys.initial = {0.75,
                   0.5 * I * q.x,
                   0.5 * I * q.c,
                   Complex{0.25 * q.c, -0.25 * q.y},
                   0.25,
                   Complex{0.0, -0.25 * q.s2 / q.lp}};
    return sys;
}

LinearSystem resolved_system(const DrivenConfig& config) {
    const Shorthand q = prepare(config, 0.0);
    const double om = config.omega;
    const double ga = config.gamma;
    LinearSystem sys;
    sys.dimension = 6;
    // State order (cl_cl, h_cl, cl_v, v_v, h_v, v_cl).
    sys.matrix = {
        -ga, 0.0,      0.0, 0.0, 0.0,      om,   //
        0.0, -ga,      0.0, 0.0, 0.0,      0.0,  //
        0.0, 0.0,      -ga, om,  0.0,      0.0,  //
        0.0, 0.0,      -om, -ga, om * q.c, 0.0,  //
        0.0, 0.0,      0.0, 0.0, -ga,      0.0,  //
        -om, om * q.c, 0.0, 0.0, 0.0,      -ga,
    };
    sys.inhomogeneity = {0.25 * ga * q.x,  0.25 * ga * q.c * q.x, -0.25 * ga * q.y,
                         0.0,              -0.25 * ga * q.c * q.y, 0.0};
    sys.initial = {0.25,
                   Complex{0.25 * q.c, 0.25 * q.y},
                   Complex{0.0, -0.25 * q.c * q.lam * q.y},
                   0.25 * q.s2,
                   Complex{0.0, 0.25 * q.s2 / q.lp},
                   Complex{0.0, 0.25 * q.c * q.lam * q.y}};
    return sys;
}

AbcCoefficients abc_from_correlators(const DrivenConfig& config,
                                     const UnresolvedCorrelators& unresolved,
                                     const ResolvedCorrelators& resolved) {
    const double s = std::sin(config.psi);
    if (!(s > 0.1)) {
        throw InvalidParameter("basis expansion requires sin(psi) > 0.1");
    }
    const double s2 = s * s;
    const double c = std::cos(config.psi);
    AbcCoefficients out;
    out.tau = unresolved.tau;
    out.a = (2.0 * resolved.cl_cl - c * (unresolved.cl_h + resolved.h_cl)) / s2 - unresolved.dot -
            I * (unresolved.cross_cl - c * unresolved.cross_h) / s2;
    out.b = (unresolved.cl_h + resolved.h_cl - 2.0 * c * resolved.cl_cl) / s2 -
            I * (unresolved.cross_h - c * unresolved.cross_cl) / s2;
    out.c = (resolved.cl_v + resolved.v_cl) / s2 - I * (unresolved.cl_h - resolved.h_cl) / s2;
    return out;
}

}  // namespace pkondo
