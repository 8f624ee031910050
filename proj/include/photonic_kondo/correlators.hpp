#pragma once

#include "photonic_kondo/linear_ode.hpp"
#include "photonic_kondo/model.hpp"

namespace pkondo {

// Stationary two-time spin correlators entering the polarization unresolved
// spectrum.  Projections are onto the drive axis n_cl, the field axis n_h and
// the binormal v = n_cl x n_h; the first index refers to the later time t+tau.
struct UnresolvedCorrelators {
    double tau = 0.0;
    Complex dot;       // <S(t+tau) . S(t)>
    Complex cross_cl;  // n_cl . <S(t+tau) x S(t)>
    Complex cross_h;   // n_h . <S(t+tau) x S(t)>
    Complex cl_h;      // <(n_cl.S(t+tau)) (n_h.S(t))>
    Complex hh;        // <(n_h.S(t+tau)) (n_h.S(t))>
    Complex v_h;       // <(v.S(t+tau)) (n_h.S(t))>
};

// Correlators entering the direction dependent part of the resolved spectrum.
struct ResolvedCorrelators {
    double tau = 0.0;
    Complex cl_cl;  // <(n_cl.S(t+tau)) (n_cl.S(t))>
    Complex h_cl;   // <(n_h.S(t+tau)) (n_cl.S(t))>
    Complex cl_v;   // <(n_cl.S(t+tau)) (v.S(t))>
    Complex v_cl;   // <(v.S(t+tau)) (n_cl.S(t))>
    Complex v_v;    // <(v.S(t+tau)) (v.S(t))>
    Complex h_v;    // <(n_h.S(t+tau)) (v.S(t))>
};

// Coefficients of the combined correlator
// <S(t+tau)(n_cl.S(t))> + <(n_cl.S(t+tau)) S(t)> - n_cl <S(t+tau).S(t)>
// - i <S(t+tau) x S(t)>  =  a n_cl + b n_h + c v.
struct AbcCoefficients {
    double tau = 0.0;
    Complex a;
    Complex b;
    Complex c;
};

// Closed-form solutions at delay tau >= 0.  Throw NoDissipation when
// gamma = 0 and InvalidParameter for tau < 0.
UnresolvedCorrelators unresolved_correlators(const DrivenConfig& config, double tau);
ResolvedCorrelators resolved_correlators(const DrivenConfig& config, double tau);
AbcCoefficients abc_coefficients(const DrivenConfig& config, double tau);

// Constant (tau -> infinity) parts of the abc coefficients.
AbcCoefficients abc_stationary(const DrivenConfig& config);

// Right-hand sides of the closed six-dimensional first-order systems; used
// for fixed-point and finite-difference checks.
UnresolvedCorrelators unresolved_rhs(const DrivenConfig& config,
                                     const UnresolvedCorrelators& state);
ResolvedCorrelators resolved_rhs(const DrivenConfig& config, const ResolvedCorrelators& state);

// The same systems packaged for the independent Runge-Kutta oracle, with the
// closed-form initial conditions.  The unresolved state order matches the
// struct fields; the resolved order is (cl_cl, h_cl, cl_v, v_v, h_v, v_cl).
LinearSystem unresolved_system(const DrivenConfig& config);
LinearSystem resolved_system(const DrivenConfig& config);

// Recovers a, b, c by expanding the combined correlator in the nonorthogonal
// basis {n_cl, n_h, v}.  Requires sin(psi) > 0.1; throws InvalidParameter
// otherwise.
AbcCoefficients abc_from_correlators(const DrivenConfig& config,
                                     const UnresolvedCorrelators& unresolved,
                                     const ResolvedCorrelators& resolved);

}  // namespace pkondo
