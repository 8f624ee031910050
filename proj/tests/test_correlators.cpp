#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "photonic_kondo/bloch.hpp"
#include "photonic_kondo/correlators.hpp"
#include "photonic_kondo/errors.hpp"
#include "photonic_kondo/validation.hpp"

using namespace pkondo;
using Cx = std::complex<double>;

namespace {

// Equal-time product <(a.S)(b.S)> for a spin-1/2:
// (a.b)/4 + (i/2) (a x b) . <S>.
Cx equal_time_product(const Vec3& a, const Vec3& b, const Vec3& s) {
    return Cx{0.25 * dot(a, b), 0.5 * dot(cross(a, b), s)};
}

double cdev(Cx a, Cx b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("delay-zero values follow from the spin-1/2 product rule") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const DrivenConfig config = sample_config(rng);
        const Vec3 s = stationary_bloch(config);
        const Vec3 v = cross(config.n_cl, config.n_h);
        const UnresolvedCorrelators u = unresolved_correlators(config, 0.0);
        // <S.S> = s(s+1) = 3/4 and <S x S> = i <S> for spin 1/2.
        CHECK(cdev(u.dot, Cx{0.75, 0.0}) < 1e-14);
        CHECK(cdev(u.cross_cl, Cx{0.0, dot(config.n_cl, s)}) < 1e-14);
        CHECK(cdev(u.cross_h, Cx{0.0, dot(config.n_h, s)}) < 1e-14);
        CHECK(cdev(u.cl_h, equal_time_product(config.n_cl, config.n_h, s)) < 1e-14);
        CHECK(cdev(u.hh, equal_time_product(config.n_h, config.n_h, s)) < 1e-14);
        CHECK(cdev(u.v_h, equal_time_product(v, config.n_h, s)) < 1e-14);

        const ResolvedCorrelators r = resolved_correlators(config, 0.0);
        CHECK(cdev(r.cl_cl, equal_time_product(config.n_cl, config.n_cl, s)) < 1e-14);
        CHECK(cdev(r.h_cl, equal_time_product(config.n_h, config.n_cl, s)) < 1e-14);
        CHECK(cdev(r.cl_v, equal_time_product(config.n_cl, v, s)) < 1e-14);
        CHECK(cdev(r.v_cl, equal_time_product(v, config.n_cl, s)) < 1e-14);
        CHECK(cdev(r.v_v, equal_time_product(v, v, s)) < 1e-14);
        CHECK(cdev(r.h_v, equal_time_product(config.n_h, v, s)) < 1e-14);
    }
}

TEST_CASE("long delays factorize into stationary one-point products") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 25; ++i) {
        const DrivenConfig config = sample_config(rng);
        const Vec3 s = stationary_bloch(config);
        const Vec3 v = cross(config.n_cl, config.n_h);
        const double tau = 80.0 / config.gamma;
        const UnresolvedCorrelators u = unresolved_correlators(config, tau);
        CHECK(cdev(u.dot, Cx{dot(s, s), 0.0}) < 1e-10);
        CHECK(std::abs(u.cross_cl) < 1e-10);
        CHECK(cdev(u.cl_h, Cx{dot(config.n_cl, s) * dot(config.n_h, s), 0.0}) < 1e-10);
        CHECK(cdev(u.hh, Cx{dot(config.n_h, s) * dot(config.n_h, s), 0.0}) < 1e-10);
        CHECK(cdev(u.v_h, Cx{dot(v, s) * dot(config.n_h, s), 0.0}) < 1e-10);
        const ResolvedCorrelators r = resolved_correlators(config, tau);
        CHECK(cdev(r.cl_cl, Cx{dot(config.n_cl, s) * dot(config.n_cl, s), 0.0}) < 1e-10);
        CHECK(cdev(r.v_v, Cx{dot(v, s) * dot(v, s), 0.0}) < 1e-10);
    }
}

TEST_CASE("closed forms satisfy the stated differential equations") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 15; ++i) {
        const DrivenConfig config = sample_config(rng);
        const double tau = 0.8 / config.gamma;
        const double eps = 1e-6 / std::max(config.gamma, config.omega);
        const UnresolvedCorrelators lo = unresolved_correlators(config, tau - eps);
        const UnresolvedCorrelators hi = unresolved_correlators(config, tau + eps);
        const UnresolvedCorrelators rhs =
            unresolved_rhs(config, unresolved_correlators(config, tau));
        const double scale = std::max(config.gamma, config.omega);
        CHECK(cdev((hi.dot - lo.dot) / (2.0 * eps), rhs.dot) < 1e-5 * scale);
        CHECK(cdev((hi.cross_cl - lo.cross_cl) / (2.0 * eps), rhs.cross_cl) < 1e-5 * scale);
        CHECK(cdev((hi.hh - lo.hh) / (2.0 * eps), rhs.hh) < 1e-5 * scale);

        const ResolvedCorrelators rlo = resolved_correlators(config, tau - eps);
        const ResolvedCorrelators rhi = resolved_correlators(config, tau + eps);
        const ResolvedCorrelators rrhs = resolved_rhs(config, resolved_correlators(config, tau));
        CHECK(cdev((rhi.cl_cl - rlo.cl_cl) / (2.0 * eps), rrhs.cl_cl) < 1e-5 * scale);
        CHECK(cdev((rhi.v_v - rlo.v_v) / (2.0 * eps), rrhs.v_v) < 1e-5 * scale);
    }
}

TEST_CASE("closed forms agree with the Runge-Kutta oracle") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 30; ++i) {
        const DrivenConfig config = sample_config(rng);
        const double t_max = 5.0 / config.gamma;
        const double step =
            std::min(1.0 / config.gamma, 1.0 / std::max(config.omega, 1e-30)) / 400.0;

        const auto u_run = integrate_rk4(unresolved_system(config), t_max, step);
        double worst = 0.0;
        for (std::size_t k = 0; k < u_run.size(); k += 101) {
            const UnresolvedCorrelators u = unresolved_correlators(config, u_run[k].first);
            const auto& num = u_run[k].second;
            worst = std::max({worst, cdev(u.dot, num[0]), cdev(u.cross_cl, num[1]),
                              cdev(u.cross_h, num[2]), cdev(u.cl_h, num[3]), cdev(u.hh, num[4]),
                              cdev(u.v_h, num[5])});
        }
        CHECK(worst < 1e-8);

        // Resolved state order is (cl_cl, h_cl, cl_v, v_v, h_v, v_cl).
        const auto r_run = integrate_rk4(resolved_system(config), t_max, step);
        worst = 0.0;
        for (std::size_t k = 0; k < r_run.size(); k += 101) {
            const ResolvedCorrelators r = resolved_correlators(config, r_run[k].first);
            const auto& num = r_run[k].second;
            worst = std::max({worst, cdev(r.cl_cl, num[0]), cdev(r.h_cl, num[1]),
                              cdev(r.cl_v, num[2]), cdev(r.v_v, num[3]), cdev(r.h_v, num[4]),
                              cdev(r.v_cl, num[5])});
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("aligned drive reduces to a single decaying precession line") {
    // For psi -> 0 the stationary state is fully polarized along the common
    // axis and <S(t+tau).S(t)> = 1/4 + exp((-gamma + i omega) tau) / 2, with
    // the circulation locked to it as i (dot - 1/4).
    const DrivenConfig config = config_for(2.0, 1e-9, 1.0, 0.5);
    for (double tau : {0.0, 0.3, 1.1, 4.0, 9.0}) {
        const UnresolvedCorrelators u = unresolved_correlators(config, tau);
        const Cx line = 0.25 + 0.5 * std::exp(Cx{-config.gamma * tau, config.omega * tau});
        CHECK(cdev(u.dot, line) < 1e-8);
        CHECK(cdev(u.cross_cl, Cx{0.0, 1.0} * (line - 0.25)) < 1e-8);
    }
}

TEST_CASE("abc expansion from correlators matches the direct coefficients") {
    std::mt19937_64 rng(35);
    int tested = 0;
    while (tested < 25) {
        const DrivenConfig config = sample_config(rng);
        if (std::sin(config.psi) <= 0.15) continue;
        ++tested;
        for (double tau : {0.0, 0.4 / config.gamma, 2.0 / config.gamma}) {
            const AbcCoefficients direct = abc_coefficients(config, tau);
            const AbcCoefficients expanded = abc_from_correlators(
                config, unresolved_correlators(config, tau), resolved_correlators(config, tau));
            CHECK(cdev(direct.a, expanded.a) < 1e-9);
            CHECK(cdev(direct.b, expanded.b) < 1e-9);
            CHECK(cdev(direct.c, expanded.c) < 1e-9);
        }
    }
    // Nearly collinear axes make the expansion ill-conditioned and rejected.
    const DrivenConfig aligned = config_for(1.5, 0.01, 1.0, 0.0);
    CHECK_THROWS_AS(abc_from_correlators(aligned, unresolved_correlators(aligned, 0.0),
                                         resolved_correlators(aligned, 0.0)),
                    InvalidParameter);
}

TEST_CASE("abc coefficients relax to their stationary parts") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 20; ++i) {
        const DrivenConfig config = sample_config(rng);
        const AbcCoefficients limit = abc_stationary(config);
        const AbcCoefficients late = abc_coefficients(config, 70.0 / config.gamma);
        CHECK(cdev(limit.a, late.a) < 1e-10);
        CHECK(cdev(limit.b, late.b) < 1e-10);
        CHECK(cdev(limit.c, late.c) < 1e-10);
    }
}

TEST_CASE("domain errors") {
    std::mt19937_64 rng(37);
    const DrivenConfig config = sample_config(rng);
    CHECK_THROWS_AS(unresolved_correlators(config, -0.5), InvalidParameter);
    CHECK_THROWS_AS(resolved_correlators(config, -0.5), InvalidParameter);
    CHECK_THROWS_AS(abc_coefficients(config, -0.5), InvalidParameter);

    KondoParams params;
    params.exchange = 0.2;
    params.photon_density = 0.0;
    params.detuning = 1.0;
    const DrivenConfig undriven = build_driven_config(params, unit_x);
    CHECK_THROWS_AS(unresolved_correlators(undriven, 1.0), NoDissipation);
    CHECK_THROWS_AS(resolved_correlators(undriven, 1.0), NoDissipation);
    CHECK_THROWS_AS(abc_stationary(undriven), NoDissipation);
}
