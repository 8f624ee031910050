#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "photonic_kondo/errors.hpp"
#include "photonic_kondo/model.hpp"
#include "photonic_kondo/validation.hpp"

using namespace pkondo;
using Cx = std::complex<double>;
namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("exchange couplings from emitter data") {
    const KondoCouplings symmetric = derive_kondo_coupling({1.0, 1.0, 4.0, 0.0});
    CHECK(!symmetric.anisotropic);
    CHECK(symmetric.isotropic == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(symmetric.parallel == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(symmetric.perpendicular == doctest::Approx(1.0).epsilon(1e-15));

    const KondoCouplings skew = derive_kondo_coupling({1.0, 2.0, 10.0, 0.0});
    CHECK(skew.anisotropic);
    CHECK(skew.parallel == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(skew.perpendicular == doctest::Approx(0.8).epsilon(1e-15));

    CHECK_THROWS_AS(derive_kondo_coupling({1.0, 1.0, 0.0, 0.0}), InvalidParameter);
    CHECK_THROWS_AS(derive_kondo_coupling({1.0, 1.0, -2.0, 0.0}), InvalidParameter);
}

TEST_CASE("isotropic parameters require symmetric couplings") {
    const KondoParams params = params_from_emitter({0.5, 0.5, 2.0, 0.3}, 1.5, 80.0);
    CHECK(params.exchange == doctest::Approx(4.0 * 0.25 / 2.0).epsilon(1e-15));
    CHECK(params.photon_density == 1.5);
    CHECK(params.detuning == 0.3);
    CHECK(params.carrier == 80.0);
    CHECK_THROWS_AS(params_from_emitter({0.5, 0.6, 2.0, 0.0}, 1.0, 80.0), InvalidParameter);
}

TEST_CASE("scattering phase matches the Cayley form of 1 + i pi J") {
    CHECK(scattering_phase(0.0) == 0.0);
    for (double exchange : {0.01, 0.1, 0.5, 1.0, 5.0, 40.0}) {
        const double phi = scattering_phase(exchange);
        CHECK(phi > 0.0);
        CHECK(phi < pi);
        const Cx cayley = (Cx{1.0, pi * exchange}) / (Cx{1.0, -pi * exchange});
        CHECK(std::abs(std::exp(Cx{0.0, phi}) - cayley) < 1e-14);
    }
    CHECK_THROWS_AS(scattering_phase(-0.1), InvalidParameter);
}

TEST_CASE("jones state of a right-circular-plus-linear superposition") {
    // alpha_+ = 1, alpha_- = i, L = 2: unit photon density, axis along +e_y.
    const JonesState state = jones_from_amplitudes({Cx{1.0, 0.0}, Cx{0.0, 1.0}, 2.0});
    CHECK(state.photon_density == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(state.spin_density.x == doctest::Approx(0.0));
    CHECK(state.spin_density.y == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(state.spin_density.z == doctest::Approx(0.0));
    CHECK(norm(state.axis - unit_y) < 1e-15);

    CHECK_THROWS_AS(jones_from_amplitudes({Cx{0.0, 0.0}, Cx{0.0, 0.0}, 1.0}), ZeroField);
    CHECK_THROWS_AS(jones_from_amplitudes({Cx{1.0, 0.0}, Cx{0.0, 0.0}, 0.0}), InvalidParameter);
}

TEST_CASE("polarization_for inverts jones_from_amplitudes") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> density(0.1, 8.0);
    for (int i = 0; i < 50; ++i) {
        const Vec3 axis = sample_unit(rng);
        const double f = density(rng);
        const JonesState state = jones_from_amplitudes(polarization_for(axis, f));
        CHECK(std::abs(state.photon_density - f) < 1e-13 * f);
        CHECK(norm(state.axis - axis) < 1e-13);
    }
}

TEST_CASE("driven config derives the induced rates and axes") {
    KondoParams params;
    params.exchange = 0.1;
    params.photon_density = 1.0;
    params.detuning = 0.7;
    params.carrier = 100.0;
    const DrivenConfig config = build_driven_config(params, unit_x);

    // Independent re-derivation from the defining formulas.
    const double phi = 2.0 * std::atan(pi * params.exchange);
    const double omega0 = pi * params.exchange * params.photon_density * std::cos(0.5 * phi) *
                          std::cos(0.5 * phi);
    const double gamma =
        0.5 * pi * params.exchange * params.photon_density * std::sin(phi);
    CHECK(config.phi == doctest::Approx(phi).epsilon(1e-15));
    CHECK(config.lamb_shift == doctest::Approx(omega0).epsilon(1e-15));
    CHECK(config.gamma == doctest::Approx(gamma).epsilon(1e-15));

    const Vec3 h = omega0 * unit_x + params.detuning * unit_z;
    CHECK(norm(config.h_eff - h) < 1e-15);
    CHECK(config.omega == doctest::Approx(norm(h)).epsilon(1e-15));
    CHECK(config.lambda_ratio == doctest::Approx(config.omega / config.gamma).epsilon(1e-15));
    CHECK(norm(config.n_h - h / norm(h)) < 1e-15);
    CHECK(config.psi == doctest::Approx(std::acos(dot(config.n_h, config.n_cl))).epsilon(1e-12));
    // The scattering phase ties the ratio Gamma / Omega0 to tan(phi/2).
    CHECK(config.gamma / config.lamb_shift == doctest::Approx(std::tan(0.5 * phi)).epsilon(1e-14));
    CHECK(!config.degenerate_axis);
}

TEST_CASE("undriven config: field along e_z only") {
    KondoParams params;
    params.exchange = 0.3;
    params.photon_density = 0.0;
    params.detuning = 1.0;
    const DrivenConfig config = build_driven_config(params, unit_x);
    CHECK(config.lamb_shift == 0.0);
    CHECK(config.gamma == 0.0);
    CHECK(config.omega == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm(config.n_h - unit_z) == 0.0);
    CHECK(config.psi == doctest::Approx(0.5 * pi).epsilon(1e-15));
    CHECK(!config.degenerate_axis);
}

TEST_CASE("degenerate config flagged when the effective field vanishes") {
    KondoParams params;
    params.exchange = 0.2;
    params.photon_density = 0.0;
    params.detuning = 0.0;
    const DrivenConfig config = build_driven_config(params, unit_x);
    CHECK(config.degenerate_axis);
    CHECK(config.omega == 0.0);
    CHECK(norm(config.n_h - unit_z) == 0.0);
}

TEST_CASE("circular drive aligns the field axis with the drive axis") {
    KondoParams params;
    params.exchange = 0.2;
    params.photon_density = 1.0;
    params.detuning = 0.4;
    const DrivenConfig plus = build_driven_config(params, unit_z);
    CHECK(plus.psi == doctest::Approx(0.0));
    // With |detuning| > Omega0 the field of the minus drive points along +e_z.
    params.detuning = 1.0;
    const DrivenConfig minus = build_driven_config(params, -unit_z);
    CHECK(minus.psi == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("parameter domain errors") {
    KondoParams params;
    params.exchange = -0.1;
    params.photon_density = 1.0;
    CHECK_THROWS_AS(build_driven_config(params, unit_x), InvalidParameter);
    params.exchange = 0.1;
    params.photon_density = -1.0;
    CHECK_THROWS_AS(build_driven_config(params, unit_x), InvalidParameter);
    params.photon_density = 1.0;
    CHECK_THROWS_AS(build_driven_config(params, Vec3{1.0, 1.0, 0.0}), InvalidParameter);
    CHECK_THROWS_AS(polarization_for(Vec3{0.5, 0.0, 0.0}, 1.0), InvalidParameter);
}
