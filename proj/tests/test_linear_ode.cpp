#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "photonic_kondo/errors.hpp"
#include "photonic_kondo/linear_ode.hpp"
#include "photonic_kondo/model.hpp"
#include "photonic_kondo/validation.hpp"

using namespace pkondo;
using Cx = std::complex<double>;

namespace {

LinearSystem scalar_decay() {
    LinearSystem sys;
    sys.dimension = 1;
    sys.matrix = {Cx{-1.0, 0.0}};
    sys.inhomogeneity = {Cx{0.0, 0.0}};
    sys.initial = {Cx{1.0, 0.0}};
    return sys;
}

double final_error(const LinearSystem& sys, double t, double step, const std::vector<Cx>& exact) {
    const auto samples = integrate_rk4(sys, t, step);
    double dev = 0.0;
    const auto& last = samples.back().second;
    for (std::size_t i = 0; i < exact.size(); ++i) dev = std::max(dev, std::abs(last[i] - exact[i]));
    return dev;
}

}  // namespace

TEST_CASE("pure drift is integrated exactly") {
    LinearSystem sys;
    sys.dimension = 2;
    sys.matrix.assign(4, Cx{0.0, 0.0});
    sys.inhomogeneity = {Cx{2.0, 0.0}, Cx{0.0, -3.0}};
    sys.initial = {Cx{1.0, 0.0}, Cx{0.0, 0.0}};
    const auto samples = integrate_rk4(sys, 5.0, 0.01);
    CHECK(samples.front().first == 0.0);
    CHECK(samples.back().first == doctest::Approx(5.0).epsilon(1e-15));
    // Exact up to rounding accumulated over the 500 additions.
    CHECK(std::abs(samples.back().second[0] - Cx{11.0, 0.0}) < 1e-12);
    CHECK(std::abs(samples.back().second[1] - Cx{0.0, -15.0}) < 1e-12);
}

TEST_CASE("scalar exponential decay at step 1e-3") {
    const double dev = final_error(scalar_decay(), 1.0, 1e-3, {Cx{std::exp(-1.0), 0.0}});
    CHECK(dev < 1e-10);
}

TEST_CASE("step halving gains at least a factor 14") {
    LinearSystem sys;
    sys.dimension = 2;
    // Damped rotation in the complex plane, eigenvalues -0.3 +- 2i.
    sys.matrix = {Cx{-0.3, 0.0}, Cx{-2.0, 0.0}, Cx{2.0, 0.0}, Cx{-0.3, 0.0}};
    sys.inhomogeneity = {Cx{0.0, 0.0}, Cx{0.0, 0.0}};
    sys.initial = {Cx{1.0, 0.0}, Cx{0.0, 0.0}};
    const double t = 3.0;
    const Cx factor = std::exp(Cx{-0.3 * t, 0.0});
    const std::vector<Cx> exact = {factor * std::cos(2.0 * t), factor * std::sin(2.0 * t)};
    const double coarse = final_error(sys, t, 0.02, exact);
    const double fine = final_error(sys, t, 0.01, exact);
    CHECK(coarse / fine >= 14.0);
}

TEST_CASE("richardson estimate bounds the drift of a known solution") {
    // Default step here is 1/64, so the fourth-order residual sits around
    // 1e-11; the estimate must be a small positive number in that regime.
    const LinearSystem sys = scalar_decay();
    const double estimate = richardson_check(sys, 1.0);
    CHECK(estimate < 1e-10);
    CHECK(estimate > 0.0);
}

TEST_CASE("stiff decay stays accurate once the step guard is satisfied") {
    LinearSystem sys;
    sys.dimension = 1;
    sys.matrix = {Cx{-50.0, 0.0}};
    sys.inhomogeneity = {Cx{50.0, 0.0}};  // relaxes toward 1
    sys.initial = {Cx{0.0, 0.0}};
    const double t = 1.0;
    const Cx exact{1.0 - std::exp(-50.0 * t), 0.0};
    CHECK(final_error(sys, t, 1e-3, {exact}) < 1e-9);
}

TEST_CASE("richardson estimate is consistent with the observed error") {
    // On the Bloch-sized relaxation system the extrapolated estimate and the
    // true error must agree within an order of magnitude.
    KondoParams params;
    params.exchange = 0.1;
    params.photon_density = 1.0;
    params.detuning = 0.5;
    const DrivenConfig config = build_driven_config(params, unit_x);
    LinearSystem sys;
    sys.dimension = 3;
    sys.matrix = {Cx{-config.gamma, 0.0}, Cx{-config.h_eff.z, 0.0}, Cx{config.h_eff.y, 0.0},
                  Cx{config.h_eff.z, 0.0}, Cx{-config.gamma, 0.0}, Cx{-config.h_eff.x, 0.0},
                  Cx{-config.h_eff.y, 0.0}, Cx{config.h_eff.x, 0.0}, Cx{-config.gamma, 0.0}};
    sys.inhomogeneity = {Cx{0.5 * config.gamma * config.n_cl.x, 0.0},
                         Cx{0.5 * config.gamma * config.n_cl.y, 0.0},
                         Cx{0.5 * config.gamma * config.n_cl.z, 0.0}};
    sys.initial = {Cx{0.1, 0.0}, Cx{-0.2, 0.0}, Cx{0.4, 0.0}};
    const double t = 8.0;
    const double estimate = richardson_check(sys, t);

    // The extrapolation estimates the error of the half-step run; compare it
    // against that run's true error, measured off a far finer reference.
    const double base_step = std::min(t / 64.0, 0.05 / row_sum_norm(sys));
    const auto reference = integrate_rk4(sys, t, base_step / 64.0);
    const auto observed_run = integrate_rk4(sys, t, 0.5 * base_step);
    double observed = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        observed =
            std::max(observed, std::abs(observed_run.back().second[i] - reference.back().second[i]));
    CHECK(observed <= 10.0 * estimate + 1e-13);
    CHECK(estimate <= 10.0 * observed + 1e-13);
}

TEST_CASE("bitwise deterministic across repeated runs") {
    const LinearSystem sys = scalar_decay();
    const auto a = integrate_rk4(sys, 2.0, 1e-3);
    const auto b = integrate_rk4(sys, 2.0, 1e-3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::memcmp(&a[i].first, &b[i].first, sizeof(double)) == 0);
        CHECK(std::memcmp(a[i].second.data(), b[i].second.data(),
                          a[i].second.size() * sizeof(Cx)) == 0);
    }
}

TEST_CASE("step guard and size validation") {
    LinearSystem sys = scalar_decay();
    CHECK_THROWS_AS(integrate_rk4(sys, 1.0, 0.2), StepTooLarge);
    sys.inhomogeneity.push_back(Cx{0.0, 0.0});
    CHECK_THROWS_AS(integrate_rk4(sys, 1.0, 1e-3), InvalidParameter);
    sys = scalar_decay();
    sys.dimension = 42;
    sys.matrix.assign(42 * 42, Cx{0.0, 0.0});
    sys.inhomogeneity.assign(42, Cx{0.0, 0.0});
    sys.initial.assign(42, Cx{0.0, 0.0});
    CHECK_THROWS_AS(integrate_rk4(sys, 1.0, 1e-3), InvalidParameter);
}
