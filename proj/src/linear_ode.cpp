#include "photonic_kondo/linear_ode.hpp"

#include <algorithm>
#include <cmath>

#include "photonic_kondo/errors.hpp"

namespace pkondo {

namespace {

void apply(const LinearSystem& sys, const std::vector<Complex>& x, std::vector<Complex>& out) {
    const std::size_t d = sys.dimension;
    for (std::size_t i = 0; i < d; ++i) {
        Complex acc = sys.inhomogeneity[i];
        const Complex* row = sys.matrix.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) acc += row[j] * x[j];
        out[i] = acc;
    }
}

void check_sizes(const LinearSystem& sys) {
    if (sys.dimension == 0 || sys.dimension > 12 ||
        sys.matrix.size() != sys.dimension * sys.dimension ||
        sys.inhomogeneity.size() != sys.dimension || sys.initial.size() != sys.dimension) {
        throw InvalidParameter("inconsistent linear system sizes");
    }
}

}  // namespace

double row_sum_norm(const LinearSystem& system) {
    double worst = 0.0;
    for (std::size_t i = 0; i < system.dimension; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < system.dimension; ++j) {
            row += std::abs(system.matrix[i * system.dimension + j]);
        }
        worst = std::max(worst, row);
    }
    return worst;
}

std::vector<std::pair<double, std::vector<Complex>>> integrate_rk4(const LinearSystem& system,
                                                                   double t_max, double step) {
    check_sizes(system);
    if (!(step > 0.0) || !(t_max >= step)) {
        throw InvalidParameter("integration requires step > 0 and t_max >= step");
    }
    const double bound = row_sum_norm(system);
    if (bound > 0.0 && step > 0.1 / bound) {
        throw StepTooLarge("step exceeds 0.1 / row-sum norm of the system matrix");
    }
    const std::size_t n_steps = static_cast<std::size_t>(std::ceil(t_max / step - 1e-12));
    const double h = t_max / static_cast<double>(n_steps);
    const std::size_t d = system.dimension;

    std::vector<std::pair<double, std::vector<Complex>>> samples;
    samples.reserve(n_steps + 1);
    std::vector<Complex> x = system.initial;
    samples.emplace_back(0.0, x);

    std::vector<Complex> k1(d), k2(d), k3(d), k4(d), scratch(d);
    for (std::size_t n = 0; n < n_steps; ++n) {
        apply(system, x, k1);
        for (std::size_t i = 0; i < d; ++i) scratch[i] = x[i] + 0.5 * h * k1[i];
        apply(system, scratch, k2);
        for (std::size_t i = 0; i < d; ++i) scratch[i] = x[i] + 0.5 * h * k2[i];
        apply(system, scratch, k3);
        for (std::size_t i = 0; i < d; ++i) scratch[i] = x[i] + h * k3[i];
        apply(system, scratch, k4);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        samples.emplace_back(static_cast<double>(n + 1) * h, x);
    }
    return samples;
}

double richardson_check(const LinearSystem& system, double t) {
    check_sizes(system);
    if (!(t > 0.0)) {
        throw InvalidParameter("richardson check requires t > 0");
    }
    const double bound = row_sum_norm(system);
    double step = t / 64.0;
    if (bound > 0.0) step = std::min(step, 0.05 / bound);
    const auto coarse = integrate_rk4(system, t, step);
    const auto fine = integrate_rk4(system, t, 0.5 * step);
    const auto& xc = coarse.back().second;
    const auto& xf = fine.back().second;
    double diff = 0.0;
    for (std::size_t i = 0; i < system.dimension; ++i) {
        diff = std::max(diff, std::abs(xc[i] - xf[i]));
    }
    return diff / 15.0;
}

}  // namespace pkondo
