// Acceptance gate: one pass/fail line per release criterion, exit code equal
// to the number of failures.  Criteria 1-9 wrap the library's self-checks;
// criterion 8 additionally runs the co-aligned-detector scan spelled out in
// the release checklist, and criterion 10 drives the installed binary.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "photonic_kondo/model.hpp"
#include "photonic_kondo/photon_stats.hpp"
#include "photonic_kondo/validation.hpp"

namespace {

using namespace pkondo;
constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int number, const char* name, bool passed, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s -- %s\n", passed ? "PASS" : "FAIL", number, name,
                detail.c_str());
    if (!passed) ++failures;
}

std::string fmt(const char* pattern, ...) {
    va_list args;
    va_start(args, pattern);
    char buf[1024];
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

void report_check(int number, const char* name, const CheckResult& r) {
    report(number, name, r.passed,
           fmt("max %.3e vs tol %g in %.2fs; %s", r.max_deviation, r.tolerance, r.seconds,
               r.detail.c_str()));
}

// Drive tilted by psi against its own effective field at a prescribed
// lambda = Omega/Gamma, polarized along e_x.
DrivenConfig tilted_config(double lambda, double psi, double detuning_sign) {
    KondoParams params;
    const double u = std::cos(psi);
    params.exchange = 1.0 / (pi * lambda * u);
    params.photon_density = (lambda * lambda * u * u + 1.0) / lambda;
    params.detuning = -detuning_sign * std::sin(psi);
    params.carrier = 100.0;
    return build_driven_config(params, unit_x);
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const char* cli = std::getenv("PKONDO_CLI_PATH");
    RunResult result;
    if (cli == nullptr) return result;
    std::ostringstream capture;
    capture << "/tmp/pkondo_acceptance_" << getpid() << "_" << counter++ << ".txt";
    const std::string command =
        "\"" + std::string(cli) + "\" " + args + " > " + capture.str() + " 2>&1";
    const int status = std::system(command.c_str());
    result.exit_code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture.str(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.out = buf.str();
    std::remove(capture.str().c_str());
    return result;
}

void criterion_8() {
    const CheckResult laws = check_g2_laws(500);

    // Checklist clause taken literally: both regimes inside a (lambda, psi)
    // scan that keeps BOTH detectors co-aligned with the drive axis,
    // n = m = n_cl = e_x.
    const auto t0 = std::chrono::steady_clock::now();
    double par_lo = 1e300, par_hi = -1e300;
    double anti_lo = 1e300, anti_hi = -1e300;
    for (double lambda : {0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        for (int k = 1; k <= 12; ++k) {
            const double psi = 0.5 * pi * k / 13.0;
            for (double sign : {1.0, -1.0}) {
                const DrivenConfig config = tilted_config(lambda, psi, sign);
                const double par = g2(config, unit_x, unit_x, 0.0);
                par_lo = std::min(par_lo, par);
                par_hi = std::max(par_hi, par);
                const double anti = g2(config, -unit_x, unit_x, 0.0);
                anti_lo = std::min(anti_lo, anti);
                anti_hi = std::max(anti_hi, anti);
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool scan_clause = par_lo < 1.0 && par_hi > 1.0;

    report(8, "coincidence laws with co-aligned-detector regime scan",
           laws.passed && scan_clause,
           fmt("module laws %s (max %.3e vs tol %g; %s); co-aligned scan in %.2fs: "
               "g2(0) with n = m = n_cl spans [%.9f, %.6f]%s",
               laws.passed ? "pass" : "FAIL", laws.max_deviation, laws.tolerance,
               laws.detail.c_str(), seconds, par_lo, par_hi,
               scan_clause
                   ? ""
                   : fmt("; antibunching never occurs for co-aligned detectors -- the"
                         " antibunched regime lives at the opposed detector (g2(0) in"
                         " [%.3f, %.3f] for n = -m = -n_cl), so the clause as stated is"
                         " unattainable while every constituent law above passes",
                         anti_lo, anti_hi)
                         .c_str()));
}

void criterion_10() {
    if (std::getenv("PKONDO_CLI_PATH") == nullptr) {
        report(10, "CLI validation suite and byte-identical output", false,
               "PKONDO_CLI_PATH not set");
        return;
    }
    const RunResult validate = run_cli("validate");
    const bool validate_ok = validate.exit_code == 0 &&
                             validate.out.find("all checks passed") != std::string::npos;

    const std::string dynamics =
        "dynamics --J 0.1 --f 1 --delta 0.4 --ncl 1,0,0 --s0 0,0,0.5 --tau-max 15 "
        "--tau-steps 301";
    const std::string spectrum =
        "spectrum --J 0.05 --f 1 --delta 2 --ncl 1,0,0 --nu-min -3 --nu-max 3 --nu-steps 1201";
    const RunResult d1 = run_cli(dynamics);
    const RunResult d2 = run_cli(dynamics);
    const RunResult s1 = run_cli(spectrum);
    const RunResult s2 = run_cli(spectrum);
    const bool deterministic = d1.exit_code == 0 && d2.exit_code == 0 && s1.exit_code == 0 &&
                               s2.exit_code == 0 && d1.out == d2.out && s1.out == s2.out &&
                               !d1.out.empty() && !s1.out.empty();

    report(10, "CLI validation suite and byte-identical output", validate_ok && deterministic,
           fmt("validate exit %d%s; repeated dynamics/spectrum invocations %s", validate.exit_code,
               validate_ok ? " (all checks passed)" : "",
               deterministic ? "byte-identical" : "DIFFER"));
}

}  // namespace

int main() {
    std::printf("acceptance: exact photonic Kondo engine\n");
    report_check(1, "Bloch closed form vs independent integrator", check_bloch_oracle(1000));
    report_check(2, "correlator closed forms vs independent integrator",
                 check_correlator_oracle(500));
    report_check(3, "purity limits", check_purity_limits(200));
    report_check(4, "power conservation", check_power_conservation(200));
    report_check(5, "inelastic density vanishes for pure stationary states",
                 check_inelastic_vanishing());
    report_check(6, "spectral mirror symmetry and asymmetry", check_spectral_symmetry());
    report_check(7, "outgoing field consistency and ellipticity bound", check_outgoing_field(500));
    criterion_8();
    report_check(9, "three-peak structure", check_three_peaks());
    criterion_10();

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
