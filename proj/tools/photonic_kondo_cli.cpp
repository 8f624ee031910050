// Command-line front end: CSV emission for every figure-grade dataset plus
// the self-validation suite.  All options live on the top-level app and fall
// through from the subcommands, so a flat key=value config file can set any
// of them; command-line flags take precedence.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "photonic_kondo/bloch.hpp"
#include "photonic_kondo/errors.hpp"
#include "photonic_kondo/model.hpp"
#include "photonic_kondo/photon_stats.hpp"
#include "photonic_kondo/spectra.hpp"
#include "photonic_kondo/validation.hpp"

namespace {

using namespace pkondo;

std::string fnum(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string fvec(const Vec3& v) { return fnum(v.x) + "," + fnum(v.y) + "," + fnum(v.z); }

std::string fcomplex(const Complex& c) { return fnum(c.real()) + "," + fnum(c.imag()); }

// Options shared by all subcommands.  Presence flags are taken from the
// CLI11 option counts after parsing.
struct CliOptions {
    double exchange = 0.0;
    double photon_density = 0.0;
    double detuning = 0.0;
    double carrier = 100.0;
    std::vector<double> ncl;
    std::vector<double> alpha_plus;
    std::vector<double> alpha_minus;
    double length = 1.0;
    std::vector<double> s0;
    std::vector<double> nd;
    std::vector<double> n_det;
    std::vector<double> m_det;
    double nu_min = -6.0;
    double nu_max = 6.0;
    std::size_t nu_steps = 2401;
    double tau_max = 20.0;
    std::size_t tau_steps = 401;
    std::string out_path;
    bool raw_units = false;
    bool fast = false;
};

Vec3 vec3_from(const std::vector<double>& values, const char* flag) {
    if (values.size() != 3) {
        throw ParseError(std::string(flag) + " expects three comma-separated components");
    }
    return {values[0], values[1], values[2]};
}

Complex complex_from(const std::vector<double>& values, const char* flag) {
    if (values.size() != 2) {
        throw ParseError(std::string(flag) + " expects re,im");
    }
    return {values[0], values[1]};
}

// Resolved drive: model parameters, amplitudes and the polarization axis,
// whichever entry mode was used.
struct DriveInput {
    KondoParams params;
    JonesPolarization pol;
    Vec3 n_cl;
    bool alpha_mode = false;
};

DriveInput resolve_drive(const CliOptions& o, bool f_given, bool ncl_given, bool plus_given,
                         bool minus_given) {
    if (plus_given != minus_given) {
        throw ParseError("amplitude mode needs both --alpha-plus and --alpha-minus");
    }
    const bool alpha_mode = plus_given;
    if (alpha_mode == ncl_given) {
        throw ParseError(
            "supply exactly one polarization mode: --ncl, or --alpha-plus/--alpha-minus");
    }
    DriveInput drive;
    drive.alpha_mode = alpha_mode;
    drive.params.exchange = o.exchange;
    drive.params.detuning = o.detuning;
    drive.params.carrier = o.carrier;
    if (alpha_mode) {
        if (f_given) {
            throw ParseError("--f conflicts with amplitude mode; the photon density follows "
                             "from the amplitudes and the length");
        }
        drive.pol.alpha_plus = complex_from(o.alpha_plus, "--alpha-plus");
        drive.pol.alpha_minus = complex_from(o.alpha_minus, "--alpha-minus");
        drive.pol.length = o.length;
        const JonesState jones = jones_from_amplitudes(drive.pol);
        drive.params.photon_density = jones.photon_density;
        drive.n_cl = jones.axis;
    } else {
        // Amplitudes are derived lazily (only the ellipticity sweep needs
        // them), so a vanishing photon density still reaches the dynamics
        // entry points that accept it.
        if (!f_given) throw ParseError("--f is required when the drive is given by --ncl");
        drive.params.photon_density = o.photon_density;
        drive.n_cl = vec3_from(o.ncl, "--ncl");
    }
    return drive;
}

void append_kv(std::string& out, const char* key, const std::string& value) {
    out += "# ";
    out += key;
    out += " = ";
    out += value;
    out += "\n";
}

// Common metadata: the subcommand, every input needed to re-run, and the
// derived scalars of the drive configuration.
std::string header_common(const char* subcommand, const CliOptions& o, const DriveInput& drive,
                          const DrivenConfig& config) {
    std::string out = "# photonic-kondo ";
    out += subcommand;
    out += "\n";
    append_kv(out, "J", fnum(config.params.exchange));
    append_kv(out, "f", fnum(config.params.photon_density));
    append_kv(out, "delta", fnum(config.params.detuning));
    append_kv(out, "carrier", fnum(config.params.carrier));
    if (drive.alpha_mode) {
        append_kv(out, "alpha_plus", fcomplex(drive.pol.alpha_plus));
        append_kv(out, "alpha_minus", fcomplex(drive.pol.alpha_minus));
        append_kv(out, "length", fnum(drive.pol.length));
    }
    append_kv(out, "ncl", fvec(config.n_cl));
    append_kv(out, "raw_units", o.raw_units ? "true" : "false");
    append_kv(out, "phi", fnum(config.phi));
    append_kv(out, "Omega0", fnum(config.lamb_shift));
    append_kv(out, "Gamma", fnum(config.gamma));
    append_kv(out, "Omega", fnum(config.omega));
    append_kv(out, "lambda", fnum(config.lambda_ratio));
    append_kv(out, "psi", fnum(config.psi));
    const double gamma_st = config.gamma > 0.0 ? stationary_purity(config)
                                               : std::numeric_limits<double>::quiet_NaN();
    append_kv(out, "gamma_st", fnum(gamma_st));
    return out;
}

// Largest delay in raw units; delays are quoted in units of 1/Gamma unless
// --raw-units is set.
double raw_time_span(const CliOptions& o, const DrivenConfig& config) {
    if (o.raw_units) return o.tau_max;
    if (config.gamma <= 0.0) {
        throw NoDissipation("the time unit 1/Gamma is undefined at Gamma = 0; pass --raw-units");
    }
    return o.tau_max / config.gamma;
}

void require_steps(std::size_t steps, const char* flag) {
    if (steps < 2) throw ParseError(std::string(flag) + " must be at least 2");
}

std::vector<double> nu_grid_from(const CliOptions& o) {
    if (!(o.nu_min < o.nu_max)) throw ParseError("--nu-min must be below --nu-max");
    require_steps(o.nu_steps, "--nu-steps");
    return uniform_grid(o.nu_min, o.nu_max, o.nu_steps);
}

std::string run_dynamics(const CliOptions& o, const DriveInput& drive) {
    const DrivenConfig config = build_driven_config(drive.params, drive.n_cl);
    const Vec3 s0 = o.s0.empty() ? Vec3{} : vec3_from(o.s0, "--s0");
    require_steps(o.tau_steps, "--tau-steps");
    const double t_max = raw_time_span(o, config);
    const BlochTrajectory trajectory = evolve_trajectory(config, s0, t_max, o.tau_steps);

    std::string out = header_common("dynamics", o, drive, config);
    append_kv(out, "s0", fvec(s0));
    append_kv(out, "tau_max", fnum(o.tau_max));
    append_kv(out, "tau_steps", fnum(double(o.tau_steps)));
    out += "t,Sx,Sy,Sz,purity\n";
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        const double t_col =
            o.raw_units ? trajectory.times[i] : trajectory.times[i] * config.gamma;
        const Vec3& s = trajectory.states[i];
        out += fnum(t_col) + "," + fnum(s.x) + "," + fnum(s.y) + "," + fnum(s.z) + "," +
               fnum(trajectory.purities[i]) + "\n";
    }
    return out;
}

std::string run_spectrum(const CliOptions& o, const DriveInput& drive) {
    const DrivenConfig config = build_driven_config(drive.params, drive.n_cl);
    const std::vector<double> grid = nu_grid_from(o);
    const SpectrumUnresolved spectrum = spectrum_unresolved(config, grid);

    std::string out = header_common("spectrum", o, drive, config);
    append_kv(out, "nu_min", fnum(o.nu_min));
    append_kv(out, "nu_max", fnum(o.nu_max));
    append_kv(out, "nu_steps", fnum(double(o.nu_steps)));
    append_kv(out, "elastic_weight", fnum(spectrum.elastic_weight));
    out += "nu,inelastic_density\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double nu_col = o.raw_units ? config.omega * grid[i] : grid[i];
        out += fnum(nu_col) + "," + fnum(spectrum.inelastic[i]) + "\n";
    }
    return out;
}

std::string run_spectrum_resolved(const CliOptions& o, const DriveInput& drive, bool nd_given) {
    if (!nd_given) throw ParseError("spectrum-resolved requires a detector axis --nd");
    const DrivenConfig config = build_driven_config(drive.params, drive.n_cl);
    const Vec3 detector = vec3_from(o.nd, "--nd");
    const std::vector<double> grid = nu_grid_from(o);
    const SpectrumResolved spectrum = spectrum_resolved(config, detector, grid);

    std::string out = header_common("spectrum-resolved", o, drive, config);
    append_kv(out, "nd", fvec(detector));
    append_kv(out, "nu_min", fnum(o.nu_min));
    append_kv(out, "nu_max", fnum(o.nu_max));
    append_kv(out, "nu_steps", fnum(double(o.nu_steps)));
    append_kv(out, "elastic_weight", fnum(spectrum.base.elastic_weight));
    append_kv(out, "elastic_vector_weight", fnum(spectrum.elastic_vector_weight));
    out += "nu,unresolved,vector_part,g1\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double nu_col = o.raw_units ? config.omega * grid[i] : grid[i];
        out += fnum(nu_col) + "," + fnum(spectrum.base.inelastic[i]) + "," +
               fnum(spectrum.vector_part[i]) + "," + fnum(spectrum.resolved[i]) + "\n";
    }
    return out;
}

std::string run_ellipticity(const CliOptions& o, const DriveInput& drive) {
    KondoParams base_params = drive.params;
    base_params.detuning = 0.0;
    const DrivenConfig base = build_driven_config(base_params, drive.n_cl);
    if (base.lamb_shift <= 0.0) {
        throw InvalidParameter("the sweep variable delta/Omega0 is undefined at Omega0 = 0 "
                               "(exchange or photon density vanishes)");
    }
    const std::vector<double> ratios = nu_grid_from(o);

    std::string out = header_common("ellipticity", o, drive, base);
    append_kv(out, "nu_min", fnum(o.nu_min));
    append_kv(out, "nu_max", fnum(o.nu_max));
    append_kv(out, "nu_steps", fnum(double(o.nu_steps)));
    out += "delta_over_omega0,theta_deg\n";
    for (const double ratio : ratios) {
        KondoParams swept = base_params;
        swept.detuning = ratio * base.lamb_shift;
        const DrivenConfig config = build_driven_config(swept, drive.n_cl);
        const JonesPolarization pol =
            drive.alpha_mode ? drive.pol
                             : polarization_for(config.n_cl, config.params.photon_density);
        const OutgoingField field = outgoing_field(config, pol);
        const double abscissa = o.raw_units ? swept.detuning : ratio;
        out += fnum(abscissa) + "," + fnum(field.theta_deg) + "\n";
    }
    return out;
}

std::string run_g2(const CliOptions& o, const DriveInput& drive, bool n_given, bool m_given) {
    const DrivenConfig config = build_driven_config(drive.params, drive.n_cl);
    const Vec3 n = n_given ? vec3_from(o.n_det, "--n") : config.n_cl;
    const Vec3 m = m_given ? vec3_from(o.m_det, "--m") : config.n_cl;
    require_steps(o.tau_steps, "--tau-steps");
    const double tau_max = raw_time_span(o, config);
    const G2Curve curve = g2_curve(config, n, m, tau_max, o.tau_steps);

    std::string out = header_common("g2", o, drive, config);
    append_kv(out, "n", fvec(n));
    append_kv(out, "m", fvec(m));
    append_kv(out, "tau_max", fnum(o.tau_max));
    append_kv(out, "tau_steps", fnum(double(o.tau_steps)));
    out += "tau,g2\n";
    for (std::size_t i = 0; i < curve.taus.size(); ++i) {
        const double tau_col = o.raw_units ? curve.taus[i] : curve.taus[i] * config.gamma;
        out += fnum(tau_col) + "," + fnum(curve.values[i]) + "\n";
    }
    return out;
}

int run_validate(const CliOptions& o) {
    const std::vector<CheckResult> results = run_all_checks(o.fast);
    bool all_passed = true;
    for (const CheckResult& r : results) {
        std::printf("%-20s %s  max %.3e  tol %g  %5.2fs  %s\n", r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.max_deviation, r.tolerance, r.seconds,
                    r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    std::printf("%s\n", all_passed ? "all checks passed" : "SOME CHECKS FAILED");
    return all_passed ? 0 : 1;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::string path = out_path;
    const char* prefix = std::getenv("PHOTONIC_KONDO_OUT");
    const bool is_absolute = !path.empty() && path.front() == '/';
    if (prefix != nullptr && prefix[0] != '\0' && !is_absolute) {
        path = std::string(prefix) + "/" + path;
    }
    std::FILE* file = std::fopen(path.c_str(), "wb");
    if (file == nullptr) {
        throw Error(1, "cannot open output file " + path);
    }
    std::fwrite(content.data(), 1, content.size(), file);
    std::fclose(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spin dynamics, emission spectra and photon statistics of a chirally "
                 "driven two-level emitter"};
    app.require_subcommand(1);
    CliOptions o;

    auto* opt_j = app.add_option("--J", o.exchange, "Exchange coupling J");
    auto* opt_f = app.add_option("--f", o.photon_density, "Photon density of the drive");
    app.add_option("--delta", o.detuning, "Two-photon detuning");
    app.add_option("--carrier", o.carrier, "Carrier frequency of the drive")
        ->capture_default_str();
    auto* opt_ncl =
        app.add_option("--ncl", o.ncl, "Drive polarization axis x,y,z (unit length)")
            ->delimiter(',');
    auto* opt_plus =
        app.add_option("--alpha-plus", o.alpha_plus, "Right-circular amplitude re,im")
            ->delimiter(',');
    auto* opt_minus =
        app.add_option("--alpha-minus", o.alpha_minus, "Left-circular amplitude re,im")
            ->delimiter(',');
    app.add_option("--length", o.length, "Quantization length for the amplitudes")
        ->capture_default_str();
    app.add_option("--s0", o.s0, "Initial Bloch vector x,y,z (dynamics; default 0,0,0)")
        ->delimiter(',');
    auto* opt_nd =
        app.add_option("--nd", o.nd, "Detector axis x,y,z (spectrum-resolved)")->delimiter(',');
    auto* opt_n =
        app.add_option("--n", o.n_det, "Polarization of the later photon x,y,z (g2; default ncl)")
            ->delimiter(',');
    auto* opt_m =
        app.add_option("--m", o.m_det, "Polarization of the first photon x,y,z (g2; default ncl)")
            ->delimiter(',');
    app.add_option("--nu-min", o.nu_min, "Lower edge of the reduced-detuning grid")
        ->capture_default_str();
    app.add_option("--nu-max", o.nu_max, "Upper edge of the reduced-detuning grid")
        ->capture_default_str();
    app.add_option("--nu-steps", o.nu_steps, "Number of grid points (rows)")
        ->capture_default_str();
    app.add_option("--tau-max", o.tau_max, "Largest delay/time, in units of 1/Gamma")
        ->capture_default_str();
    app.add_option("--tau-steps", o.tau_steps, "Number of delay samples (rows)")
        ->capture_default_str();
    app.add_option("--out", o.out_path,
                   "Output CSV path (default stdout); relative paths honor PHOTONIC_KONDO_OUT");
    app.add_flag("--raw-units", o.raw_units,
                 "Emit raw model units instead of 1/Gamma times and reduced detunings");
    app.add_flag("--fast", o.fast, "validate only: cut the random-config counts tenfold");
    app.set_config("--config", "",
                   "Optional flat key=value config file; # comments; flags take precedence");

    CLI::App* sub_dynamics = app.add_subcommand("dynamics", "Bloch trajectory and purity");
    CLI::App* sub_spectrum =
        app.add_subcommand("spectrum", "Polarization-unresolved emission spectrum");
    CLI::App* sub_resolved =
        app.add_subcommand("spectrum-resolved", "Detector-resolved emission spectrum");
    CLI::App* sub_ellipticity =
        app.add_subcommand("ellipticity", "Outgoing-field ellipticity angle vs detuning");
    CLI::App* sub_g2 = app.add_subcommand("g2", "Second-order coincidence curve");
    CLI::App* sub_validate =
        app.add_subcommand("validate", "Run the self-verification suite and report deviations");
    for (CLI::App* sub :
         {sub_dynamics, sub_spectrum, sub_resolved, sub_ellipticity, sub_g2, sub_validate}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    try {
        if (sub_validate->parsed()) return run_validate(o);
        if (opt_j->count() == 0) throw ParseError("--J is required");
        const DriveInput drive = resolve_drive(o, opt_f->count() > 0, opt_ncl->count() > 0,
                                               opt_plus->count() > 0, opt_minus->count() > 0);
        std::string csv;
        if (sub_dynamics->parsed()) {
            csv = run_dynamics(o, drive);
        } else if (sub_spectrum->parsed()) {
            csv = run_spectrum(o, drive);
        } else if (sub_resolved->parsed()) {
            csv = run_spectrum_resolved(o, drive, opt_nd->count() > 0);
        } else if (sub_ellipticity->parsed()) {
            csv = run_ellipticity(o, drive);
        } else {
            csv = run_g2(o, drive, opt_n->count() > 0, opt_m->count() > 0);
        }
        write_output(o.out_path, csv);
        return 0;
    } catch (const pkondo::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
