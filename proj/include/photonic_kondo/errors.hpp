#pragma once

#include <stdexcept>
#include <string>

namespace pkondo {

// Base for all domain errors.  exit_code is what the CLI returns when the
// error escapes; codes 2..9 are documented in the README.
class Error : public std::runtime_error {
  public:
    Error(int exit_code, const std::string& what) : std::runtime_error(what), code_(exit_code) {}
    int exit_code() const { return code_; }

  private:
    int code_;
};

// Malformed CLI input or config file.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(2, what) {}
};

// Parameter outside its domain: non-positive transition frequency, negative
// exchange, non-unit axis, anisotropic couplings fed to a dynamics entry point.
struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error(3, what) {}
};

// Both polarization amplitudes vanish, or a zero outgoing field.
struct ZeroField : Error {
    explicit ZeroField(const std::string& what) : Error(4, what) {}
};

// An operation divided by the precession frequency on a config flagged
// degenerate (zero effective field).
struct ZeroEffectiveField : Error {
    explicit ZeroEffectiveField(const std::string& what) : Error(5, what) {}
};

// Stationary-state or correlator request with zero decay rate.
struct NoDissipation : Error {
    explicit NoDissipation(const std::string& what) : Error(6, what) {}
};

// Coincidence rate requested for a detector direction with vanishing
// single-detector rate.
struct DetectorDark : Error {
    explicit DetectorDark(const std::string& what) : Error(7, what) {}
};

// Frequency grid too narrow for the requested spectral integral.
struct GridTooNarrow : Error {
    explicit GridTooNarrow(const std::string& what) : Error(8, what) {}
};

// Integrator step exceeds the stability bound of the system matrix.
struct StepTooLarge : Error {
    explicit StepTooLarge(const std::string& what) : Error(9, what) {}
};

}  // namespace pkondo
