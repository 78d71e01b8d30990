#pragma once

#include <stdexcept>
#include <string>

namespace cra {

// Input outside the mathematical domain of an operation (band edges,
// out-of-band energies, undefined path basis, unequal couplings where the
// two-arm picture needs g0 == g1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Invalid user-facing configuration: bad parameters, empty ranges,
// wavepacket runs that would hit the lattice walls.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The boundary-matched linear system could not be solved reliably.
class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(const std::string& what, double rcond)
        : std::runtime_error(what), rcond_(rcond) {}

    // Reciprocal condition number estimate of the assembled system.
    double rcond() const noexcept { return rcond_; }

private:
    double rcond_;
};

// Time integration lost too much norm to be trusted.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double norm_drift)
        : std::runtime_error(what), norm_drift_(norm_drift) {}

    double norm_drift() const noexcept { return norm_drift_; }

private:
    double norm_drift_;
};

}  // namespace cra
