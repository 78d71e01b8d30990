#pragma once

// Lattice and emitter parameters for a coupled-resonator array with one
// two-level system attached to the adjacent sites 0 and 1, plus the cosine
// band of the bare array.
//
// Energies are in units of the hopping xi unless the caller chooses
// otherwise; every parameter is independently settable.

#include <numbers>

namespace cra {

inline constexpr double kPi = std::numbers::pi;

// Default absolute tolerance for identity checks (unitarity, oracle
// agreement, path decomposition).
inline constexpr double kIdentityTolerance = 1e-10;

struct LatticeParams {
    double omega_c = 2.0;  // on-site frequency
    double xi = 1.0;       // nearest-neighbour hopping, > 0
};

struct EmitterParams {
    double omega = 2.0;  // TLS level spacing
    double g0 = 0.0;     // coupling to site 0, >= 0
    double g1 = 0.0;     // coupling to site 1, >= 0
};

struct ModelParams {
    LatticeParams lattice;
    EmitterParams emitter;
};

// Throw ConfigError if a parameter set violates its invariants.
void validate(const LatticeParams& lattice);
void validate(const EmitterParams& emitter);
void validate(const ModelParams& params);

// Convenience builder for the common case used throughout the tests and the
// CLI: ModelParams{{omega_c, xi}, {omega, g0, g1}} with validation.
ModelParams make_params(double omega_c, double xi, double omega, double g0, double g1);

// Dimensionless Bloch wavenumber on the principal branch [0, pi].
class BlochMomentum {
public:
    // Throws DomainError outside [0, pi] or for non-finite input.
    explicit BlochMomentum(double k);

    double value() const noexcept { return k_; }

    // True for 0 < k < pi, where sin k != 0 and scattering is defined.
    bool is_propagating() const noexcept;

private:
    double k_;
};

struct BandEnergy {
    double value = 0.0;
};

double band_bottom(const LatticeParams& lattice) noexcept;
double band_top(const LatticeParams& lattice) noexcept;

// Closed band [omega_c - 2 xi, omega_c + 2 xi].
bool in_band(double energy, const LatticeParams& lattice) noexcept;
// Open band, excluding the edges where the group velocity vanishes.
bool in_open_band(double energy, const LatticeParams& lattice) noexcept;

// E_k = omega_c - 2 xi cos k.
BandEnergy dispersion(BlochMomentum k, const LatticeParams& lattice) noexcept;

// Inverse of dispersion on [0, pi]. Throws DomainError for energies outside
// the closed band; the message names the band limits.
BlochMomentum momentum_from_energy(BandEnergy energy, const LatticeParams& lattice);

// dE/dk = 2 xi sin k, in sites per unit time.
double group_velocity(BlochMomentum k, const LatticeParams& lattice) noexcept;

}  // namespace cra
