#include "cra/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cra/errors.hpp"

namespace cra {

void validate(const LatticeParams& lattice) {
    if (!std::isfinite(lattice.omega_c)) {
        throw ConfigError("omega_c must be finite");
    }
    if (!std::isfinite(lattice.xi) || !(lattice.xi > 0.0)) {
        throw ConfigError("xi must be a finite positive hopping strength");
    }
}

void validate(const EmitterParams& emitter) {
    if (!std::isfinite(emitter.omega)) {
        throw ConfigError("omega (TLS level spacing) must be finite");
    }
    if (!std::isfinite(emitter.g0) || emitter.g0 < 0.0 || !std::isfinite(emitter.g1) ||
        emitter.g1 < 0.0) {
        throw ConfigError("couplings g0 and g1 must be finite and non-negative");
    }
}

void validate(const ModelParams& params) {
    validate(params.lattice);
    validate(params.emitter);
}

ModelParams make_params(double omega_c, double xi, double omega, double g0, double g1) {
    ModelParams params{{omega_c, xi}, {omega, g0, g1}};
    validate(params);
    return params;
}

BlochMomentum::BlochMomentum(double k) : k_(k) {
    if (!std::isfinite(k) || k < 0.0 || k > kPi) {
        std::ostringstream msg;
        msg << "Bloch momentum " << k << " outside principal branch [0, pi]";
        throw DomainError(msg.str());
    }
}

bool BlochMomentum::is_propagating() const noexcept { return k_ > 0.0 && k_ < kPi; }

double band_bottom(const LatticeParams& lattice) noexcept {
    return lattice.omega_c - 2.0 * lattice.xi;
}

double band_top(const LatticeParams& lattice) noexcept {
    return lattice.omega_c + 2.0 * lattice.xi;
}

bool in_band(double energy, const LatticeParams& lattice) noexcept {
    return energy >= band_bottom(lattice) && energy <= band_top(lattice);
}

bool in_open_band(double energy, const LatticeParams& lattice) noexcept {
    return energy > band_bottom(lattice) && energy < band_top(lattice);
}

BandEnergy dispersion(BlochMomentum k, const LatticeParams& lattice) noexcept {
    return {lattice.omega_c - 2.0 * lattice.xi * std::cos(k.value())};
}

BlochMomentum momentum_from_energy(BandEnergy energy, const LatticeParams& lattice) {
    if (!std::isfinite(energy.value) || !in_band(energy.value, lattice)) {
        std::ostringstream msg;
        msg << "energy " << energy.value << " outside band [" << band_bottom(lattice) << ", "
            << band_top(lattice) << "]";
        throw DomainError(msg.str());
    }
    const double c = std::clamp((lattice.omega_c - energy.value) / (2.0 * lattice.xi), -1.0, 1.0);
    return BlochMomentum(std::acos(c));
}

double group_velocity(BlochMomentum k, const LatticeParams& lattice) noexcept {
    return 2.0 * lattice.xi * std::sin(k.value());
}

}  // namespace cra
