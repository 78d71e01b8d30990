#pragma once

// Closed-form single-excitation scattering off a two-level system coupled
// to the adjacent sites 0 and 1 of the array. A wave exp(ikj) incident from
// the left leaves as r exp(-ikj) on j <= -1 and t exp(ikj) on j >= 2.

#include <complex>
#include <optional>

#include "cra/model.hpp"

namespace cra {

using complex = std::complex<double>;

struct ScatteringAmplitudes {
    complex r;
    complex t;

    double reflection() const noexcept { return std::norm(r); }
    double transmission() const noexcept { return std::norm(t); }
};

struct ScatteringCoefficients {
    double R = 0.0;
    double T = 0.0;
};

// G(E) = 1 / (E - Omega). Diverges on resonance; the amplitude formulas
// below never divide by it.
struct GreensFactor {
    complex value;
};

GreensFactor greens_factor(BandEnergy energy, const EmitterParams& emitter);

// Both amplitudes at once. Throws DomainError at the band edges k = 0, pi.
ScatteringAmplitudes scattering_amplitudes(BlochMomentum k, const ModelParams& params);

complex transmission_amplitude(BlochMomentum k, const ModelParams& params);
complex reflection_amplitude(BlochMomentum k, const ModelParams& params);
ScatteringCoefficients scattering_coefficients(BlochMomentum k, const ModelParams& params);

// Transmission on resonance, E_k = Omega, evaluated in its reduced form
//   t = 2i g0 g1 sin k / (2 g0 g1 e^{ik} + g0^2 + g1^2)
// at the k solving dispersion(k) = Omega. Throws DomainError when Omega is
// not strictly inside the band.
complex resonant_transmission(const ModelParams& params);
// Same reduced form at an explicit k, regardless of whether E_k = Omega.
complex resonant_transmission(BlochMomentum k, const ModelParams& params);

// Omega + g0 g1 / xi when that energy lies strictly inside the band,
// otherwise empty. Also empty for an uncoupled emitter, which transmits
// perfectly at every energy.
std::optional<BandEnergy> transmission_zero_energy(const ModelParams& params);

}  // namespace cra
