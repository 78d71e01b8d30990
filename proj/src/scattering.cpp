#include "cra/scattering.hpp"

#include <cmath>
#include <sstream>

#include "cra/errors.hpp"

namespace cra {
namespace {

using namespace std::complex_literals;

void require_propagating(BlochMomentum k) {
    if (!k.is_propagating()) {
        std::ostringstream msg;
        msg << "scattering amplitudes undefined at band edge k = " << k.value()
            << " (sin k = 0); evaluate at an offset momentum";
        throw DomainError(msg.str());
    }
}

bool uncoupled(const EmitterParams& e) noexcept { return e.g0 == 0.0 && e.g1 == 0.0; }

// Shared denominator 2i sin k (E - Omega) xi - 2 g0 g1 e^{ik} - (g0^2 + g1^2).
complex denominator(double k, double detuning, const ModelParams& p) {
    const auto& e = p.emitter;
    return 2i * std::sin(k) * detuning * p.lattice.xi - 2.0 * e.g0 * e.g1 * std::polar(1.0, k) -
           (e.g0 * e.g0 + e.g1 * e.g1);
}

}  // namespace

GreensFactor greens_factor(BandEnergy energy, const EmitterParams& emitter) {
    return {1.0 / complex(energy.value - emitter.omega)};
}

ScatteringAmplitudes scattering_amplitudes(BlochMomentum k, const ModelParams& params) {
    validate(params);
    require_propagating(k);
    if (uncoupled(params.emitter)) {
        return {0.0, 1.0};
    }
    const auto& e = params.emitter;
    const double kv = k.value();
    const double s = std::sin(kv);
    const complex phase = std::polar(1.0, kv);
    const double detuning = dispersion(k, params.lattice).value - e.omega;
    const complex den = denominator(kv, detuning, params);

    const complex t = 2i * s * (detuning * params.lattice.xi - e.g0 * e.g1) / den;
    const complex r =
        (2i * s * e.g1 * e.g1 * phase + 2.0 * e.g0 * e.g1 * phase + (e.g0 * e.g0 + e.g1 * e.g1)) /
        den;
    return {r, t};
}

complex transmission_amplitude(BlochMomentum k, const ModelParams& params) {
    return scattering_amplitudes(k, params).t;
}

complex reflection_amplitude(BlochMomentum k, const ModelParams& params) {
    return scattering_amplitudes(k, params).r;
}

ScatteringCoefficients scattering_coefficients(BlochMomentum k, const ModelParams& params) {
    const auto amp = scattering_amplitudes(k, params);
    return {amp.reflection(), amp.transmission()};
}

complex resonant_transmission(BlochMomentum k, const ModelParams& params) {
    validate(params);
    require_propagating(k);
    const auto& e = params.emitter;
    if (uncoupled(e)) {
        return 1.0;
    }
    const double g01 = e.g0 * e.g1;
    return 2i * g01 * std::sin(k.value()) /
           (2.0 * g01 * std::polar(1.0, k.value()) + (e.g0 * e.g0 + e.g1 * e.g1));
}

complex resonant_transmission(const ModelParams& params) {
    validate(params);
    if (!in_open_band(params.emitter.omega, params.lattice)) {
        std::ostringstream msg;
        msg << "TLS spacing Omega = " << params.emitter.omega << " outside open band ("
            << band_bottom(params.lattice) << ", " << band_top(params.lattice) << ")";
        throw DomainError(msg.str());
    }
    return resonant_transmission(momentum_from_energy({params.emitter.omega}, params.lattice),
                                 params);
}

std::optional<BandEnergy> transmission_zero_energy(const ModelParams& params) {
    validate(params);
    const auto& e = params.emitter;
    if (uncoupled(e)) {
        return std::nullopt;
    }
    const double zero = e.omega + e.g0 * e.g1 / params.lattice.xi;
    if (!in_open_band(zero, params.lattice)) {
        return std::nullopt;
    }
    return BandEnergy{zero};
}

}  // namespace cra
