#include "cra/paths.hpp"

#include <cmath>
#include <sstream>

#include "cra/errors.hpp"

namespace cra {
namespace {

using namespace std::complex_literals;

void require_equal_couplings(const EmitterParams& e) {
    if (e.g0 != e.g1) {
        std::ostringstream msg;
        msg << "two-arm decomposition needs g0 == g1 (got g0 = " << e.g0 << ", g1 = " << e.g1
            << ")";
        throw DomainError(msg.str());
    }
}

void require_propagating(BlochMomentum k) {
    if (!k.is_propagating()) {
        throw DomainError("path amplitudes undefined at band edge k = 0 or pi");
    }
}

}  // namespace

double mixing_angle(double g0, double g1) {
    if (g0 == 0.0 && g1 == 0.0) {
        throw DomainError("mixing angle undefined for g0 = g1 = 0");
    }
    if (g0 < 0.0 || g1 < 0.0) {
        throw DomainError("mixing angle requires non-negative couplings");
    }
    return std::atan2(g1, g0);
}

PathBasis path_basis(const ModelParams& params) {
    validate(params);
    const auto& e = params.emitter;
    const double theta = mixing_angle(e.g0, e.g1);
    const double split = params.lattice.xi * std::sin(2.0 * theta);
    return {theta, params.lattice.omega_c - split, params.lattice.omega_c + split,
            std::hypot(e.g0, e.g1)};
}

std::pair<complex, complex> to_path_basis(complex u0, complex u1, double theta) noexcept {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * u0 + s * u1, -s * u0 + c * u1};
}

std::pair<complex, complex> from_path_basis(complex uB, complex uD, double theta) noexcept {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * uB - s * uD, s * uB + c * uD};
}

complex t_path_D(BlochMomentum k) {
    require_propagating(k);
    const double half = 0.5 * k.value();
    return 1i * std::sin(half) * std::polar(1.0, -half);
}

complex t_path_B(BlochMomentum k, const ModelParams& params) {
    validate(params);
    require_propagating(k);
    require_equal_couplings(params.emitter);
    const double half = 0.5 * k.value();
    const complex phase = std::polar(1.0, -half);
    const double g = params.emitter.g0;
    if (g == 0.0) {
        return phase * std::cos(half);
    }
    const double xi = params.lattice.xi;
    const double detuning = dispersion(k, params.lattice).value - params.emitter.omega;
    const double g2 = g * g;
    const double cot_half = std::cos(half) / std::sin(half);
    return phase * xi * detuning * std::cos(half) / complex(xi * detuning - g2, g2 * cot_half);
}

PathAmplitudes decompose(BlochMomentum k, const ModelParams& params) {
    return {t_path_B(k, params), t_path_D(k)};
}

}  // namespace cra
