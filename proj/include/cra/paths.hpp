#pragma once

// Bonding / anti-bonding description of the two coupled sites.
//
//   B =  a0 cos(theta) + a1 sin(theta)
//   D = -a0 sin(theta) + a1 cos(theta),   tan(theta) = g1 / g0
//
// Only B couples to the emitter. For g0 == g1 the two modes act as the arms
// of a Mach-Zehnder network between the leads j <= -1 and j >= 2, and the
// transmission splits as t = t_B + t_D.

#include <complex>
#include <utility>

#include "cra/model.hpp"
#include "cra/scattering.hpp"

namespace cra {

struct PathBasis {
    double theta = 0.0;    // in [0, pi/2]
    double omega_B = 0.0;  // omega_c - xi sin(2 theta)
    double omega_D = 0.0;  // omega_c + xi sin(2 theta)
    double g_B = 0.0;      // sqrt(g0^2 + g1^2); sqrt(2) g for equal couplings
};

struct PathAmplitudes {
    complex t_B;
    complex t_D;

    complex total() const noexcept { return t_B + t_D; }
};

// atan2(g1, g0). Throws DomainError if both couplings vanish.
double mixing_angle(double g0, double g1);

PathBasis path_basis(const ModelParams& params);

// Site amplitudes (u0, u1) -> (uB, uD) and back.
std::pair<complex, complex> to_path_basis(complex u0, complex u1, double theta) noexcept;
std::pair<complex, complex> from_path_basis(complex uB, complex uD, double theta) noexcept;

// Arm D transmission with arm B closed: i sin(k/2) e^{-ik/2} = (1 - e^{-ik}) / 2.
complex t_path_D(BlochMomentum k);

// Arm B transmission with arm D closed (requires g0 == g1 = g):
//   e^{-ik/2} xi (E - Omega) cos(k/2) / [xi (E - Omega) - g^2 + i g^2 cot(k/2)]
complex t_path_B(BlochMomentum k, const ModelParams& params);

// Both arms. Throws DomainError unless g0 == g1.
PathAmplitudes decompose(BlochMomentum k, const ModelParams& params);

}  // namespace cra
