#pragma once

// Boundary-matched stationary solves built directly from the
// single-excitation Schroedinger equation. These never touch the closed
// forms in scattering.hpp or paths.hpp and serve as their reference.

#include "cra/model.hpp"
#include "cra/scattering.hpp"

namespace cra {

struct ScatteringSolution {
    complex r;
    complex t;
    complex u0;  // site 0
    complex u1;  // site 1
    complex ue;  // TLS excited-state amplitude
};

// Amplitudes on the ring -1 -> {B, D} -> 2. uB and uD use the basis of
// path_basis() at theta = pi/4, so (u0, u1) = from_path_basis(uB, uD, pi/4).
struct PathSpaceSolution {
    complex r;
    complex t;
    complex uB;
    complex uD;
    complex ue;
};

// Reciprocal condition number below which a solve is reported as singular.
inline constexpr double kSingularRcond = 1e-13;

// Five unknowns (u0, u1, r, t, ue): site equations at j = 0, 1, the TLS
// equation, and lead continuity u0 = 1 + r, u1 = t e^{ik}. The leads carry
// e^{ikj} + r e^{-ikj} for j <= -1 and t e^{ikj} for j >= 2.
ScatteringSolution solve_scattering_exact(BlochMomentum k, const ModelParams& params);

// Five unknowns (r, t, uB, uD, ue) from the node equations at j = -1, 2,
// the two arms and the TLS. Requires g0 == g1.
PathSpaceSolution solve_path_space(BlochMomentum k, const ModelParams& params);

// Residual |(E - Omega) ue - g0 u0 - g1 u1| of a real-space solution.
double tls_residual(const ScatteringSolution& sol, BlochMomentum k, const ModelParams& params);

}  // namespace cra
