#include "cra/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

#include "cra/errors.hpp"

namespace cra {
namespace {

using Matrix5 = Eigen::Matrix<complex, 5, 5>;
using Vector5 = Eigen::Matrix<complex, 5, 1>;

void require_propagating(BlochMomentum k) {
    if (!k.is_propagating()) {
        throw DomainError("stationary solve undefined at band edge k = 0 or pi");
    }
}

Vector5 solve_checked(const Matrix5& a, const Vector5& b, const char* what) {
    const Eigen::PartialPivLU<Matrix5> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > kSingularRcond)) {
        std::ostringstream msg;
        msg << what << ": singular boundary-matched system (rcond = " << rcond << ")";
        throw SingularSystemError(msg.str(), rcond);
    }
    return lu.solve(b);
}

}  // namespace

ScatteringSolution solve_scattering_exact(BlochMomentum k, const ModelParams& params) {
    validate(params);
    require_propagating(k);
    const auto& lat = params.lattice;
    const auto& em = params.emitter;
    const double energy = dispersion(k, lat).value;
    const double onsite = energy - lat.omega_c;
    const complex e1 = std::polar(1.0, k.value());
    const complex e2 = e1 * e1;

    // Unknown order: u0, u1, r, t, ue.
    enum { U0, U1, R, T, UE };
    Matrix5 a = Matrix5::Zero();
    Vector5 b = Vector5::Zero();

    // j = 0: (E - wc) u0 + xi (u_{-1} + u1) - g0 ue = 0, u_{-1} = e^{-ik} + r e^{ik}
    a(0, U0) = onsite;
    a(0, U1) = lat.xi;
    a(0, R) = lat.xi * e1;
    a(0, UE) = -em.g0;
    b(0) = -lat.xi / e1;

    // j = 1: (E - wc) u1 + xi (u0 + u2) - g1 ue = 0, u2 = t e^{2ik}
    a(1, U0) = lat.xi;
    a(1, U1) = onsite;
    a(1, T) = lat.xi * e2;
    a(1, UE) = -em.g1;

    // TLS: (E - Omega) ue - g0 u0 - g1 u1 = 0. Without coupling the TLS is
    // not part of the scattering state, so pin ue = 0.
    if (em.g0 == 0.0 && em.g1 == 0.0) {
        a(2, UE) = 1.0;
    } else {
        a(2, U0) = -em.g0;
        a(2, U1) = -em.g1;
        a(2, UE) = energy - em.omega;
    }

    // Lead continuity.
    a(3, U0) = 1.0;
    a(3, R) = -1.0;
    b(3) = 1.0;
    a(4, U1) = 1.0;
    a(4, T) = -e1;

    const Vector5 x = solve_checked(a, b, "solve_scattering_exact");
    return {x(R), x(T), x(U0), x(U1), x(UE)};
}

PathSpaceSolution solve_path_space(BlochMomentum k, const ModelParams& params) {
    validate(params);
    require_propagating(k);
    const auto& lat = params.lattice;
    const auto& em = params.emitter;
    if (em.g0 != em.g1) {
        throw DomainError("path-space solve needs g0 == g1");
    }
    const double g = em.g0;
    const double energy = dispersion(k, lat).value;
    const double onsite = energy - lat.omega_c;
    const double omega_B = lat.omega_c - lat.xi;
    const double omega_D = lat.omega_c + lat.xi;
    const double h = lat.xi / std::sqrt(2.0);
    const double gB = std::sqrt(2.0) * g;
    const complex e1 = std::polar(1.0, k.value());
    const complex e2 = e1 * e1;
    const complex e3 = e2 * e1;

    // Leads: u_{-1} = e^{-ik} + r e^{ik}, u_{-2} = e^{-2ik} + r e^{2ik},
    //        u_2 = t e^{2ik},             u_3 = t e^{3ik}.
    // With a0 = (B - D)/sqrt2 and a1 = (B + D)/sqrt2 the hoppings onto the
    // nodes are -xi/sqrt2 except for a sign on the D -> -1 link.
    enum { R, T, UB, UD, UE };
    Matrix5 a = Matrix5::Zero();
    Vector5 b = Vector5::Zero();

    // j = -1: (E - wc) u_{-1} + xi u_{-2} + h (uB - uD) = 0
    a(0, R) = onsite * e1 + lat.xi * e2;
    a(0, UB) = h;
    a(0, UD) = -h;
    b(0) = -(onsite / e1 + lat.xi / e2);

    // j = 2: (E - wc) u_2 + xi u_3 + h (uB + uD) = 0
    a(1, T) = onsite * e2 + lat.xi * e3;
    a(1, UB) = h;
    a(1, UD) = h;

    // B: (E - wB) uB - sqrt2 g ue + h (u_{-1} + u_2) = 0
    a(2, UB) = energy - omega_B;
    a(2, UE) = -gB;
    a(2, R) = h * e1;
    a(2, T) = h * e2;
    b(2) = -h / e1;

    // D: (E - wD) uD - h (u_{-1} - u_2) = 0
    a(3, UD) = energy - omega_D;
    a(3, R) = -h * e1;
    a(3, T) = h * e2;
    b(3) = h / e1;

    // TLS: (E - Omega) ue - sqrt2 g uB = 0
    if (g == 0.0) {
        a(4, UE) = 1.0;
    } else {
        a(4, UB) = -gB;
        a(4, UE) = energy - em.omega;
    }

    const Vector5 x = solve_checked(a, b, "solve_path_space");
    return {x(R), x(T), x(UB), x(UD), x(UE)};
}

double tls_residual(const ScatteringSolution& sol, BlochMomentum k, const ModelParams& params) {
    const double energy = dispersion(k, params.lattice).value;
    return std::abs((energy - params.emitter.omega) * sol.ue - params.emitter.g0 * sol.u0 -
                    params.emitter.g1 * sol.u1);
}

}  // namespace cra
