#include <doctest.h>

#include <cmath>
#include <random>

#include "cra/errors.hpp"
#include "cra/paths.hpp"
#include "oracles.hpp"

using namespace cra;

namespace {
ModelParams equal(double g, double omega = 2.0) { return make_params(2.0, 1.0, omega, g, g); }
}  // namespace

TEST_CASE("mixing angle") {
    CHECK(mixing_angle(1.0, 1.0) == doctest::Approx(kPi / 4));
    CHECK(mixing_angle(1.0, 0.0) == 0.0);
    CHECK(mixing_angle(0.0, 1.0) == doctest::Approx(kPi / 2));
    CHECK(mixing_angle(2.0, 2.0 * std::sqrt(3.0)) == doctest::Approx(kPi / 3));
    CHECK_THROWS_AS(mixing_angle(0.0, 0.0), DomainError);
}

TEST_CASE("path basis frequencies and bonding coupling") {
    const auto b = path_basis(equal(0.5));
    CHECK(b.theta == doctest::Approx(kPi / 4));
    CHECK(b.omega_B == doctest::Approx(1.0));
    CHECK(b.omega_D == doctest::Approx(3.0));
    CHECK(b.g_B == doctest::Approx(std::sqrt(2.0) * 0.5));

    const auto single = path_basis(make_params(2.0, 1.0, 2.0, 1.0, 0.0));
    CHECK(single.omega_B == 2.0);
    CHECK(single.omega_D == 2.0);
    CHECK(single.g_B == 1.0);

    for (double g : {0.1, 1.0, 2.5}) {
        CHECK(path_basis(equal(g)).g_B == doctest::Approx(std::sqrt(2.0) * g));
    }
    CHECK_THROWS_AS(path_basis(equal(0.0)), DomainError);
}

TEST_CASE("basis transform is orthogonal") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kPi / 2);
    for (int i = 0; i < 1000; ++i) {
        const complex u0(u(rng), u(rng));
        const complex u1(u(rng), u(rng));
        const double theta = angle(rng);
        const auto [b, d] = to_path_basis(u0, u1, theta);
        const auto [v0, v1] = from_path_basis(b, d, theta);
        CHECK(std::abs(v0 - u0) < 1e-14);
        CHECK(std::abs(v1 - u1) < 1e-14);
        CHECK(std::norm(b) + std::norm(d) ==
              doctest::Approx(std::norm(u0) + std::norm(u1)).epsilon(1e-14));
    }
    // Bonding mode is the one the emitter sees: g0 u0 + g1 u1 = g_B uB.
    const auto p = make_params(2.0, 1.0, 2.0, 0.7, 1.9);
    const auto basis = path_basis(p);
    const complex u0(0.3, -0.2), u1(-0.5, 0.8);
    const auto [b, d] = to_path_basis(u0, u1, basis.theta);
    CHECK(std::abs(0.7 * u0 + 1.9 * u1 - basis.g_B * b) < 1e-14);
}

TEST_CASE("arm D amplitude") {
    CHECK(std::norm(t_path_D(BlochMomentum(kPi / 2))) == doctest::Approx(0.5));
    CHECK(std::abs(t_path_D(BlochMomentum(1e-8))) < 1e-8);
    // sin^2(pi/3)
    const BlochMomentum k(2 * kPi / 3);
    CHECK(std::norm(t_path_D(k)) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(std::abs(t_path_D(k) - (1.0 - std::polar(1.0, -k.value())) / 2.0) < 1e-15);
}

TEST_CASE("arm B amplitude") {
    // Resonance blocks arm B: exactly when E_k == Omega in floating point.
    const BlochMomentum kr(1.37);
    auto resonant = equal(0.5);
    resonant.emitter.omega = dispersion(kr, resonant.lattice).value;
    CHECK(t_path_B(kr, resonant) == complex(0.0));
    CHECK(std::abs(t_path_B(BlochMomentum(kPi / 2), equal(0.5))) < 1e-15);

    // No coupling: both arms reconstruct free propagation.
    for (double k : {0.3, 1.2, 2.8}) {
        const BlochMomentum km(k);
        const complex tb = t_path_B(km, equal(0.0));
        CHECK(std::abs(tb - (1.0 + std::polar(1.0, -k)) / 2.0) < 1e-15);
        CHECK(std::abs(tb + t_path_D(km) - 1.0) < 1e-15);
    }

    const BlochMomentum k(1.2);
    const auto p = equal(0.5);
    CHECK(std::abs(t_path_B(k, p) - (transmission_amplitude(k, p) - t_path_D(k))) < 1e-12);

    CHECK_THROWS_AS(t_path_B(k, make_params(2.0, 1.0, 2.0, 1.0, 1.5)), DomainError);
    CHECK_THROWS_AS(t_path_B(BlochMomentum(kPi), p), DomainError);
}

TEST_CASE("decompose") {
    const auto res = decompose(BlochMomentum(kPi / 2), equal(0.5));
    CHECK(std::abs(res.t_B) < 1e-15);
    CHECK(std::abs(res.t_D - complex(0.5, 0.5)) < 1e-15);
    CHECK(std::norm(res.total()) == doctest::Approx(0.5));

    CHECK(std::abs(decompose(BlochMomentum(0.9), equal(0.0)).total() - 1.0) < 1e-15);
    CHECK(std::abs(decompose(BlochMomentum(0.9), equal(1e-9)).total() - 1.0) < 1e-8);

    CHECK(std::abs(decompose(BlochMomentum(kPi - 1e-6), equal(0.5)).total()) ==
          doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(decompose(BlochMomentum(1.0), make_params(2.0, 1.0, 2.0, 1.0, 1.5)),
                    DomainError);
}

TEST_CASE("property: t_B + t_D = t for equal couplings") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    double worst_arctan = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double xi = 0.5 + 1.5 * u(rng);
        const double wc = -1.0 + 3.0 * u(rng);
        const auto p = make_params(wc, xi, wc - 3.0 * xi + 6.0 * xi * u(rng), 3.0 * u(rng),
                                   0.0);
        auto q = p;
        q.emitter.g1 = q.emitter.g0;
        const BlochMomentum k(0.01 + (kPi - 0.02) * u(rng));
        const complex t = transmission_amplitude(k, q);
        worst = std::max(worst, std::abs(decompose(k, q).total() - t));
        worst_arctan =
            std::max(worst_arctan, std::abs(testing::t_path_B_arctan(k.value(), q) + t_path_D(k) - t));
    }
    CHECK(worst < 1e-10);
    // The literal arctan(k/2) reading does not reproduce t.
    CHECK(worst_arctan > 1e-3);
}

TEST_CASE("property: on resonance photons only take arm D") {
    for (double omega : {0.7, 2.0, 3.3}) {
        for (double g : {0.2, 1.0, 2.0}) {
            const auto p = make_params(2.0, 1.0, omega, g, g);
            const auto k = momentum_from_energy({omega}, p.lattice);
            CHECK(std::abs(t_path_B(k, p)) < 1e-14);
            CHECK(std::abs(transmission_amplitude(k, p)) ==
                  doctest::Approx(std::abs(t_path_D(k))).epsilon(1e-12));
        }
    }
}
