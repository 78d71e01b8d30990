#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cra/errors.hpp"
#include "cra/spectra.hpp"

using namespace cra;

namespace {

SweepSpec fig2_sweep(double g0, double g1, std::size_t n = 401) {
    SweepSpec spec;
    spec.range = {0.0, 4.0, n};
    spec.params = make_params(2.0, 1.0, 2.0, g0, g1);
    return spec;
}

double t_at(const SpectrumGrid& grid, double energy) {
    for (const auto& row : grid.rows) {
        if (std::abs(row.E - energy) < 1e-12) return row.T;
    }
    FAIL("energy not on grid");
    return -1.0;
}

std::string to_csv(const SpectrumGrid& grid) {
    std::ostringstream out;
    write_csv(out, grid);
    return out.str();
}

}  // namespace

TEST_CASE("range parsing") {
    const auto r = parse_range("0:4:200");
    CHECK(r.start == 0.0);
    CHECK(r.stop == 4.0);
    CHECK(r.n == 200);
    CHECK(parse_range("-1.5:2e-1:3").start == -1.5);
    CHECK_THROWS_AS(parse_range("0:4"), ConfigError);
    CHECK_THROWS_AS(parse_range("0:4:1"), ConfigError);
    CHECK_THROWS_AS(parse_range("4:0:10"), ConfigError);
    CHECK_THROWS_AS(parse_range("a:4:10"), ConfigError);
    CHECK_THROWS_AS(parse_range("0:4:10:3"), ConfigError);
    CHECK_THROWS_AS(parse_range("0:4:-3"), ConfigError);
}

TEST_CASE("sweep points are clipped to the open band") {
    const LatticeParams lat{2.0, 1.0};
    const auto pts = sweep_points({0.0, 4.0, 5}, SweepAxis::energy, lat);
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == kEdgeMargin);
    CHECK(pts.back() == 4.0 - kEdgeMargin);
    CHECK(pts[1] == 1.0);
    CHECK(pts[2] == 2.0);

    // Points past the top of the band collapse onto the clipped edge.
    const auto past = sweep_points({3.0, 6.0, 7}, SweepAxis::energy, lat);
    CHECK(past == std::vector<double>{3.0, 3.5, 4.0 - kEdgeMargin});

    const auto ks = sweep_points({0.0, 10.0, 3}, SweepAxis::momentum, lat);
    CHECK(ks.front() == kEdgeMargin);
    CHECK(ks.back() == kPi - kEdgeMargin);

    CHECK_THROWS_AS(sweep_points({4.5, 6.0, 10}, SweepAxis::energy, lat), ConfigError);
    CHECK_THROWS_AS(sweep_points({0.0, 4.0, 1}, SweepAxis::energy, lat), ConfigError);
}

TEST_CASE("Fig. 2 red curve: T(2) = 1/2 and T -> 1 at the top of the band") {
    const auto grid = run_sweep(fig2_sweep(0.5, 0.5));
    REQUIRE(grid.rows.size() == 401);
    CHECK(t_at(grid, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(grid.rows.back().T > 1.0 - 1e-3);
    for (const auto& row : grid.rows) {
        CHECK(std::abs(row.R + row.T - 1.0) < 1e-10);
    }
}

TEST_CASE("Fig. 2 green and dotted curves vanish at their zeros") {
    CHECK(t_at(run_sweep(fig2_sweep(1.0, 1.5, 801)), 3.5) < 1e-12);
    CHECK(t_at(run_sweep(fig2_sweep(0.5, 0.0)), 2.0) < 1e-12);

    // One interior dip on the green curve; elsewhere T only falls off
    // toward the band edges.
    const auto green = run_sweep(fig2_sweep(1.0, 1.5, 801));
    std::vector<double> dips;
    for (std::size_t i = 1; i + 1 < green.rows.size(); ++i) {
        const auto& r = green.rows;
        if (r[i].T < r[i - 1].T && r[i].T < r[i + 1].T) dips.push_back(r[i].E);
    }
    CHECK(dips == std::vector<double>{3.5});
}

TEST_CASE("momentum sweep") {
    auto spec = fig2_sweep(0.5, 0.5);
    spec.axis = SweepAxis::momentum;
    spec.range = {0.0, kPi, 101};
    const auto grid = run_sweep(spec);
    CHECK(grid.rows.front().k == kEdgeMargin);
    CHECK(grid.rows[50].k == doctest::Approx(kPi / 2));
    CHECK(grid.rows[50].T == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("decompose sweep adds arm columns and needs equal couplings") {
    auto spec = fig2_sweep(0.5, 0.5, 11);
    spec.with_paths = true;
    const auto grid = run_sweep(spec);
    REQUIRE(grid.has_paths);
    for (const auto& row : grid.rows) {
        REQUIRE(row.t_B.has_value());
        CHECK(std::abs(*row.t_B + *row.t_D - row.t) < 1e-10);
    }
    const auto cols = column_names(grid);
    CHECK(cols.size() == 12);
    CHECK(cols[8] == "re_tB");
    CHECK(cols[11] == "im_tD");

    auto bad = fig2_sweep(1.0, 1.5);
    bad.with_paths = true;
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);
}

TEST_CASE("grid rows follow the zero locus E = Omega + g^2 / xi") {
    GridSpec spec;
    spec.energy = {0.0, 4.0, 17};  // includes E = 2.25
    spec.coupling = {0.0, 2.0, 5};  // g = 0, 0.5, 1, 1.5, 2
    const auto grid = run_grid(spec);
    REQUIRE(grid.rows.size() == 17 * 5);
    for (std::size_t m = 0; m < 17; ++m) {
        CHECK(grid.rows[m].g == 0.0);
        CHECK(grid.rows[m].T == 1.0);
    }
    bool found = false;
    for (const auto& row : grid.rows) {
        if (row.g == 0.5 && std::abs(row.E - 2.25) < 1e-12) {
            CHECK(row.T < 1e-10);
            found = true;
        }
    }
    CHECK(found);
    CHECK(column_names(grid) == std::vector<std::string>{"g", "E", "T"});

    spec.coupling = {-1.0, 2.0, 5};
    CHECK_THROWS_AS(run_grid(spec), ConfigError);
}

TEST_CASE("grid rows equal the matching sweep") {
    GridSpec gspec;
    gspec.energy = {0.0, 4.0, 50};
    gspec.coupling = {0.0, 1.5, 4};
    const auto grid = run_grid(gspec);
    for (std::size_t i = 0; i < 4; ++i) {
        const double g = grid.rows[i * 50].g;
        SweepSpec s;
        s.range = gspec.energy;
        s.params = make_params(2.0, 1.0, 2.0, g, g);
        const auto sweep = run_sweep(s);
        for (std::size_t m = 0; m < 50; ++m) {
            CHECK(std::abs(grid.rows[i * 50 + m].T - sweep.rows[m].T) <= 1e-12);
            CHECK(grid.rows[i * 50 + m].E == sweep.rows[m].E);
        }
    }
}

TEST_CASE("csv emission: header block, columns, exact round trip") {
    const auto grid = run_sweep(fig2_sweep(1.0, 1.5, 21));
    const std::string text = to_csv(grid);
    CHECK(text.rfind("# cra-spectra 0.1.0\n", 0) == 0);
    CHECK(text.find("omega_c=2 xi=1 omega=2 g0=1 g1=1.5") != std::string::npos);
    CHECK(text.find("\nE,k,T,R,re_t,im_t,re_r,im_r\n") != std::string::npos);

    std::istringstream in(text);
    const auto table = read_csv(in);
    REQUIRE(table.rows.size() == 21);
    CHECK(table.columns.size() == 8);
    for (std::size_t i = 0; i < 21; ++i) {
        CHECK(table.rows[i][2] == grid.rows[i].T);
        CHECK(table.rows[i][4] == grid.rows[i].t.real());
    }
    CHECK(max_unitarity_violation(table) < 1e-10);
    CHECK(to_csv(run_sweep(fig2_sweep(1.0, 1.5, 21))) == text);
}

TEST_CASE("json emission carries the same table") {
    GridSpec spec;
    spec.energy = {0.0, 4.0, 7};
    spec.coupling = {0.0, 1.0, 3};
    const auto grid = run_grid(spec);
    std::ostringstream out;
    write_json(out, grid);
    std::istringstream in(out.str());
    const auto table = read_json(in);
    CHECK(table.columns == std::vector<std::string>{"g", "E", "T"});
    REQUIRE(table.rows.size() == 21);
    CHECK(table.rows[20][2] == grid.rows[20].T);
    CHECK(max_unitarity_violation(table) < 1e-12);
}

TEST_CASE("re-parse check catches a corrupted row") {
    std::istringstream in("# x\nE,k,T,R\n1,1,0.25,0.75\n2,1,0.5,0.6\n");
    const auto table = read_csv(in);
    CHECK(max_unitarity_violation(table) == doctest::Approx(0.1));
    std::istringstream ragged("E,k,T,R\n1,2,3\n");
    CHECK_THROWS_AS(read_csv(ragged), ConfigError);
}

TEST_CASE("verify: default run passes") {
    const auto report = verify(make_params(2.0, 1.0, 2.0, 0.5, 0.5), 42, 1000);
    CHECK(report.passed());
    for (const auto& c : report.checks) {
        CHECK(c.worst < 1e-10);
    }
    const auto text = report.to_string();
    CHECK(text.rfind("PASS cases=1000 seed=42", 0) == 0);
    CHECK(text.find('\n') == std::string::npos);
}

TEST_CASE("verify: sub-precision tolerance trips and names the case") {
    const auto report = verify(make_params(2.0, 1.0, 2.0, 0.5, 0.5), 42, 200, 1e-16);
    CHECK_FALSE(report.passed());
    const auto text = report.to_string();
    CHECK(text.rfind("FAIL", 0) == 0);
    CHECK(text.find("case=") != std::string::npos);
    CHECK(text.find("g0=") != std::string::npos);
}

TEST_CASE("verify: single case and determinism") {
    const auto p = make_params(2.0, 1.0, 2.0, 1.0, 1.5);
    const auto one = verify(p, 7, 1);
    CHECK(one.passed());
    CHECK(one.to_string().find('\n') == std::string::npos);
    CHECK(verify(p, 9, 50).to_string() == verify(p, 9, 50).to_string());
    CHECK_THROWS_AS(verify(p, 9, 0), ConfigError);
}
