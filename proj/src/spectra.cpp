#include "cra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cra/errors.hpp"
#include "cra/oracle.hpp"
#include "cra/paths.hpp"

namespace cra {
namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string params_line(const ModelParams& p) {
    return "omega_c=" + fmt(p.lattice.omega_c) + " xi=" + fmt(p.lattice.xi) +
           " omega=" + fmt(p.emitter.omega) + " g0=" + fmt(p.emitter.g0) +
           " g1=" + fmt(p.emitter.g1);
}

std::string range_text(const Range& r) {
    return fmt(r.start) + ":" + fmt(r.stop) + ":" + std::to_string(r.n);
}

SpectrumRow evaluate(double k, const ModelParams& p, bool with_paths) {
    const BlochMomentum km(k);
    const auto amp = scattering_amplitudes(km, p);
    SpectrumRow row;
    row.E = dispersion(km, p.lattice).value;
    row.k = k;
    row.T = amp.transmission();
    row.R = amp.reflection();
    row.t = amp.t;
    row.r = amp.r;
    if (with_paths) {
        const auto paths = decompose(km, p);
        row.t_B = paths.t_B;
        row.t_D = paths.t_D;
    }
    return row;
}

std::vector<double> row_values(const SpectrumGrid& grid, const SpectrumRow& row) {
    if (grid.kind == GridKind::grid) {
        return {row.g, row.E, row.T};
    }
    std::vector<double> v{row.E, row.k, row.T, row.R, row.t.real(), row.t.imag(), row.r.real(),
                          row.r.imag()};
    if (grid.has_paths) {
        v.insert(v.end(), {row.t_B->real(), row.t_B->imag(), row.t_D->real(), row.t_D->imag()});
    }
    return v;
}

std::size_t column_index(const Table& table, const std::string& name) {
    const auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it == table.columns.end()) {
        throw ConfigError("table has no column '" + name + "'");
    }
    return static_cast<std::size_t>(it - table.columns.begin());
}

}  // namespace

Range parse_range(const std::string& text) {
    Range r;
    std::istringstream in(text);
    std::string a;
    std::string b;
    std::string n;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, n) ||
        n.find(':') != std::string::npos) {
        throw ConfigError("range '" + text + "' is not of the form A:B:N");
    }
    try {
        std::size_t used = 0;
        r.start = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
        r.stop = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        const long long count = std::stoll(n, &used);
        if (used != n.size() || count < 0) throw std::invalid_argument(n);
        r.n = static_cast<std::size_t>(count);
    } catch (const std::logic_error&) {
        throw ConfigError("range '" + text + "' is not of the form A:B:N");
    }
    if (!(r.start < r.stop) || r.n < 2) {
        throw ConfigError("range '" + text + "' needs A < B and N >= 2");
    }
    return r;
}

std::vector<double> sweep_points(const Range& range, SweepAxis axis, const LatticeParams& lattice) {
    validate(lattice);
    if (range.n < 2 || !(range.start < range.stop)) {
        throw ConfigError("sweep range needs start < stop and at least 2 points");
    }
    double lo = range.start;
    double hi = range.stop;
    if (axis == SweepAxis::energy) {
        lo = std::max(lo, band_bottom(lattice) + kEdgeMargin);
        hi = std::min(hi, band_top(lattice) - kEdgeMargin);
    } else {
        lo = std::max(lo, kEdgeMargin);
        hi = std::min(hi, kPi - kEdgeMargin);
    }
    if (!(lo < hi)) {
        std::ostringstream msg;
        msg << "sweep range [" << range.start << ", " << range.stop
            << "] is empty after clipping to the open band";
        throw ConfigError(msg.str());
    }
    std::vector<double> pts;
    pts.reserve(range.n);
    const double step = (range.stop - range.start) / static_cast<double>(range.n - 1);
    for (std::size_t i = 0; i < range.n; ++i) {
        const double x = i + 1 == range.n ? range.stop
                                          : range.start + step * static_cast<double>(i);
        const double clamped = std::clamp(x, lo, hi);
        if (pts.empty() || clamped != pts.back()) pts.push_back(clamped);
    }
    return pts;
}

SpectrumGrid run_sweep(const SweepSpec& spec) {
    validate(spec.params);
    if (spec.with_paths && spec.params.emitter.g0 != spec.params.emitter.g1) {
        throw ConfigError("decompose requires g0 == g1");
    }
    SpectrumGrid grid;
    grid.kind = GridKind::sweep;
    grid.has_paths = spec.with_paths;
    grid.header = {
        std::string(kToolName) + " " + kToolVersion,
        std::string("mode=") + (spec.with_paths ? "decompose" : "sweep") +
            " axis=" + (spec.axis == SweepAxis::energy ? "energy" : "momentum") +
            " range=" + range_text(spec.range),
        params_line(spec.params),
    };
    const auto pts = sweep_points(spec.range, spec.axis, spec.params.lattice);
    grid.rows.reserve(pts.size());
    for (double x : pts) {
        const double k = spec.axis == SweepAxis::energy
                             ? momentum_from_energy({x}, spec.params.lattice).value()
                             : x;
        SpectrumRow row = evaluate(k, spec.params, spec.with_paths);
        if (spec.axis == SweepAxis::energy) {
            row.E = x;
        }
        grid.rows.push_back(row);
    }
    return grid;
}

SpectrumGrid run_grid(const GridSpec& spec) {
    validate(spec.lattice);
    if (spec.coupling.start < 0.0) {
        throw ConfigError("coupling axis must satisfy g >= 0");
    }
    if (spec.coupling.n < 2 || !(spec.coupling.start < spec.coupling.stop)) {
        throw ConfigError("coupling range needs start < stop and at least 2 points");
    }
    const auto energies = sweep_points(spec.energy, SweepAxis::energy, spec.lattice);
    std::vector<double> momenta;
    momenta.reserve(energies.size());
    for (double e : energies) {
        momenta.push_back(momentum_from_energy({e}, spec.lattice).value());
    }

    SpectrumGrid grid;
    grid.kind = GridKind::grid;
    grid.header = {
        std::string(kToolName) + " " + kToolVersion,
        "mode=grid e_range=" + range_text(spec.energy) + " g_range=" + range_text(spec.coupling),
        "omega_c=" + fmt(spec.lattice.omega_c) + " xi=" + fmt(spec.lattice.xi) +
            " omega=" + fmt(spec.omega) + " g0=g1=g",
    };
    grid.rows.reserve(energies.size() * spec.coupling.n);
    const double gstep =
        (spec.coupling.stop - spec.coupling.start) / static_cast<double>(spec.coupling.n - 1);
    for (std::size_t i = 0; i < spec.coupling.n; ++i) {
        const double g = i + 1 == spec.coupling.n
                             ? spec.coupling.stop
                             : spec.coupling.start + gstep * static_cast<double>(i);
        const ModelParams p{spec.lattice, {spec.omega, g, g}};
        for (std::size_t m = 0; m < energies.size(); ++m) {
            SpectrumRow row = evaluate(momenta[m], p, false);
            row.g = g;
            row.E = energies[m];
            grid.rows.push_back(row);
        }
    }
    return grid;
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.failures == 0; });
}

std::string VerifyReport::to_string() const {
    std::ostringstream out;
    out << (passed() ? "PASS" : "FAIL") << " cases=" << cases << " seed=" << seed
        << " tol=" << fmt_short(tolerance);
    for (const auto& c : checks) {
        out << " " << c.name << "=" << fmt_short(c.worst);
    }
    for (const auto& c : checks) {
        if (c.failures > 0) {
            out << "\n  " << c.name << ": " << c.failures << " failing case(s); first: "
                << c.first_failure;
        }
    }
    return out.str();
}

VerifyReport verify(const ModelParams& params, std::uint64_t seed, std::size_t n_cases,
                    double tolerance) {
    validate(params);
    if (n_cases < 1) {
        throw ConfigError("verify needs at least one case");
    }
    VerifyReport report;
    report.seed = seed;
    report.cases = n_cases;
    report.tolerance = tolerance;
    for (const char* name : {"unitarity", "oracle_t", "oracle_r", "decomposition", "path_space"}) {
        report.checks.push_back(CheckResult{name, 0.0, 0, {}});
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> momentum(0.01, kPi - 0.01);
    std::uniform_real_distribution<double> coupling(0.0, 3.0);
    std::uniform_real_distribution<double> spacing(band_bottom(params.lattice) - 1.0,
                                                   band_top(params.lattice) + 1.0);

    auto record = [&](CheckResult& c, double residual, const std::string& where) {
        c.worst = std::max(c.worst, residual);
        if (!(residual < tolerance)) {
            if (c.failures == 0) c.first_failure = where;
            ++c.failures;
        }
    };

    for (std::size_t i = 0; i < n_cases; ++i) {
        ModelParams p = params;
        if (i > 0) {
            p.emitter.g0 = coupling(rng);
            p.emitter.g1 = coupling(rng);
            p.emitter.omega = spacing(rng);
        }
        const BlochMomentum k(momentum(rng));
        const std::string where = "case=" + std::to_string(i) + " k=" + fmt(k.value()) + " " +
                                  params_line(p);

        const auto amp = scattering_amplitudes(k, p);
        record(report.checks[0], std::abs(amp.reflection() + amp.transmission() - 1.0), where);

        const auto exact = solve_scattering_exact(k, p);
        record(report.checks[1], std::abs(exact.t - amp.t), where);
        record(report.checks[2], std::abs(exact.r - amp.r), where);

        ModelParams sym = p;
        sym.emitter.g1 = sym.emitter.g0;
        const std::string sym_where = "case=" + std::to_string(i) + " k=" + fmt(k.value()) + " " +
                                      params_line(sym);
        const complex t_sym = transmission_amplitude(k, sym);
        record(report.checks[3], std::abs(decompose(k, sym).total() - t_sym), sym_where);

        const auto ring = solve_path_space(k, sym);
        const auto exact_sym = solve_scattering_exact(k, sym);
        record(report.checks[4],
               std::max(std::abs(ring.t - exact_sym.t), std::abs(ring.r - exact_sym.r)),
               sym_where);
    }
    return report;
}

std::vector<std::string> column_names(const SpectrumGrid& grid) {
    if (grid.kind == GridKind::grid) {
        return {"g", "E", "T"};
    }
    std::vector<std::string> cols{"E", "k", "T", "R", "re_t", "im_t", "re_r", "im_r"};
    if (grid.has_paths) {
        cols.insert(cols.end(), {"re_tB", "im_tB", "re_tD", "im_tD"});
    }
    return cols;
}

void write_csv(std::ostream& out, const SpectrumGrid& grid) {
    for (const auto& line : grid.header) {
        out << "# " << line << '\n';
    }
    const auto cols = column_names(grid);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << '\n';
    for (const auto& row : grid.rows) {
        const auto v = row_values(grid, row);
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << (i ? "," : "") << fmt(v[i]);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const SpectrumGrid& grid) {
    nlohmann::ordered_json doc;
    doc["header"] = grid.header;
    doc["columns"] = column_names(grid);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : grid.rows) {
        rows.push_back(row_values(grid, row));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(1) << '\n';
}

Table read_csv(std::istream& in) {
    Table table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string cell;
        if (!have_header) {
            while (std::getline(fields, cell, ',')) table.columns.push_back(cell);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(fields, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != table.columns.size()) {
            throw ConfigError("csv row has " + std::to_string(row.size()) + " fields, expected " +
                              std::to_string(table.columns.size()));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table read_json(std::istream& in) {
    const auto doc = nlohmann::json::parse(in);
    Table table;
    table.columns = doc.at("columns").get<std::vector<std::string>>();
    table.rows = doc.at("rows").get<std::vector<std::vector<double>>>();
    return table;
}

double max_unitarity_violation(const Table& table) {
    const std::size_t t = column_index(table, "T");
    const bool has_r = std::find(table.columns.begin(), table.columns.end(), "R") != table.columns.end();
    double worst = 0.0;
    for (const auto& row : table.rows) {
        if (has_r) {
            worst = std::max(worst, std::abs(row[t] + row[column_index(table, "R")] - 1.0));
        } else {
            worst = std::max({worst, -row[t], row[t] - 1.0});
        }
    }
    return worst;
}

}  // namespace cra
