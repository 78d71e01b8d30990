// cra-spectra: transmission spectra, path decomposition, wavepacket runs and
// the verification suite for a coupled-resonator array with a two-site TLS.
//
// Exit codes: 0 success, 1 invariant or numerical failure, 2 configuration
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cra/errors.hpp"
#include "cra/spectra.hpp"
#include "cra/wavepacket.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;

struct Options {
    double omega_c = 2.0;
    double xi = 1.0;
    double omega = 2.0;
    double g0 = 0.5;
    double g1 = 0.5;
    std::optional<double> g;
    std::string e_range;
    std::string g_range = "0:2:200";
    std::string k_range;
    std::string axis = "energy";
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 42;
    std::size_t cases = 1000;
    double tol = cra::kIdentityTolerance;

    cra::WavepacketConfig packet;
    std::optional<double> dt;
    std::string trace;
};

cra::ModelParams model(const Options& o) {
    const double g0 = o.g ? *o.g : o.g0;
    const double g1 = o.g ? *o.g : o.g1;
    return cra::make_params(o.omega_c, o.xi, o.omega, g0, g1);
}

cra::Range energy_range(const Options& o, std::size_t default_points) {
    if (!o.e_range.empty()) return cra::parse_range(o.e_range);
    const cra::LatticeParams lat{o.omega_c, o.xi};
    return {cra::band_bottom(lat), cra::band_top(lat), default_points};
}

// Serializes, re-parses the emitted text and checks R + T = 1 on every row
// before anything is written.
int emit(const Options& o, const cra::SpectrumGrid& grid) {
    std::ostringstream text;
    if (o.format == "json") {
        cra::write_json(text, grid);
    } else {
        cra::write_csv(text, grid);
    }
    std::istringstream back(text.str());
    const auto table = o.format == "json" ? cra::read_json(back) : cra::read_csv(back);
    const double worst = cra::max_unitarity_violation(table);
    if (!(worst < o.tol)) {
        std::cerr << "error: emitted rows violate R + T = 1 (worst " << worst << ")\n";
        return kExitInvariant;
    }
    if (o.out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) throw cra::ConfigError("cannot open output file " + o.out);
        file << text.str();
    }
    return kExitOk;
}

int run_sweep(const Options& o, bool with_paths) {
    cra::SweepSpec spec;
    spec.params = model(o);
    spec.with_paths = with_paths;
    if (o.axis == "momentum") {
        spec.axis = cra::SweepAxis::momentum;
        spec.range = o.k_range.empty() ? cra::Range{0.0, cra::kPi, 401} : cra::parse_range(o.k_range);
    } else {
        spec.range = energy_range(o, 401);
    }
    return emit(o, cra::run_sweep(spec));
}

int run_grid(const Options& o) {
    cra::GridSpec spec;
    spec.lattice = {o.omega_c, o.xi};
    spec.omega = o.omega;
    spec.energy = energy_range(o, 200);
    spec.coupling = cra::parse_range(o.g_range);
    return emit(o, cra::run_grid(spec));
}

int run_wavepacket(const Options& o) {
    const auto params = model(o);
    cra::WavepacketConfig cfg = o.packet;
    cfg.dt = o.dt ? *o.dt : 0.02 / o.xi;
    if (!o.trace.empty() && cfg.trace_stride == 0) cfg.trace_stride = 1;
    const auto result = cra::evolve_wavepacket(cfg, params);
    const double predicted = cra::predicted_transmission(cfg, params);

    if (!o.trace.empty()) {
        std::ofstream file(o.trace, std::ios::binary);
        if (!file) throw cra::ConfigError("cannot open trace file " + o.trace);
        file << "time,left,right,tls\n";
        char buf[128];
        for (const auto& p : result.trace) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", p.time, p.left, p.right,
                          p.tls);
            file << buf;
        }
    }

    std::ostringstream text;
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["T_num"] = result.T_num;
        doc["R_num"] = result.R_num;
        doc["residual"] = result.residual;
        doc["P_e_max"] = result.P_e_max;
        doc["norm_drift"] = result.norm_drift;
        doc["T_predicted"] = predicted;
        doc["t_end"] = result.t_end;
        doc["steps"] = result.steps;
        text << doc.dump(1) << '\n';
    } else {
        char buf[512];
        std::snprintf(buf, sizeof buf,
                      "T_num=%.10f\nR_num=%.10f\nresidual=%.3e\nP_e_max=%.10f\nnorm_drift=%.3e\n"
                      "T_predicted=%.10f\nt_end=%.6f\nsteps=%zu\n",
                      result.T_num, result.R_num, result.residual, result.P_e_max,
                      result.norm_drift, predicted, result.t_end, result.steps);
        text << buf;
    }
    if (o.out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) throw cra::ConfigError("cannot open output file " + o.out);
        file << text.str();
    }
    return kExitOk;
}

int run_verify(const Options& o) {
    const auto report = cra::verify(model(o), o.seed, o.cases, o.tol);
    std::cout << report.to_string() << '\n';
    return report.passed() ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-excitation transport through a coupled-resonator array with a two-site "
                 "two-level system"};
    app.set_config("--config", "", "Flat key = value file mirroring the flags");
    app.require_subcommand(1);

    Options o;
    app.add_option("--omega-c", o.omega_c, "Cavity frequency")->capture_default_str();
    app.add_option("--xi", o.xi, "Inter-cavity hopping")->capture_default_str();
    app.add_option("--omega", o.omega, "TLS level spacing")->capture_default_str();
    app.add_option("--g0", o.g0, "Coupling to site 0")->capture_default_str();
    app.add_option("--g1", o.g1, "Coupling to site 1")->capture_default_str();
    app.add_option("--g", o.g, "Set g0 = g1 = g");
    app.add_option("--e-range", o.e_range, "Energy axis A:B:N (default: the band)");
    app.add_option("--g-range", o.g_range, "Coupling axis A:B:N for grid")->capture_default_str();
    app.add_option("--k-range", o.k_range, "Momentum axis A:B:N for --axis momentum");
    app.add_option("--axis", o.axis, "Sweep axis")
        ->check(CLI::IsMember({"energy", "momentum"}))
        ->capture_default_str();
    app.add_option("--out", o.out, "Output file (default: stdout)");
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for verify")->capture_default_str();
    app.add_option("--cases", o.cases, "Number of verify cases")->capture_default_str();
    app.add_option("--tol", o.tol, "Identity tolerance")->capture_default_str();

    app.add_option("--k0", o.packet.k0, "Wavepacket carrier momentum")->capture_default_str();
    app.add_option("--sigma", o.packet.sigma, "Wavepacket width in sites")->capture_default_str();
    app.add_option("--n-sites", o.packet.n_sites, "Lattice length")->capture_default_str();
    app.add_option("--source", o.packet.source_center, "Initial packet centre")
        ->capture_default_str();
    app.add_option("--dt", o.dt, "Time step (default 0.02/xi)");
    app.add_option("--t-max", o.packet.t_max, "Run time (0: until the packet clears)")
        ->capture_default_str();
    app.add_option("--clearance", o.packet.clearance,
                   "Packet widths past the coupled sites before tallying")
        ->capture_default_str();
    app.add_option("--trace", o.trace, "Per-step probability trace CSV");
    app.add_option("--trace-stride", o.packet.trace_stride, "Steps between trace rows");

    auto* sweep = app.add_subcommand("sweep", "T, R and amplitudes along an energy or momentum axis");
    auto* grid = app.add_subcommand("grid", "T over energy and g0 = g1 = g (long format)");
    auto* decomp = app.add_subcommand("decompose", "sweep plus arm amplitudes t_B, t_D (g0 = g1)");
    auto* packet = app.add_subcommand("wavepacket", "Time-domain Gaussian packet scattering");
    auto* verify = app.add_subcommand("verify", "Seeded invariant suite");
    for (auto* sub : {sweep, grid, decomp, packet, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*sweep) return run_sweep(o, false);
        if (*decomp) return run_sweep(o, true);
        if (*grid) return run_grid(o);
        if (*packet) return run_wavepacket(o);
        if (*verify) return run_verify(o);
    } catch (const cra::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const cra::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const cra::IntegrationError& e) {
        std::cerr << "integration failure: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const cra::SingularSystemError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitConfig;
}
