#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cra/errors.hpp"
#include "cra/oracle.hpp"
#include "cra/paths.hpp"
#include "cra/scattering.hpp"
#include "cra/spectra.hpp"
#include "cra/wavepacket.hpp"

namespace py = pybind11;
using namespace cra;

namespace {

BlochMomentum momentum(double k) { return BlochMomentum(k); }

py::dict grid_columns(const SpectrumGrid& grid) {
    py::dict out;
    const auto names = column_names(grid);
    std::vector<std::vector<double>> cols(names.size());
    for (const auto& row : grid.rows) {
        std::vector<double> v;
        if (grid.kind == GridKind::grid) {
            v = {row.g, row.E, row.T};
        } else {
            v = {row.E, row.k, row.T, row.R, row.t.real(), row.t.imag(), row.r.real(), row.r.imag()};
            if (grid.has_paths) {
                v.insert(v.end(), {row.t_B->real(), row.t_B->imag(), row.t_D->real(), row.t_D->imag()});
            }
        }
        for (std::size_t i = 0; i < v.size(); ++i) cols[i].push_back(v[i]);
    }
    for (std::size_t i = 0; i < names.size(); ++i) out[py::str(names[i])] = cols[i];
    return out;
}

Range range_from(py::tuple t) {
    if (t.size() != 3) throw ConfigError("range must be (start, stop, n)");
    return {t[0].cast<double>(), t[1].cast<double>(), t[2].cast<std::size_t>()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Single-photon transport through a coupled-resonator array with a two-site TLS";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<SingularSystemError>(m, "SingularSystemError", PyExc_ArithmeticError);
    py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double omega_c, double xi, double omega, double g0, double g1) {
                 return make_params(omega_c, xi, omega, g0, g1);
             }),
             py::arg("omega_c") = 2.0, py::arg("xi") = 1.0, py::arg("omega") = 2.0,
             py::arg("g0") = 0.0, py::arg("g1") = 0.0)
        .def_property_readonly("omega_c", [](const ModelParams& p) { return p.lattice.omega_c; })
        .def_property_readonly("xi", [](const ModelParams& p) { return p.lattice.xi; })
        .def_property_readonly("omega", [](const ModelParams& p) { return p.emitter.omega; })
        .def_property_readonly("g0", [](const ModelParams& p) { return p.emitter.g0; })
        .def_property_readonly("g1", [](const ModelParams& p) { return p.emitter.g1; })
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(omega_c=" + std::to_string(p.lattice.omega_c) +
                   ", xi=" + std::to_string(p.lattice.xi) + ", omega=" +
                   std::to_string(p.emitter.omega) + ", g0=" + std::to_string(p.emitter.g0) +
                   ", g1=" + std::to_string(p.emitter.g1) + ")";
        });

    m.def("dispersion",
          [](double k, const ModelParams& p) { return dispersion(momentum(k), p.lattice).value; },
          py::arg("k"), py::arg("params"));
    m.def("momentum_from_energy",
          [](double e, const ModelParams& p) { return momentum_from_energy({e}, p.lattice).value(); },
          py::arg("energy"), py::arg("params"));
    m.def("group_velocity",
          [](double k, const ModelParams& p) { return group_velocity(momentum(k), p.lattice); },
          py::arg("k"), py::arg("params"));

    m.def("transmission_amplitude",
          [](double k, const ModelParams& p) { return transmission_amplitude(momentum(k), p); },
          py::arg("k"), py::arg("params"));
    m.def("reflection_amplitude",
          [](double k, const ModelParams& p) { return reflection_amplitude(momentum(k), p); },
          py::arg("k"), py::arg("params"));
    m.def("scattering_coefficients",
          [](double k, const ModelParams& p) {
              const auto c = scattering_coefficients(momentum(k), p);
              return py::make_tuple(c.R, c.T);
          },
          py::arg("k"), py::arg("params"), "Returns (R, T).");
    m.def("resonant_transmission",
          [](const ModelParams& p) { return resonant_transmission(p); }, py::arg("params"));
    m.def("transmission_zero_energy",
          [](const ModelParams& p) -> std::optional<double> {
              const auto e = transmission_zero_energy(p);
              if (!e) return std::nullopt;
              return e->value;
          },
          py::arg("params"));

    m.def("mixing_angle", &mixing_angle, py::arg("g0"), py::arg("g1"));
    m.def("path_basis",
          [](const ModelParams& p) {
              const auto b = path_basis(p);
              py::dict d;
              d["theta"] = b.theta;
              d["omega_B"] = b.omega_B;
              d["omega_D"] = b.omega_D;
              d["g_B"] = b.g_B;
              return d;
          },
          py::arg("params"));
    m.def("t_path_D", [](double k) { return t_path_D(momentum(k)); }, py::arg("k"));
    m.def("t_path_B", [](double k, const ModelParams& p) { return t_path_B(momentum(k), p); },
          py::arg("k"), py::arg("params"));
    m.def("decompose",
          [](double k, const ModelParams& p) {
              const auto a = decompose(momentum(k), p);
              return py::make_tuple(a.t_B, a.t_D);
          },
          py::arg("k"), py::arg("params"), "Returns (t_B, t_D).");

    m.def("solve_scattering_exact",
          [](double k, const ModelParams& p) {
              const auto s = solve_scattering_exact(momentum(k), p);
              py::dict d;
              d["r"] = s.r;
              d["t"] = s.t;
              d["u0"] = s.u0;
              d["u1"] = s.u1;
              d["ue"] = s.ue;
              return d;
          },
          py::arg("k"), py::arg("params"));
    m.def("solve_path_space",
          [](double k, const ModelParams& p) {
              const auto s = solve_path_space(momentum(k), p);
              py::dict d;
              d["r"] = s.r;
              d["t"] = s.t;
              d["uB"] = s.uB;
              d["uD"] = s.uD;
              d["ue"] = s.ue;
              return d;
          },
          py::arg("k"), py::arg("params"));

    m.def("evolve_wavepacket",
          [](const ModelParams& p, std::size_t n_sites, std::size_t source_center, double k0,
             double sigma, double dt, double t_max) {
              WavepacketConfig cfg;
              cfg.n_sites = n_sites;
              cfg.source_center = source_center;
              cfg.k0 = k0;
              cfg.sigma = sigma;
              cfg.dt = dt;
              cfg.t_max = t_max;
              WavepacketResult r;
              {
                  py::gil_scoped_release release;
                  r = evolve_wavepacket(cfg, p);
              }
              py::dict d;
              d["T_num"] = r.T_num;
              d["R_num"] = r.R_num;
              d["residual"] = r.residual;
              d["P_e_max"] = r.P_e_max;
              d["norm_drift"] = r.norm_drift;
              d["t_end"] = r.t_end;
              d["T_predicted"] = predicted_transmission(cfg, p);
              return d;
          },
          py::arg("params"), py::arg("n_sites") = 600, py::arg("source_center") = 150,
          py::arg("k0") = kPi / 2, py::arg("sigma") = 20.0, py::arg("dt") = 0.02,
          py::arg("t_max") = 0.0);

    m.def("run_sweep",
          [](const ModelParams& p, py::tuple range, const std::string& axis, bool with_paths) {
              SweepSpec spec;
              spec.params = p;
              spec.range = range_from(range);
              if (axis == "momentum") {
                  spec.axis = SweepAxis::momentum;
              } else if (axis != "energy") {
                  throw ConfigError("axis must be 'energy' or 'momentum'");
              }
              spec.with_paths = with_paths;
              return grid_columns(run_sweep(spec));
          },
          py::arg("params"), py::arg("range") = py::make_tuple(0.0, 4.0, 401),
          py::arg("axis") = "energy", py::arg("with_paths") = false,
          "Columns of the sweep as a dict of lists.");
    m.def("run_grid",
          [](double omega_c, double xi, double omega, py::tuple e_range, py::tuple g_range) {
              GridSpec spec;
              spec.lattice = {omega_c, xi};
              spec.omega = omega;
              spec.energy = range_from(e_range);
              spec.coupling = range_from(g_range);
              return grid_columns(run_grid(spec));
          },
          py::arg("omega_c") = 2.0, py::arg("xi") = 1.0, py::arg("omega") = 2.0,
          py::arg("e_range") = py::make_tuple(0.0, 4.0, 200),
          py::arg("g_range") = py::make_tuple(0.0, 2.0, 200));
    m.def("verify",
          [](const ModelParams& p, std::uint64_t seed, std::size_t cases, double tol) {
              const auto r = verify(p, seed, cases, tol);
              return py::make_tuple(r.passed(), r.to_string());
          },
          py::arg("params"), py::arg("seed") = 42, py::arg("cases") = 1000,
          py::arg("tol") = kIdentityTolerance, "Returns (passed, report).");
}
