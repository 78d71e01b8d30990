#include "cra/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cra/errors.hpp"

namespace cra {
namespace {

using namespace std::complex_literals;

// Probability below which a packet tail counts as not touching a wall.
constexpr double kWallTolerance = 1e-10;
constexpr double kMaxNormDrift = 1e-6;
constexpr double kTailWidths = 5.0;

struct State {
    std::vector<complex> sites;
    complex tls;
};

// Single-excitation Hamiltonian applied in a frame rotating at the carrier
// energy; the shift is a global phase and keeps RK4 phase error small.
class Propagator {
public:
    Propagator(const WavepacketConfig& cfg, const ModelParams& p, double reference)
        : n_(cfg.n_sites),
          j0_(coupling_site(cfg)),
          onsite_(p.lattice.omega_c - reference),
          tls_(p.emitter.omega - reference),
          xi_(p.lattice.xi),
          g0_(p.emitter.g0),
          g1_(p.emitter.g1) {}

    // out = -i H in
    void derivative(const State& in, State& out) const {
        const auto& u = in.sites;
        auto& du = out.sites;
        for (std::size_t j = 0; j < n_; ++j) {
            complex h = onsite_ * u[j];
            if (j > 0) h -= xi_ * u[j - 1];
            if (j + 1 < n_) h -= xi_ * u[j + 1];
            du[j] = -1i * h;
        }
        du[j0_] += -1i * g0_ * in.tls;
        du[j0_ + 1] += -1i * g1_ * in.tls;
        out.tls = -1i * (tls_ * in.tls + g0_ * u[j0_] + g1_ * u[j0_ + 1]);
    }

    void step(State& s, double dt) {
        resize(s);
        derivative(s, k1_);
        axpy(s, 0.5 * dt, k1_, tmp_);
        derivative(tmp_, k2_);
        axpy(s, 0.5 * dt, k2_, tmp_);
        derivative(tmp_, k3_);
        axpy(s, dt, k3_, tmp_);
        derivative(tmp_, k4_);
        const double w = dt / 6.0;
        for (std::size_t j = 0; j < n_; ++j) {
            s.sites[j] += w * (k1_.sites[j] + 2.0 * k2_.sites[j] + 2.0 * k3_.sites[j] + k4_.sites[j]);
        }
        s.tls += w * (k1_.tls + 2.0 * k2_.tls + 2.0 * k3_.tls + k4_.tls);
    }

private:
    void resize(const State& s) {
        if (k1_.sites.size() == s.sites.size()) return;
        for (State* st : {&k1_, &k2_, &k3_, &k4_, &tmp_}) st->sites.assign(n_, 0.0);
    }

    void axpy(const State& x, double a, const State& y, State& out) const {
        for (std::size_t j = 0; j < n_; ++j) out.sites[j] = x.sites[j] + a * y.sites[j];
        out.tls = x.tls + a * y.tls;
    }

    std::size_t n_;
    std::size_t j0_;
    double onsite_;
    double tls_;
    double xi_;
    double g0_;
    double g1_;
    State k1_, k2_, k3_, k4_, tmp_;
};

struct Tally {
    double left = 0.0;
    double right = 0.0;
    double middle = 0.0;
    double tls = 0.0;

    double total() const { return left + right + middle + tls; }
};

Tally tally(const State& s, std::size_t j0) {
    Tally out;
    for (std::size_t j = 0; j < s.sites.size(); ++j) {
        const double p = std::norm(s.sites[j]);
        if (j < j0) {
            out.left += p;
        } else if (j > j0 + 1) {
            out.right += p;
        } else {
            out.middle += p;
        }
    }
    out.tls = std::norm(s.tls);
    return out;
}

double wall_probability(const std::vector<complex>& sites, std::size_t width) {
    double p = 0.0;
    const std::size_t n = sites.size();
    for (std::size_t j = 0; j < width && j < n; ++j) {
        p += std::norm(sites[j]) + std::norm(sites[n - 1 - j]);
    }
    return p;
}

}  // namespace

std::size_t coupling_site(const WavepacketConfig& cfg) noexcept { return cfg.n_sites / 2; }

std::vector<complex> initial_packet(const WavepacketConfig& cfg) {
    std::vector<complex> psi(cfg.n_sites);
    const double c = static_cast<double>(cfg.source_center);
    double norm = 0.0;
    for (std::size_t j = 0; j < cfg.n_sites; ++j) {
        const double x = static_cast<double>(j);
        const double envelope = std::exp(-(x - c) * (x - c) / (4.0 * cfg.sigma * cfg.sigma));
        psi[j] = std::polar(envelope, cfg.k0 * x);
        norm += envelope * envelope;
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& v : psi) v *= scale;
    return psi;
}

double run_time(const WavepacketConfig& cfg, const ModelParams& params) {
    if (cfg.t_max > 0.0) return cfg.t_max;
    const double v = group_velocity(BlochMomentum(cfg.k0), params.lattice);
    const double distance = static_cast<double>(coupling_site(cfg) + 1) + cfg.clearance * cfg.sigma -
                            static_cast<double>(cfg.source_center);
    return distance / v;
}

void validate(const WavepacketConfig& cfg, const ModelParams& params) {
    validate(params);
    auto fail = [](const std::string& why) { throw ConfigError("wavepacket: " + why); };
    if (!(cfg.sigma >= 5.0)) fail("sigma must be at least 5 sites");
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) fail("dt must be positive");
    if (!(cfg.clearance >= 0.0)) fail("clearance must be non-negative");
    if (!(cfg.k0 > 0.0 && cfg.k0 < kPi)) fail("k0 must lie strictly inside (0, pi)");
    if (cfg.n_sites < 8) fail("lattice too short");
    const std::size_t j0 = coupling_site(cfg);
    if (cfg.source_center >= j0) fail("source must start left of the coupled sites");

    const double v = group_velocity(BlochMomentum(cfg.k0), params.lattice);
    const double src = static_cast<double>(cfg.source_center);
    const double tail = kTailWidths * cfg.sigma;
    const double right_edge = static_cast<double>(cfg.n_sites - 1);
    const double clear_time =
        (static_cast<double>(j0 + 1) + cfg.clearance * cfg.sigma - src) / v;
    if (cfg.t_max > 0.0 && cfg.t_max < clear_time) {
        std::ostringstream msg;
        msg << "t_max = " << cfg.t_max << " ends before the packet clears the coupled sites (t = "
            << clear_time << ")";
        fail(msg.str());
    }
    if (src < tail) fail("packet starts too close to the left wall");
    if (src + tail >= static_cast<double>(j0)) fail("packet starts overlapping the coupled sites");

    const double t_end = run_time(cfg, params);
    const double travel = v * t_end;
    if (src + travel + tail > right_edge) {
        std::ostringstream msg;
        msg << "transmitted packet reaches the right wall before t = " << t_end
            << "; increase n_sites";
        fail(msg.str());
    }
    // Reflected part turns around at j0 and heads back to the left wall.
    const double reflected = static_cast<double>(j0) - (travel - (static_cast<double>(j0) - src));
    if (reflected - tail < 0.0) {
        std::ostringstream msg;
        msg << "reflected packet reaches the left wall before t = " << t_end
            << "; increase n_sites";
        fail(msg.str());
    }
}

WavepacketResult evolve_wavepacket(const WavepacketConfig& cfg, const ModelParams& params) {
    validate(cfg, params);
    const double t_end = run_time(cfg, params);
    const std::size_t steps = static_cast<std::size_t>(std::ceil(t_end / cfg.dt));
    const double dt = t_end / static_cast<double>(steps);
    const double reference = dispersion(BlochMomentum(cfg.k0), params.lattice).value;
    const std::size_t j0 = coupling_site(cfg);

    Propagator prop(cfg, params, reference);
    State state{initial_packet(cfg), 0.0};

    WavepacketResult out;
    out.t_end = t_end;
    out.steps = steps;
    auto record = [&](std::size_t n, const Tally& t) {
        if (cfg.trace_stride > 0 && n % cfg.trace_stride == 0) {
            out.trace.push_back({static_cast<double>(n) * dt, t.left, t.right, t.tls});
        }
    };
    record(0, tally(state, j0));

    for (std::size_t n = 1; n <= steps; ++n) {
        prop.step(state, dt);
        const Tally t = tally(state, j0);
        out.norm_drift = std::max(out.norm_drift, std::abs(1.0 - t.total()));
        out.P_e_max = std::max(out.P_e_max, t.tls);
        record(n, t);
        if (out.norm_drift > kMaxNormDrift) {
            std::ostringstream msg;
            msg << "norm drift " << out.norm_drift << " exceeds " << kMaxNormDrift
                << " at t = " << static_cast<double>(n) * dt << "; reduce dt";
            throw IntegrationError(msg.str(), out.norm_drift);
        }
    }

    if (wall_probability(state.sites, 3) > kWallTolerance) {
        throw ConfigError("wavepacket: packet reached the lattice boundary; increase n_sites");
    }

    const Tally final = tally(state, j0);
    out.T_num = final.right;
    out.R_num = final.left;
    out.residual = final.middle + final.tls;
    out.final_sites = std::move(state.sites);
    out.final_tls = state.tls;
    return out;
}

double predicted_transmission(const WavepacketConfig& cfg, const ModelParams& params,
                              std::size_t n_k) {
    validate(params);
    const auto psi = initial_packet(cfg);
    double weighted = 0.0;
    double total = 0.0;
    for (std::size_t m = 0; m < n_k; ++m) {
        const double k = kPi * (static_cast<double>(m) + 0.5) / static_cast<double>(n_k);
        complex c = 0.0;
        for (std::size_t j = 0; j < psi.size(); ++j) {
            c += psi[j] * std::polar(1.0, -k * static_cast<double>(j));
        }
        const double w = std::norm(c);
        weighted += w * scattering_coefficients(BlochMomentum(k), params).T;
        total += w;
    }
    return weighted / total;
}

double momentum_resolved_transmission(const WavepacketResult& result,
                                      const WavepacketConfig& cfg, double k) {
    const auto psi0 = initial_packet(cfg);
    const std::size_t j1 = coupling_site(cfg) + 1;
    complex out = 0.0;
    complex in = 0.0;
    for (std::size_t j = 0; j < psi0.size(); ++j) {
        const complex wave = std::polar(1.0, -k * static_cast<double>(j));
        in += psi0[j] * wave;
        if (j > j1) out += result.final_sites[j] * wave;
    }
    return std::norm(out) / std::norm(in);
}

}  // namespace cra
