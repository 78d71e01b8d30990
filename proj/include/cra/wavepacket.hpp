#pragma once

// Time-domain check of the stationary results: a Gaussian packet on a
// finite array with hard walls, the TLS attached to the two middle sites,
// evolved with classical fixed-step RK4 in the single-excitation sector.

#include <complex>
#include <cstddef>
#include <vector>

#include "cra/model.hpp"
#include "cra/scattering.hpp"

namespace cra {

struct WavepacketConfig {
    std::size_t n_sites = 600;
    std::size_t source_center = 150;
    double k0 = kPi / 2.0;
    double sigma = 20.0;  // Gaussian width in sites, >= 5
    double dt = 0.02;     // in units of 1/xi
    // 0 selects the time at which the packet centre is `clearance` widths
    // past the coupled sites.
    double t_max = 0.0;
    // Leaves ~1e-9 of a Gaussian tail behind; 3 widths would leave 1.3e-3.
    double clearance = 6.0;
    // Record a trace point every trace_stride steps; 0 disables the trace.
    std::size_t trace_stride = 0;
};

struct TracePoint {
    double time = 0.0;
    double left = 0.0;   // probability on sites left of the coupled pair
    double right = 0.0;  // probability on sites right of the coupled pair
    double tls = 0.0;    // TLS excitation probability
};

struct WavepacketResult {
    double T_num = 0.0;
    double R_num = 0.0;
    double residual = 0.0;  // coupled sites + TLS at the end of the run
    double P_e_max = 0.0;
    double norm_drift = 0.0;
    double t_end = 0.0;
    std::size_t steps = 0;
    std::vector<complex> final_sites;
    complex final_tls;
    std::vector<TracePoint> trace;
};

// Sites carrying the TLS: n_sites / 2 and n_sites / 2 + 1 play the roles of
// j = 0 and j = 1.
std::size_t coupling_site(const WavepacketConfig& cfg) noexcept;

// Normalized exp(i k0 j - (j - j0)^2 / (4 sigma^2)) on the lattice.
std::vector<complex> initial_packet(const WavepacketConfig& cfg);

// Throws ConfigError if the config invariants fail or the packet would reach
// a wall before t_end.
void validate(const WavepacketConfig& cfg, const ModelParams& params);

// Time at which the run stops for this config.
double run_time(const WavepacketConfig& cfg, const ModelParams& params);

// Throws ConfigError on bad configs and IntegrationError when the norm
// drifts by more than 1e-6.
WavepacketResult evolve_wavepacket(const WavepacketConfig& cfg, const ModelParams& params);

// Sum_k |c_k|^2 |t_k|^2 / Sum_k |c_k|^2 over right-moving components of the
// initial packet, sampled on n_k momenta in (0, pi).
double predicted_transmission(const WavepacketConfig& cfg, const ModelParams& params,
                              std::size_t n_k = 4096);

// |sum_{j > j1} psi_j e^{-ikj}|^2 over the transmitted half-lattice divided
// by the same projection of the initial packet; approaches |t_k|^2.
double momentum_resolved_transmission(const WavepacketResult& result,
                                      const WavepacketConfig& cfg, double k);

}  // namespace cra
