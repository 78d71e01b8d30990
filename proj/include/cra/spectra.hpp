#pragma once

// Parameter sweeps and grids over the transmission spectrum, the seeded
// verification suite, and their CSV / JSON serialization.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cra/model.hpp"
#include "cra/scattering.hpp"

namespace cra {

inline constexpr const char* kToolName = "cra-spectra";
inline constexpr const char* kToolVersion = "0.1.0";

// Margin kept from the band edges, where sin k = 0.
inline constexpr double kEdgeMargin = 1e-6;

enum class SweepAxis { energy, momentum };

struct Range {
    double start = 0.0;
    double stop = 0.0;
    std::size_t n = 2;
};

// Parses "A:B:N". Throws ConfigError on malformed input.
Range parse_range(const std::string& text);

struct SweepSpec {
    SweepAxis axis = SweepAxis::energy;
    Range range{0.0, 4.0, 401};
    ModelParams params;
    bool with_paths = false;  // add t_B, t_D columns; requires g0 == g1
};

struct GridSpec {
    Range energy{0.0, 4.0, 200};
    Range coupling{0.0, 2.0, 200};  // applied as g0 = g1 = g
    LatticeParams lattice;
    double omega = 2.0;
};

struct SpectrumRow {
    double g = 0.0;  // grid rows only
    double E = 0.0;
    double k = 0.0;
    double T = 0.0;
    double R = 0.0;
    complex t;
    complex r;
    std::optional<complex> t_B;
    std::optional<complex> t_D;
};

enum class GridKind { sweep, grid };

struct SpectrumGrid {
    GridKind kind = GridKind::sweep;
    std::vector<std::string> header;  // parameter lines, without the '#'
    std::vector<SpectrumRow> rows;
    bool has_paths = false;
};

// n evenly spaced points on [start, stop], each clamped into the open band
// shrunk by kEdgeMargin (energy axis) or into [margin, pi - margin]
// (momentum axis). Points that clamp onto the same edge collapse to one, so
// a range reaching past the band yields fewer than n points. Throws
// ConfigError if the clipped range is empty or n < 2.
std::vector<double> sweep_points(const Range& range, SweepAxis axis, const LatticeParams& lattice);

SpectrumGrid run_sweep(const SweepSpec& spec);

// Long format, g-major: rows for the first g, then the next, ...
SpectrumGrid run_grid(const GridSpec& spec);

struct CheckResult {
    std::string name;
    double worst = 0.0;
    std::size_t failures = 0;
    std::string first_failure;  // parameters of the first failing case
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    double tolerance = kIdentityTolerance;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
    // One summary line on success; a line per failing check otherwise.
    std::string to_string() const;
};

// Case 0 uses `params` as given; further cases draw g0, g1 in [0, 3] and
// Omega within one unit of the band around params' lattice. Each case draws
// k in (0.01, pi - 0.01). Checks: unitarity, closed form vs real-space
// solve (t and r), path decomposition and path-space solve (with g1 := g0).
VerifyReport verify(const ModelParams& params, std::uint64_t seed, std::size_t n_cases,
                    double tolerance = kIdentityTolerance);

void write_csv(std::ostream& out, const SpectrumGrid& grid);
void write_json(std::ostream& out, const SpectrumGrid& grid);

std::vector<std::string> column_names(const SpectrumGrid& grid);

// Numeric table read back from an emitted file.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// '#' lines are skipped; the first remaining line holds the column names.
Table read_csv(std::istream& in);
Table read_json(std::istream& in);

// Largest |R + T - 1| over the rows of a sweep table. Grid tables carry no
// R column; for them this returns the largest excursion of T outside [0, 1].
double max_unitarity_violation(const Table& table);

}  // namespace cra
