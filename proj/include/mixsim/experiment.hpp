#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixsim/commsim.hpp"
#include "mixsim/msm.hpp"
#include "mixsim/netgen.hpp"

namespace mixsim {

// Repetitions are independent work units; Parallel runs them on OpenMP
// threads. Results are bit-identical either way: every repetition seeds its
// own stream from (master_seed, index) and the reduction is a serial pass in
// index order.
enum class Exec { Serial, Parallel };

struct CaseSpec {
    double g_rate = 0.0;
    double d_rate = 0.0;
};

struct ExperimentSpec {
    std::vector<NetworkSpec> networks;
    std::vector<CaseSpec> cases;
    std::uint32_t reps = 1;
    std::uint64_t unit = 1;
    std::uint32_t n0 = 10;
    std::uint32_t t_max = 100;
    EventMode mode = EventMode::SingleEvent;
    std::uint64_t master_seed = 0;

    void validate() const;  // throws std::invalid_argument
};

// The built-in benchmark protocol: the six default networks, the four
// (g,d) cases (0.4,0.3) (0.4,0.4) (0.5,0.4) (0.5,0.5), u=1, n0=10,
// t_max=100, 100 repetitions.
ExperimentSpec default_experiment(std::uint64_t master_seed);

struct RepetitionSet {
    MeasureSet averaged;  // per-measure arithmetic mean over defined reps
    std::vector<MeasureSet> reps;
};

// Arithmetic mean of each measure over the sets where it is defined,
// accumulated in index order; excluded counts are averaged over all sets.
MeasureSet average_measures(const std::vector<MeasureSet>& sets);

// Runs `reps` simulations of cfg on g; repetition r uses seed
// derive_seed(master_seed, r). cfg.seed itself is ignored.
RepetitionSet run_repetitions(const Graph& g, const SimConfig& cfg, std::uint32_t reps,
                              std::uint64_t master_seed, Exec exec = Exec::Parallel);

struct CellResult {
    bool ok = false;
    std::string error;
    MeasureSet averaged;
    std::vector<MeasureSet> reps;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<std::vector<CellResult>> cells;  // [network][case]

    bool all_ok() const;
};

// Full network x case matrix. Each network is built once (construction seed
// = its own seed if set, else derive_seed(master_seed, net_index, 0, kNetTag))
// and shared across repetitions; cell (i,j) feeds run_repetitions with
// derive_seed(master_seed, i, j, kCellTag). Failures are recorded per cell
// and do not stop the rest of the matrix.
ExperimentReport compare_networks(const ExperimentSpec& spec, Exec exec = Exec::Parallel);

inline constexpr std::uint64_t kNetTag = 0x6e65;
inline constexpr std::uint64_t kCellTag = 0xce11;

// One row per network: the nine measures in kMeasureNames order.
using RadarRow = std::array<std::optional<double>, 9>;

// Divides each column by its maximum over the rows; all-zero columns map to
// zeros, absent values stay absent. Idempotent.
std::vector<RadarRow> normalize_columns(std::vector<RadarRow> rows);

// Max-normalized measure rows for one case of the report (failed cells
// yield all-absent rows).
std::vector<RadarRow> radar_normalize(const ExperimentReport& report, std::size_t case_index);

// Emissions. The measures CSV is case-major (all networks of the first case,
// then the next case); failed cells contribute no row.
std::string report_measures_csv(const ExperimentReport& report);
std::string report_radar_csv(const ExperimentReport& report);
std::string report_radar_svg(const ExperimentReport& report, std::size_t case_index);
std::string report_json(const ExperimentReport& report);

} // namespace mixsim
