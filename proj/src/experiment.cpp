#include "mixsim/experiment.hpp"

#include <exception>
#include <stdexcept>

#include "json.hpp"

#include "mixsim/csv.hpp"
#include "mixsim/svg.hpp"

namespace mixsim {

void ExperimentSpec::validate() const {
    if (networks.empty()) throw std::invalid_argument("no networks");
    if (cases.empty()) throw std::invalid_argument("no cases");
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    if (unit == 0) throw std::invalid_argument("unit must be positive");
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    for (const auto& c : cases) {
        if (c.g_rate < 0.0 || c.g_rate > 1.0 || c.d_rate < 0.0 || c.d_rate > 1.0) {
            throw std::invalid_argument("case rates outside [0,1]");
        }
    }
}

ExperimentSpec default_experiment(std::uint64_t master_seed) {
    ExperimentSpec spec;
    spec.networks = default_networks();
    spec.cases = {{0.4, 0.3}, {0.4, 0.4}, {0.5, 0.4}, {0.5, 0.5}};
    spec.reps = 100;
    spec.unit = 1;
    spec.n0 = 10;
    spec.t_max = 100;
    spec.mode = EventMode::SingleEvent;
    spec.master_seed = master_seed;
    return spec;
}

namespace {

using OptField = std::optional<double> MeasureSet::*;

constexpr OptField kOptFields[] = {
    &MeasureSet::mu_I, &MeasureSet::var_I, &MeasureSet::mu_L,  &MeasureSet::var_L,
    &MeasureSet::mu_LR, &MeasureSet::var_LR, &MeasureSet::mu_S, &MeasureSet::var_S,
    &MeasureSet::m_mix};

} // namespace

MeasureSet average_measures(const std::vector<MeasureSet>& sets) {
    MeasureSet avg;
    for (const auto field : kOptFields) {
        double sum = 0.0;
        std::size_t count = 0;
        for (const auto& ms : sets) {
            if (const auto& v = ms.*field) {
                sum += *v;
                ++count;
            }
        }
        if (count > 0) avg.*field = sum / static_cast<double>(count);
    }
    double ex_lr = 0.0, ex_s = 0.0;
    for (const auto& ms : sets) {
        ex_lr += ms.excluded_LR;
        ex_s += ms.excluded_S;
    }
    if (!sets.empty()) {
        avg.excluded_LR = ex_lr / static_cast<double>(sets.size());
        avg.excluded_S = ex_s / static_cast<double>(sets.size());
    }
    return avg;
}

RepetitionSet run_repetitions(const Graph& g, const SimConfig& cfg, std::uint32_t reps,
                              std::uint64_t master_seed, Exec exec) {
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    cfg.validate(g);

    RepetitionSet rs;
    rs.reps.resize(reps);
    auto run_one = [&](std::uint32_t r) {
        SimConfig rep_cfg = cfg;
        rep_cfg.seed = derive_seed(master_seed, r);
        const InfoSeries series = run(g, rep_cfg);
        return aggregate(step_series(series, rep_cfg.unit));
    };
    if (exec == Exec::Parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (std::int64_t r = 0; r < static_cast<std::int64_t>(reps); ++r) {
            rs.reps[r] = run_one(static_cast<std::uint32_t>(r));
        }
    } else {
        for (std::uint32_t r = 0; r < reps; ++r) rs.reps[r] = run_one(r);
    }
    rs.averaged = average_measures(rs.reps);
    return rs;
}

bool ExperimentReport::all_ok() const {
    for (const auto& row : cells) {
        for (const auto& cell : row) {
            if (!cell.ok) return false;
        }
    }
    return true;
}

ExperimentReport compare_networks(const ExperimentSpec& spec, Exec exec) {
    spec.validate();
    ExperimentReport report;
    report.spec = spec;
    report.cells.resize(spec.networks.size());

    for (std::size_t i = 0; i < spec.networks.size(); ++i) {
        report.cells[i].resize(spec.cases.size());
        Graph g;
        std::string build_error;
        try {
            g = spec.networks[i].build(derive_seed(spec.master_seed, i, 0, kNetTag));
        } catch (const std::exception& e) {
            build_error = e.what();
        }
        for (std::size_t j = 0; j < spec.cases.size(); ++j) {
            CellResult& cell = report.cells[i][j];
            if (!build_error.empty()) {
                cell.error = "network build failed: " + build_error;
                continue;
            }
            try {
                SimConfig cfg;
                cfg.g_rate = spec.cases[j].g_rate;
                cfg.d_rate = spec.cases[j].d_rate;
                cfg.unit = spec.unit;
                cfg.n0 = spec.n0;
                cfg.t_max = spec.t_max;
                cfg.mode = spec.mode;
                auto rs = run_repetitions(g, cfg, spec.reps,
                                          derive_seed(spec.master_seed, i, j, kCellTag), exec);
                cell.averaged = rs.averaged;
                cell.reps = std::move(rs.reps);
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
        }
    }
    return report;
}

std::vector<RadarRow> normalize_columns(std::vector<RadarRow> rows) {
    for (std::size_t a = 0; a < 9; ++a) {
        double max = 0.0;
        for (const auto& row : rows) {
            if (row[a]) max = std::max(max, *row[a]);
        }
        for (auto& row : rows) {
            if (row[a]) *row[a] = max > 0.0 ? *row[a] / max : 0.0;
        }
    }
    return rows;
}

std::vector<RadarRow> radar_normalize(const ExperimentReport& report, std::size_t case_index) {
    if (case_index >= report.spec.cases.size()) throw std::out_of_range("case index");
    std::vector<RadarRow> rows(report.spec.networks.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CellResult& cell = report.cells[i][case_index];
        if (!cell.ok) continue;  // row stays all-absent
        for (std::size_t a = 0; a < 9; ++a) rows[i][a] = measure_value(cell.averaged, a);
    }
    return normalize_columns(std::move(rows));
}

std::string report_measures_csv(const ExperimentReport& report) {
    std::string csv = std::string(kMeasureCsvHeader) + "\n";
    for (std::size_t j = 0; j < report.spec.cases.size(); ++j) {
        const auto& cs = report.spec.cases[j];
        for (std::size_t i = 0; i < report.spec.networks.size(); ++i) {
            const CellResult& cell = report.cells[i][j];
            if (!cell.ok) continue;
            csv += measure_csv_row(report.spec.networks[i].name,
                                   case_label(cs.g_rate, cs.d_rate), cell.averaged);
            csv += '\n';
        }
    }
    return csv;
}

std::string report_radar_csv(const ExperimentReport& report) {
    std::string csv = "network,case,measure,normalized_value\n";
    for (std::size_t j = 0; j < report.spec.cases.size(); ++j) {
        const auto rows = radar_normalize(report, j);
        const std::string label =
            case_label(report.spec.cases[j].g_rate, report.spec.cases[j].d_rate);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t a = 0; a < 9; ++a) {
                csv += report.spec.networks[i].name + "," + label + "," + kMeasureNames[a] + ",";
                if (rows[i][a]) csv += format_sig(*rows[i][a]);
                csv += '\n';
            }
        }
    }
    return csv;
}

std::string report_radar_svg(const ExperimentReport& report, std::size_t case_index) {
    const auto rows = radar_normalize(report, case_index);
    std::vector<std::string> labels;
    labels.reserve(report.spec.networks.size());
    for (const auto& net : report.spec.networks) labels.push_back(net.name);
    const auto& cs = report.spec.cases[case_index];
    return radar_svg(labels, rows, "case " + case_label(cs.g_rate, cs.d_rate));
}

namespace {

nlohmann::json measure_json(const MeasureSet& ms) {
    nlohmann::json j;
    static const char* const names[] = {"mu_I", "var_I", "mu_L",  "var_L", "mu_LR",
                                        "var_LR", "mu_S", "var_S", "M_mix"};
    for (std::size_t a = 0; a < 9; ++a) {
        const auto v = measure_value(ms, a);
        j[names[a]] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    }
    j["M_atom"] = ms.m_atom() ? nlohmann::json(*ms.m_atom()) : nlohmann::json(nullptr);
    j["M_mob"] = ms.m_mob() ? nlohmann::json(*ms.m_mob()) : nlohmann::json(nullptr);
    j["excluded_LR"] = ms.excluded_LR;
    j["excluded_S"] = ms.excluded_S;
    return j;
}

} // namespace

std::string report_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["master_seed"] = report.spec.master_seed;
    j["reps"] = report.spec.reps;
    j["unit"] = report.spec.unit;
    j["n0"] = report.spec.n0;
    j["t_max"] = report.spec.t_max;
    j["mode"] = report.spec.mode == EventMode::SingleEvent ? "single-event" : "per-vertex";
    j["networks"] = nlohmann::json::array();
    for (const auto& net : report.spec.networks) j["networks"].push_back(net.name);
    j["cases"] = nlohmann::json::array();
    for (const auto& cs : report.spec.cases) {
        j["cases"].push_back({{"g", cs.g_rate}, {"d", cs.d_rate}});
    }

    j["cells"] = nlohmann::json::array();
    for (std::size_t i = 0; i < report.spec.networks.size(); ++i) {
        for (std::size_t j2 = 0; j2 < report.spec.cases.size(); ++j2) {
            const CellResult& cell = report.cells[i][j2];
            nlohmann::json c;
            c["network"] = report.spec.networks[i].name;
            c["case"] = case_label(report.spec.cases[j2].g_rate, report.spec.cases[j2].d_rate);
            c["ok"] = cell.ok;
            if (!cell.ok) {
                c["error"] = cell.error;
            } else {
                c["averaged"] = measure_json(cell.averaged);
                c["repetitions"] = nlohmann::json::array();
                for (const auto& rep : cell.reps) c["repetitions"].push_back(measure_json(rep));
            }
            j["cells"].push_back(std::move(c));
        }
    }

    j["radar"] = nlohmann::json::array();
    for (std::size_t j2 = 0; j2 < report.spec.cases.size(); ++j2) {
        const auto rows = radar_normalize(report, j2);
        nlohmann::json r;
        r["case"] = case_label(report.spec.cases[j2].g_rate, report.spec.cases[j2].d_rate);
        r["networks"] = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            nlohmann::json row;
            row["network"] = report.spec.networks[i].name;
            for (std::size_t a = 0; a < 9; ++a) {
                row[kMeasureNames[a]] = rows[i][a] ? nlohmann::json(*rows[i][a])
                                                   : nlohmann::json(nullptr);
            }
            r["networks"].push_back(std::move(row));
        }
        j["radar"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

} // namespace mixsim
