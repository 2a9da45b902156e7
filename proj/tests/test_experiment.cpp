#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mixsim/errors.hpp"
#include "mixsim/experiment.hpp"
#include "mixsim/spec_file.hpp"

using namespace mixsim;

namespace {

SimConfig base_config(double g, double d) {
    SimConfig cfg;
    cfg.g_rate = g;
    cfg.d_rate = d;
    cfg.n0 = 10;
    cfg.t_max = 100;
    return cfg;
}

ExperimentSpec tiny_spec() {
    ExperimentSpec spec = default_experiment(3);
    spec.networks = {spec.networks[0], spec.networks[4]};  // star + small-world
    spec.cases = {{0.4, 0.4}};
    spec.reps = 8;
    return spec;
}

bool same_measures(const MeasureSet& a, const MeasureSet& b) {
    for (std::size_t i = 0; i < 9; ++i) {
        if (measure_value(a, i) != measure_value(b, i)) return false;
    }
    return a.excluded_LR == b.excluded_LR && a.excluded_S == b.excluded_S;
}

} // namespace

TEST_CASE("single repetition equals its own average") {
    const Graph g = make_star(40);
    const auto rs = run_repetitions(g, base_config(0.4, 0.3), 1, 42);
    REQUIRE(rs.reps.size() == 1);
    CHECK(same_measures(rs.averaged, rs.reps[0]));
}

TEST_CASE("repetitions are deterministic and stream-indexed") {
    const Graph g = make_tree(4, 2);
    const auto cfg = base_config(0.5, 0.4);
    const auto a = run_repetitions(g, cfg, 12, 7);
    const auto b = run_repetitions(g, cfg, 12, 7);
    REQUIRE(a.reps.size() == b.reps.size());
    for (std::size_t r = 0; r < a.reps.size(); ++r) {
        CHECK(same_measures(a.reps[r], b.reps[r]));
    }
    CHECK(same_measures(a.averaged, b.averaged));

    // Repetition r stands alone: a 1-rep run on the derived stream
    // reproduces the batch entry, so permuting indices changes nothing.
    for (const std::size_t r : {std::size_t{0}, std::size_t{5}, std::size_t{11}}) {
        SimConfig one = cfg;
        one.seed = derive_seed(7, r);
        const auto ms = aggregate(step_series(run(g, one), one.unit));
        CHECK(same_measures(ms, a.reps[r]));
    }
}

TEST_CASE("parallel and serial repetitions are bit-identical") {
    const Graph g = make_tree(9, 2);
    const auto cfg = base_config(0.4, 0.4);
    const auto parallel = run_repetitions(g, cfg, 40, 9, Exec::Parallel);
    const auto serial = run_repetitions(g, cfg, 40, 9, Exec::Serial);
    REQUIRE(parallel.reps.size() == serial.reps.size());
    for (std::size_t r = 0; r < parallel.reps.size(); ++r) {
        CHECK(same_measures(parallel.reps[r], serial.reps[r]));
    }
    CHECK(same_measures(parallel.averaged, serial.averaged));
}

TEST_CASE("averaging is the fixed-order arithmetic mean") {
    const Graph g = make_star(30);
    const auto rs = run_repetitions(g, base_config(0.4, 0.3), 10, 4);
    double sum = 0.0;
    for (const auto& rep : rs.reps) sum += *rep.mu_S;
    CHECK(*rs.averaged.mu_S == sum / 10.0);  // bit-exact by construction

    double mix = 0.0;
    for (const auto& rep : rs.reps) mix += *rep.m_mix;
    CHECK(*rs.averaged.m_mix == mix / 10.0);
}

TEST_CASE("absent per-rep measures are excluded from the average") {
    MeasureSet with;
    with.mu_S = 0.5;
    with.var_S = 0.1;
    with.m_mix = 0.05;
    with.mu_L = 0.2;
    with.excluded_S = 2.0;
    MeasureSet without;  // all absent
    without.mu_L = 0.4;
    without.excluded_S = 100.0;
    const MeasureSet avg = average_measures({with, without});
    CHECK(*avg.mu_S == 0.5);         // only one defined entry
    CHECK(*avg.mu_L == doctest::Approx(0.3));
    CHECK(avg.excluded_S == 51.0);   // counts average over all sets
    CHECK_FALSE(average_measures({without, without}).mu_S.has_value());
}

TEST_CASE("compare_networks fills the full matrix") {
    const auto report = compare_networks(tiny_spec());
    REQUIRE(report.cells.size() == 2);
    REQUIRE(report.cells[0].size() == 1);
    CHECK(report.all_ok());
    CHECK(report.cells[0][0].reps.size() == 8);
    CHECK(report.cells[0][0].averaged.mu_S.has_value());

    const std::string csv = report_measures_csv(report);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 cells
    CHECK(csv.find("star,g0.4-d0.4,") != std::string::npos);
    CHECK(csv.find("small-world,g0.4-d0.4,") != std::string::npos);
}

TEST_CASE("compare_networks records per-cell failures and keeps going") {
    ExperimentSpec spec = tiny_spec();
    spec.networks[0].kind = NetworkKind::Jumpers;
    spec.networks[0].branching = 2;
    spec.networks[0].depth = 1;
    spec.networks[0].count = 100;  // only 3 vertices: impossible
    const auto report = compare_networks(spec);
    CHECK_FALSE(report.all_ok());
    CHECK_FALSE(report.cells[0][0].ok);
    CHECK(report.cells[0][0].error.find("build failed") != std::string::npos);
    CHECK(report.cells[1][0].ok);

    const std::string csv = report_measures_csv(report);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // failed cell has no row
    const std::string json = report_json(report);
    CHECK(json.find("\"ok\": false") != std::string::npos);
}

TEST_CASE("radar normalization") {
    std::vector<RadarRow> rows(3);
    for (auto& row : rows) row.fill(0.0);
    rows[0][0] = 2.0;
    rows[1][0] = 1.0;
    rows[2][0] = 0.5;
    rows[0][8] = 0.0;  // all-zero column stays zero
    rows[1][3] = std::nullopt;

    const auto norm = normalize_columns(rows);
    CHECK(*norm[0][0] == 1.0);
    CHECK(*norm[1][0] == 0.5);
    CHECK(*norm[2][0] == 0.25);
    CHECK(*norm[0][8] == 0.0);
    CHECK_FALSE(norm[1][3].has_value());

    // Idempotence: normalizing a normalized table is the identity.
    const auto again = normalize_columns(norm);
    for (std::size_t i = 0; i < norm.size(); ++i) {
        for (std::size_t a = 0; a < 9; ++a) CHECK(again[i][a] == norm[i][a]);
    }
}

TEST_CASE("radar rows from a report peak at 1") {
    const auto report = compare_networks(tiny_spec());
    const auto rows = radar_normalize(report, 0);
    REQUIRE(rows.size() == 2);
    for (std::size_t a = 0; a < 9; ++a) {
        double max = 0.0;
        bool any = false;
        for (const auto& row : rows) {
            if (row[a]) {
                max = std::max(max, *row[a]);
                any = true;
            }
        }
        REQUIRE(any);
        CHECK((max == doctest::Approx(1.0) || max == 0.0));
    }

    // Single-network reports normalize to exactly 1 (or 0 for zero columns).
    ExperimentSpec solo = tiny_spec();
    solo.networks = {solo.networks[0]};
    const auto solo_rows = radar_normalize(compare_networks(solo), 0);
    for (std::size_t a = 0; a < 9; ++a) {
        REQUIRE(solo_rows[0][a].has_value());
        CHECK((*solo_rows[0][a] == doctest::Approx(1.0) || *solo_rows[0][a] == 0.0));
    }
}

TEST_CASE("report emissions are deterministic") {
    const auto spec = tiny_spec();
    const auto a = compare_networks(spec, Exec::Parallel);
    const auto b = compare_networks(spec, Exec::Serial);
    CHECK(report_measures_csv(a) == report_measures_csv(b));
    CHECK(report_radar_csv(a) == report_radar_csv(b));
    CHECK(report_radar_svg(a, 0) == report_radar_svg(b, 0));
    CHECK(report_json(a) == report_json(b));
    CHECK(report_radar_csv(a).rfind("network,case,measure,normalized_value\n", 0) == 0);
}

TEST_CASE("default experiment matches the benchmark protocol") {
    const auto spec = default_experiment(1);
    CHECK(spec.networks.size() == 6);
    CHECK(spec.cases.size() == 4);
    CHECK(spec.reps == 100);
    CHECK(spec.n0 == 10);
    CHECK(spec.t_max == 100);
    CHECK(spec.unit == 1);
    CHECK(spec.networks[0].name == "star");
    CHECK(spec.networks[5].name == "hypercube");
    CHECK(spec.cases[0].g_rate == 0.4);
    CHECK(spec.cases[0].d_rate == 0.3);
    CHECK_NOTHROW(spec.validate());
}

TEST_CASE("spec file round-trip and validation errors") {
    const ExperimentSpec spec = tiny_spec();
    const std::string text = experiment_spec_text(spec);
    const ExperimentSpec back = parse_experiment_spec_text(text);
    CHECK(back.networks.size() == spec.networks.size());
    CHECK(back.networks[1].kind == NetworkKind::Ws);
    CHECK(back.networks[1].p == spec.networks[1].p);
    CHECK(back.cases.size() == 1);
    CHECK(back.reps == spec.reps);
    CHECK(back.master_seed == spec.master_seed);
    CHECK(experiment_spec_text(back) == text);

    CHECK_THROWS_WITH_AS(parse_experiment_spec_text("[experiment]\nbogus = 1\n"),
                         doctest::Contains("unknown experiment key"), ParseError);
    CHECK_THROWS_WITH_AS(parse_experiment_spec_text("[nope]\n"),
                         doctest::Contains("unknown section"), ParseError);
    CHECK_THROWS_WITH_AS(parse_experiment_spec_text("x = 1\n"),
                         doctest::Contains("outside any section"), ParseError);
    CHECK_THROWS_WITH_AS(parse_experiment_spec_text("[network]\nkind = blob\n"),
                         doctest::Contains("unknown network kind"), ParseError);
    CHECK_THROWS_WITH_AS(parse_experiment_spec_text("[case]\ng 0.4\n"),
                         doctest::Contains("line 2"), ParseError);

    ExperimentSpec invalid;
    CHECK_THROWS_AS(invalid.validate(), std::invalid_argument);
}
