#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mixsim/cli.hpp"
#include "mixsim/csv.hpp"

using namespace mixsim;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = cli::dispatch(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path temp_dir() {
    const auto dir = fs::temp_directory_path() / "mixsim_cli_test";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("number formatting helpers") {
    CHECK(format_sig(0.0220001, 6) == "0.0220001");
    CHECK(format_sig(2.96e-4, 6) == "0.000296");
    CHECK(format_sig(1.0 / 3.0, 6) == "0.333333");
    CHECK(format_sig(0.0, 6) == "0");
    CHECK(format_fixed(3.56044, 3) == "3.560");
    CHECK(case_label(0.4, 0.3) == "g0.4-d0.3");
    CHECK(case_label(0.55, 0.5) == "g0.55-d0.5");
}

TEST_CASE("gen writes edge lists and a feature summary") {
    const auto dir = temp_dir();
    const auto path = (dir / "star.edges").string();
    const auto r = invoke({"gen", "star", "--n", "91", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("edge_count,90") != std::string::npos);
    CHECK(r.out.find("diameter,2") != std::string::npos);

    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "0 1");

    // Without --out the edge list goes to stdout.
    const auto piped = invoke({"gen", "star", "--n", "3"});
    CHECK(piped.code == 0);
    CHECK(piped.out == "0 1\n0 2\n");

    const auto empty = invoke({"gen", "hypercube", "--dim", "0"});
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("gen is deterministic per seed") {
    const auto a = invoke({"gen", "ws", "--n", "91", "--k", "4", "--p", "0.55", "--seed", "7"});
    const auto b = invoke({"gen", "ws", "--n", "91", "--k", "4", "--p", "0.55", "--seed", "7"});
    const auto c = invoke({"gen", "ws", "--n", "91", "--k", "4", "--p", "0.55", "--seed", "8"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("gen rejects bad parameters with exit 1") {
    const auto r = invoke({"gen", "star", "--n", "1"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    CHECK(invoke({"gen", "blob"}).code == 1);
    CHECK(invoke({"gen", "ws", "--n", "4", "--k", "4"}).code == 1);
}

TEST_CASE("features round-trips gen output") {
    const auto dir = temp_dir();
    const auto path = (dir / "tree.edges").string();
    REQUIRE(invoke({"gen", "tree", "--branching", "9", "--depth", "2", "--out", path}).code == 0);
    const auto r = invoke({"features", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertex_count,91") != std::string::npos);
    CHECK(r.out.find("diameter,4") != std::string::npos);
    CHECK(r.out.find("mean_distance,3.560") != std::string::npos);

    const auto pretty = invoke({"features", path, "--pretty"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("degree histogram") != std::string::npos);
}

TEST_CASE("features reports parse errors with line numbers") {
    const auto dir = temp_dir();
    const auto path = (dir / "broken.edges").string();
    write_file(path, "0 1\nbroken line\n");
    const auto r = invoke({"features", path});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 2") != std::string::npos);

    CHECK(invoke({"features", (dir / "missing.edges").string()}).code == 2);

    // Disconnected graphs leave distance fields empty.
    const auto disc = (dir / "disc.edges").string();
    write_file(disc, "0 1\n2 3\n");
    const auto d = invoke({"features", disc});
    CHECK(d.code == 0);
    CHECK(d.out.find("diameter,\n") != std::string::npos);
    CHECK(d.out.find("mean_distance,\n") != std::string::npos);
}

TEST_CASE("run emits one measures row and honors determinism") {
    const auto r = invoke({"run", "--graph", "star:91", "--g", "0.4", "--d", "0.4", "--u", "1",
                           "--n0", "10", "--steps", "100", "--reps", "5", "--seed", "1"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row, extra;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK_FALSE(std::getline(lines, extra));  // exactly header + one row
    CHECK(header.rfind("network,case,", 0) == 0);
    CHECK(row.rfind("star:91,g0.4-d0.4,", 0) == 0);

    const auto again = invoke({"run", "--graph", "star:91", "--g", "0.4", "--d", "0.4", "--u",
                               "1", "--n0", "10", "--steps", "100", "--reps", "5", "--seed",
                               "1"});
    CHECK(again.out == r.out);

    const auto serial = invoke({"run", "--graph", "star:91", "--g", "0.4", "--d", "0.4", "--u",
                                "1", "--n0", "10", "--steps", "100", "--reps", "5", "--seed",
                                "1", "--serial"});
    CHECK(serial.out == r.out);
}

TEST_CASE("run with no events yields zero phase measures") {
    const auto r = invoke({"run", "--graph", "star:20", "--g", "0", "--d", "0", "--reps", "1",
                           "--seed", "3"});
    CHECK(r.code == 0);
    // M_mix, M_atom, M_mob columns (11..13) are exactly 0.
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    std::vector<std::string> fields;
    std::istringstream fs_(row);
    std::string f;
    while (std::getline(fs_, f, ',')) fields.push_back(f);
    REQUIRE(fields.size() == 15);
    CHECK(fields[10] == "0");
    CHECK(fields[11] == "0");
    CHECK(fields[12] == "0");
}

TEST_CASE("run writes auxiliary exports") {
    const auto dir = temp_dir();
    const auto traj = (dir / "traj.csv").string();
    const auto svg = (dir / "traj.svg").string();
    const auto events = (dir / "events.csv").string();
    const auto states = (dir / "states.csv").string();
    const auto json = (dir / "report.json").string();
    const auto r = invoke({"run", "--graph", "tree:3,2", "--g", "0.5", "--d", "0.4", "--steps",
                           "50", "--reps", "2", "--seed", "9", "--n0", "5", "--trajectory",
                           traj, "--trajectory-svg", svg, "--event-log", events, "--states",
                           states, "--json", json});
    CHECK(r.code == 0);
    CHECK(read_file(traj).rfind("t,r,theta\n", 0) == 0);
    CHECK(std::count(read_file(traj).begin(), read_file(traj).end(), '\n') == 52);
    CHECK(read_file(svg).rfind("<svg", 0) == 0);
    CHECK(read_file(events).rfind("step,event,sender,receiver,erased\n", 0) == 0);
    CHECK(read_file(states).rfind("step,q_0", 0) == 0);
    CHECK(read_file(json).find("\"repetitions\"") != std::string::npos);
}

TEST_CASE("run validation failures exit 1, IO failures exit 2") {
    CHECK(invoke({"run", "--graph", "star:91", "--g", "2", "--d", "0"}).code == 1);
    CHECK(invoke({"run", "--graph", "star:91", "--g", "0.4", "--d", "0.4", "--n0", "200"})
              .code == 1);
    CHECK(invoke({"run", "--graph", "star:91", "--g", "0.4", "--d", "0.4", "--out",
                  "/nonexistent-dir/x.csv"})
              .code == 2);
    CHECK(invoke({"run", "--graph", "star:91"}).code == 1);  // missing required flags
}

TEST_CASE("compare with a spec file") {
    const auto dir = temp_dir();
    const auto spec = (dir / "tiny.spec").string();
    write_file(spec,
               "# tiny protocol\n"
               "[experiment]\n"
               "u = 1\n"
               "n0 = 5\n"
               "t_max = 30\n"
               "reps = 4\n"
               "mode = single-event\n"
               "seed = 12\n"
               "\n"
               "[network]\n"
               "name = star\n"
               "kind = star\n"
               "n = 31\n"
               "\n"
               "[case]\n"
               "g = 0.4\n"
               "d = 0.4\n");
    const auto out_dir = (dir / "cmp_spec").string();
    const auto r = invoke({"compare", "--spec", spec, "--out-dir", out_dir});
    CHECK(r.code == 0);
    const std::string csv = read_file(out_dir + "/measures.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + one cell
    CHECK(csv.find("star,g0.4-d0.4,") != std::string::npos);
    CHECK(fs::exists(out_dir + "/radar.csv"));
    CHECK(fs::exists(out_dir + "/radar-g0.4-d0.4.svg"));
    CHECK(fs::exists(out_dir + "/report.json"));

    // --seed overrides the spec seed.
    const auto o1 = (dir / "cmp_seed1").string();
    const auto o2 = (dir / "cmp_seed2").string();
    REQUIRE(invoke({"compare", "--spec", spec, "--out-dir", o1, "--seed", "99"}).code == 0);
    REQUIRE(invoke({"compare", "--spec", spec, "--out-dir", o2, "--seed", "99"}).code == 0);
    CHECK(read_file(o1 + "/measures.csv") == read_file(o2 + "/measures.csv"));
    CHECK(read_file(o1 + "/measures.csv") != csv);
}

TEST_CASE("compare usage errors") {
    CHECK(invoke({"compare", "--out-dir", "/tmp/x"}).code == 1);  // neither spec nor default
    CHECK(invoke({"compare", "--default"}).code == 1);            // missing out-dir
    CHECK(invoke({"compare", "--spec", "/nonexistent.spec", "--out-dir", "/tmp/x"}).code == 2);
}

TEST_CASE("MIXSIM_SEED is the lowest-precedence seed source") {
    setenv("MIXSIM_SEED", "1234", 1);
    const auto env_run = invoke({"gen", "ws", "--n", "20", "--k", "4", "--p", "0.5"});
    const auto flag_run =
        invoke({"gen", "ws", "--n", "20", "--k", "4", "--p", "0.5", "--seed", "1234"});
    CHECK(env_run.out == flag_run.out);
    const auto other =
        invoke({"gen", "ws", "--n", "20", "--k", "4", "--p", "0.5", "--seed", "4321"});
    CHECK(env_run.out != other.out);
    unsetenv("MIXSIM_SEED");

    setenv("MIXSIM_SEED", "not-a-number", 1);
    CHECK(invoke({"gen", "ws", "--n", "20", "--k", "4", "--p", "0.5"}).code == 1);
    unsetenv("MIXSIM_SEED");
}

TEST_CASE("help exits zero") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"run", "--help"}).code == 0);
    CHECK(invoke({}).code == 1);  // a subcommand is required
}
