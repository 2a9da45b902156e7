#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mixsim/netgen.hpp"
#include "mixsim/trajectory.hpp"

using namespace mixsim;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("polar point basics") {
    const auto parallel = polar_point({1, 1, 1, 1});
    CHECK(parallel.r == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(parallel.theta == doctest::Approx(0.0).epsilon(1e-12));

    const auto one_hot = polar_point({1, 0, 0, 0});
    CHECK(one_hot.r == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(one_hot.theta == doctest::Approx(kPi / 3.0).epsilon(1e-12));

    const auto origin = polar_point({0, 0, 0});
    CHECK(origin.r == 0.0);
    CHECK(origin.theta == 0.0);
}

TEST_CASE("theta is scale invariant, r scales linearly") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng.below(12);
        InfoState q(n);
        for (auto& v : q) v = rng.below(9);
        InfoState scaled = q;
        const std::uint64_t c = 2 + rng.below(6);
        for (auto& v : scaled) v *= c;
        const auto a = polar_point(q);
        const auto b = polar_point(scaled);
        CHECK(b.r == doctest::Approx(static_cast<double>(c) * a.r).epsilon(1e-12));
        if (a.r > 0.0) CHECK(b.theta == doctest::Approx(a.theta).epsilon(1e-12));
    }
}

TEST_CASE("theta bound by exhaustive enumeration, holdings <= 2, n <= 8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const double bound = std::acos(1.0 / std::sqrt(static_cast<double>(n)));
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            InfoState q(n);
            std::size_t rest = code;
            for (std::size_t i = 0; i < n; ++i) {
                q[i] = rest % 3;
                rest /= 3;
            }
            const auto pt = polar_point(q);
            CHECK(pt.theta >= 0.0);
            CHECK(pt.theta <= kPi / 2.0);
            CHECK(pt.theta <= bound + 1e-12);
        }
    }
}

TEST_CASE("trajectory over a simulated series") {
    const Graph g = make_star(30);
    SimConfig cfg;
    cfg.g_rate = 0.5;
    cfg.d_rate = 0.4;
    cfg.n0 = 10;
    cfg.t_max = 100;
    cfg.seed = 14;
    const auto points = trajectory(run(g, cfg));
    REQUIRE(points.size() == 101);
    for (std::size_t t = 0; t < points.size(); ++t) {
        CHECK(points[t].t == t);
        CHECK(points[t].r >= 0.0);
        CHECK(points[t].theta >= 0.0);
        CHECK(points[t].theta <= kPi / 2.0);
    }

    // Constant series maps to identical points.
    const auto flat = trajectory(InfoSeries{{2, 1}, {2, 1}, {2, 1}});
    CHECK(flat[0].r == flat[2].r);
    CHECK(flat[0].theta == flat[2].theta);
}

TEST_CASE("pure erasure shrinks the radius to zero") {
    const Graph g = make_star(25);
    SimConfig cfg;
    cfg.g_rate = 0.0;
    cfg.d_rate = 1.0;
    cfg.n0 = 10;
    cfg.t_max = 20;
    cfg.seed = 5;
    const auto points = trajectory(run(g, cfg));
    for (std::size_t t = 0; t + 1 < points.size(); ++t) {
        CHECK(points[t + 1].r <= points[t].r);
    }
    CHECK(points.back().r == 0.0);
    CHECK(points.back().theta == 0.0);
}

TEST_CASE("csv and svg are deterministic") {
    const InfoSeries series = {{1, 0, 1, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}};
    const auto points = trajectory(series);
    const std::string csv = trajectory_csv(points);
    CHECK(csv.rfind("t,r,theta\n", 0) == 0);
    CHECK(csv == trajectory_csv(points));
    CHECK(csv.find("0,1.41421,") != std::string::npos);

    const std::string svg = trajectory_svg({points}, {"demo"});
    CHECK(svg == trajectory_svg({points}, {"demo"}));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("demo") != std::string::npos);
}
