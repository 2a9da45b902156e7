// Timing comparison of the OpenMP kernels against their serial reference
// implementations: all-pairs BFS graph features and experiment repetitions.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mixsim/experiment.hpp"
#include "mixsim/graph_metrics.hpp"
#include "mixsim/netgen.hpp"

using namespace mixsim;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif

    {
        Rng rng(7);
        const Graph g = make_ws(2000, 8, 0.1, rng);
        GraphFeatures serial, parallel;
        const double ts = time_ms([&] { serial = graph_features_serial(g); });
        const double tp = time_ms([&] { parallel = graph_features(g); });
        const bool same = serial.diameter == parallel.diameter &&
                          serial.mean_distance == parallel.mean_distance &&
                          serial.mean_clustering == parallel.mean_clustering;
        std::printf("graph features  ws(2000,8,0.1)   serial %8.1f ms   openmp %8.1f ms   "
                    "speedup %.2fx   identical %s\n",
                    ts, tp, ts / tp, same ? "yes" : "NO");
    }

    {
        const Graph g = make_star(91);
        SimConfig cfg;
        cfg.g_rate = 0.4;
        cfg.d_rate = 0.3;
        cfg.n0 = 10;
        cfg.t_max = 100;
        RepetitionSet serial, parallel;
        const double ts = time_ms([&] { serial = run_repetitions(g, cfg, 400, 1, Exec::Serial); });
        const double tp =
            time_ms([&] { parallel = run_repetitions(g, cfg, 400, 1, Exec::Parallel); });
        const bool same = serial.averaged.mu_S == parallel.averaged.mu_S &&
                          serial.averaged.m_mix == parallel.averaged.m_mix;
        std::printf("repetitions     star(91) x 400   serial %8.1f ms   openmp %8.1f ms   "
                    "speedup %.2fx   identical %s\n",
                    ts, tp, ts / tp, same ? "yes" : "NO");
    }
    return 0;
}
