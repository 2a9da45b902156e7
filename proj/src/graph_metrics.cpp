#include "mixsim/graph_metrics.hpp"

#include <cstdint>
#include <vector>

namespace mixsim {

namespace {

struct BfsResult {
    std::uint64_t distance_sum = 0;  // over vertices reached from the source
    std::size_t eccentricity = 0;
    std::size_t reached = 0;
};

BfsResult bfs_from(const Graph& g, VertexId source, std::vector<std::int32_t>& dist,
                   std::vector<VertexId>& queue) {
    dist.assign(g.vertex_count(), -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    BfsResult r;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        const auto d = dist[v];
        r.distance_sum += static_cast<std::uint64_t>(d);
        r.eccentricity = std::max(r.eccentricity, static_cast<std::size_t>(d));
        ++r.reached;
        for (VertexId w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    return r;
}

double local_clustering(const Graph& g, VertexId v) {
    const auto& nbrs = g.neighbors(v);
    const std::size_t deg = nbrs.size();
    if (deg < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i + 1 < deg; ++i) {
        for (std::size_t j = i + 1; j < deg; ++j) {
            if (g.has_edge(nbrs[i], nbrs[j])) ++links;
        }
    }
    return 2.0 * static_cast<double>(links) / (static_cast<double>(deg) * static_cast<double>(deg - 1));
}

GraphFeatures compute_features(const Graph& g, bool parallel) {
    GraphFeatures f;
    const std::size_t n = g.vertex_count();
    f.vertex_count = n;
    f.edge_count = g.edge_count();
    const double pair_count = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    f.density = n > 1 ? static_cast<double>(f.edge_count) / pair_count : 0.0;
    if (n == 0) return f;

    std::vector<BfsResult> bfs(n);
    std::vector<double> clustering(n);

    if (parallel) {
        #pragma omp parallel
        {
            std::vector<std::int32_t> dist;
            std::vector<VertexId> queue;
            #pragma omp for schedule(dynamic, 16)
            for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
                bfs[v] = bfs_from(g, static_cast<VertexId>(v), dist, queue);
                clustering[v] = local_clustering(g, static_cast<VertexId>(v));
            }
        }
    } else {
        std::vector<std::int32_t> dist;
        std::vector<VertexId> queue;
        for (std::size_t v = 0; v < n; ++v) {
            bfs[v] = bfs_from(g, static_cast<VertexId>(v), dist, queue);
            clustering[v] = local_clustering(g, static_cast<VertexId>(v));
        }
    }

    // Serial combine in index order keeps the result independent of the
    // OpenMP schedule.
    bool connected = true;
    std::uint64_t total_distance = 0;
    std::size_t diameter = 0;
    double clustering_sum = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        connected = connected && bfs[v].reached == n;
        total_distance += bfs[v].distance_sum;
        diameter = std::max(diameter, bfs[v].eccentricity);
        clustering_sum += clustering[v];
    }
    f.mean_clustering = clustering_sum / static_cast<double>(n);
    if (connected && n > 1) {
        f.diameter = diameter;
        // total_distance counts each unordered pair twice.
        f.mean_distance = static_cast<double>(total_distance) / 2.0 / pair_count;
    } else if (connected && n == 1) {
        f.diameter = 0;
        f.mean_distance = 0.0;
    }
    return f;
}

} // namespace

GraphFeatures graph_features(const Graph& g) { return compute_features(g, true); }

GraphFeatures graph_features_serial(const Graph& g) { return compute_features(g, false); }

DegreeHistogram degree_histogram(const Graph& g) {
    DegreeHistogram hist;
    for (VertexId v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
    return hist;
}

} // namespace mixsim
