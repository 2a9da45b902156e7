#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "mixsim/graph.hpp"

namespace mixsim {

struct GraphFeatures {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    // Hop diameter and mean shortest-path length over unordered distinct
    // pairs; empty when the graph is disconnected (or has no vertices).
    std::optional<std::size_t> diameter;
    std::optional<double> mean_distance;
    double density = 0.0;         // edge_count / (n*(n-1)/2)
    double mean_clustering = 0.0; // degree-<2 vertices contribute 0
};

// Degree value -> vertex count.
using DegreeHistogram = std::map<std::size_t, std::size_t>;

// All-pairs BFS features. graph_features runs the BFS sweep and the local
// clustering pass with OpenMP; graph_features_serial is the plain loop kept
// as the reference kernel. Both produce bit-identical results: per-vertex
// partials are stored by index and combined serially.
GraphFeatures graph_features(const Graph& g);
GraphFeatures graph_features_serial(const Graph& g);

DegreeHistogram degree_histogram(const Graph& g);

} // namespace mixsim
