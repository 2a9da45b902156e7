#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixsim/graph.hpp"
#include "mixsim/rng.hpp"

namespace mixsim {

// Size cap for the deterministic generators; keeps tree depth / hypercube
// dimension overflows from silently wrapping.
inline constexpr std::size_t kMaxVertices = std::size_t{1} << 22;

// Hub vertex 0 joined to every other vertex. n >= 2.
Graph make_star(std::size_t n);

// Complete branching-ary rooted tree of the given depth, vertices numbered
// level by level from the root. branching >= 1; throws if the vertex count
// would exceed kMaxVertices.
Graph make_tree(std::size_t branching, std::size_t depth);

// Copy of base with `count` extra edges drawn uniformly without replacement
// from the currently non-adjacent vertex pairs. base itself is unchanged.
Graph add_jumpers(const Graph& base, std::size_t count, Rng& rng);

// Watts-Strogatz small world: ring lattice of n vertices each joined to its
// k nearest neighbors, then every lattice edge independently rewired with
// probability p to a uniformly drawn non-self, non-duplicate endpoint
// (rewire is skipped when the near endpoint already has full degree).
// Preserves the edge count n*k/2 exactly. Requires n > k >= 2, k even,
// p in [0,1].
Graph make_ws(std::size_t n, std::size_t k, double p, Rng& rng);

// Barabasi-Albert preferential attachment: seed path on m+1 vertices, then
// each new vertex attaches m distinct edges sampled proportionally to
// degree. Edge count is m + m*(n-m-1). Requires n > m >= 1.
Graph make_ba(std::size_t n, std::size_t m, Rng& rng);

// dim-dimensional hypercube: 2^dim vertices, edges between ids differing in
// exactly one bit. dim <= 22.
Graph make_hypercube(std::size_t dim);

enum class NetworkKind { Star, Tree, Jumpers, Ws, Ba, Hypercube, EdgeList };

// A buildable network description: the unit shared by the experiment spec
// file, the CLI's inline graph sources and the built-in benchmark set.
struct NetworkSpec {
    std::string name;
    NetworkKind kind = NetworkKind::Star;
    std::size_t n = 0;
    std::size_t branching = 0;
    std::size_t depth = 0;
    std::size_t count = 0;  // jumper edges
    std::size_t k = 0;      // WS neighbor count
    double p = 0.0;         // WS rewiring probability
    std::size_t m = 0;      // BA edges per vertex
    std::size_t dim = 0;    // hypercube dimension
    std::string path;       // EdgeList source file
    std::optional<std::uint64_t> seed;  // construction seed for random kinds

    // Builds the graph; random kinds use `seed` when set, else fallback_seed.
    Graph build(std::uint64_t fallback_seed = 0) const;
};

// Parses an inline constructor string: "star:91", "tree:9,2",
// "jumpers:9,2,30", "ws:91,4,0.55", "ba:91,2", "hypercube:6". Anything
// without a recognized "kind:" prefix is treated as an edge-list path.
NetworkSpec parse_network_source(const std::string& text);

// The six benchmark topologies in fixed order: star(91), tree(9,2),
// tree+30 jumpers, tree+60 jumpers, WS(91,4,0.7), hypercube(6).
std::vector<NetworkSpec> default_networks();

} // namespace mixsim
