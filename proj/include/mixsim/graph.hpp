#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mixsim {

using VertexId = std::uint32_t;

// Unordered vertex pair, normalized so first < second.
using Edge = std::pair<VertexId, VertexId>;

// Undirected simple graph with dense vertex ids 0..n-1. Immutable after
// construction. The constructor normalizes edge order and rejects
// self-loops, duplicate edges and out-of-range ids.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges in lexicographic order, each with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    // Neighbor ids of v in ascending order.
    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }

    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

    bool has_edge(VertexId a, VertexId b) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

// Edge-list text format: one edge per line as two whitespace-separated
// decimal ids, '#' starts a comment line, blank lines ignored. The vertex
// count is 1 + the largest id mentioned. Throws ParseError on malformed
// lines, std::invalid_argument on self-loops or duplicate edges.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::string& text);
Graph load_edge_list_file(const std::string& path);

// Canonical emission: edges sorted lexicographically, "a b\n" per line.
std::string edge_list_text(const Graph& g);
void save_edge_list(const Graph& g, const std::string& path);

} // namespace mixsim
