#include "mixsim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "mixsim/errors.hpp"

namespace mixsim {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
    for (auto& [a, b] : edges_) {
        if (a == b) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        }
        if (a > b) std::swap(a, b);
        if (b >= vertex_count) {
            throw std::invalid_argument("edge endpoint " + std::to_string(b) +
                                        " out of range (n=" + std::to_string(vertex_count) + ")");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a >= vertex_count() || b >= vertex_count()) return false;
    const auto& nbrs = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a]
                                                                    : adjacency_[b];
    const VertexId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

Graph load_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    VertexId max_id = 0;
    bool any = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long long a = -1, b = -1;
        std::string rest;
        if (!(fields >> a >> b) || (fields >> rest) || a < 0 || b < 0) {
            throw ParseError(line_no, "expected two non-negative vertex ids, got '" + line + "'");
        }
        if (a == b) {
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        }
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        max_id = std::max({max_id, static_cast<VertexId>(a), static_cast<VertexId>(b)});
        any = true;
    }
    return Graph(any ? static_cast<std::size_t>(max_id) + 1 : 0, std::move(edges));
}

Graph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return load_edge_list(in);
}

std::string edge_list_text(const Graph& g) {
    std::string out;
    for (const auto& [a, b] : g.edges()) {
        out += std::to_string(a);
        out += ' ';
        out += std::to_string(b);
        out += '\n';
    }
    return out;
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    out << edge_list_text(g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace mixsim
