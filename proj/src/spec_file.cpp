#include "mixsim/spec_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mixsim/csv.hpp"
#include "mixsim/errors.hpp"

namespace mixsim {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_u64(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const auto x = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a non-negative integer, got '" + v + "'");
    }
}

double parse_f64(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + v + "'");
    }
}

NetworkKind parse_kind(const std::string& v, int line) {
    if (v == "star") return NetworkKind::Star;
    if (v == "tree") return NetworkKind::Tree;
    if (v == "jumpers") return NetworkKind::Jumpers;
    if (v == "ws") return NetworkKind::Ws;
    if (v == "ba") return NetworkKind::Ba;
    if (v == "hypercube") return NetworkKind::Hypercube;
    if (v == "edgelist") return NetworkKind::EdgeList;
    throw ParseError(line, "unknown network kind '" + v + "'");
}

const char* kind_name(NetworkKind kind) {
    switch (kind) {
        case NetworkKind::Star: return "star";
        case NetworkKind::Tree: return "tree";
        case NetworkKind::Jumpers: return "jumpers";
        case NetworkKind::Ws: return "ws";
        case NetworkKind::Ba: return "ba";
        case NetworkKind::Hypercube: return "hypercube";
        case NetworkKind::EdgeList: return "edgelist";
    }
    return "?";
}

} // namespace

ExperimentSpec parse_experiment_spec(std::istream& in) {
    ExperimentSpec spec;
    spec.reps = 1;

    enum class Section { None, Experiment, Network, Case };
    Section section = Section::None;
    NetworkSpec* net = nullptr;
    CaseSpec* cs = nullptr;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // Strip trailing comment, then whitespace.
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;

        if (text.front() == '[') {
            if (text == "[experiment]") {
                section = Section::Experiment;
            } else if (text == "[network]") {
                section = Section::Network;
                spec.networks.emplace_back();
                net = &spec.networks.back();
            } else if (text == "[case]") {
                section = Section::Case;
                spec.cases.emplace_back();
                cs = &spec.cases.back();
            } else {
                throw ParseError(line_no, "unknown section " + text);
            }
            continue;
        }

        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ParseError(line_no, "expected 'key = value', got '" + text + "'");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError(line_no, "expected 'key = value', got '" + text + "'");
        }

        switch (section) {
            case Section::None:
                throw ParseError(line_no, "key outside any section");
            case Section::Experiment:
                if (key == "u") spec.unit = parse_u64(value, line_no);
                else if (key == "n0") spec.n0 = static_cast<std::uint32_t>(parse_u64(value, line_no));
                else if (key == "t_max") spec.t_max = static_cast<std::uint32_t>(parse_u64(value, line_no));
                else if (key == "reps") spec.reps = static_cast<std::uint32_t>(parse_u64(value, line_no));
                else if (key == "seed") spec.master_seed = parse_u64(value, line_no);
                else if (key == "mode") {
                    if (value == "single-event") spec.mode = EventMode::SingleEvent;
                    else if (value == "per-vertex") spec.mode = EventMode::PerVertex;
                    else throw ParseError(line_no, "mode must be single-event or per-vertex");
                }
                else throw ParseError(line_no, "unknown experiment key '" + key + "'");
                break;
            case Section::Network:
                if (key == "name") net->name = value;
                else if (key == "kind") net->kind = parse_kind(value, line_no);
                else if (key == "n") net->n = parse_u64(value, line_no);
                else if (key == "branching") net->branching = parse_u64(value, line_no);
                else if (key == "depth") net->depth = parse_u64(value, line_no);
                else if (key == "count") net->count = parse_u64(value, line_no);
                else if (key == "k") net->k = parse_u64(value, line_no);
                else if (key == "p") net->p = parse_f64(value, line_no);
                else if (key == "m") net->m = parse_u64(value, line_no);
                else if (key == "dim") net->dim = parse_u64(value, line_no);
                else if (key == "path") net->path = value;
                else if (key == "seed") net->seed = parse_u64(value, line_no);
                else throw ParseError(line_no, "unknown network key '" + key + "'");
                break;
            case Section::Case:
                if (key == "g") cs->g_rate = parse_f64(value, line_no);
                else if (key == "d") cs->d_rate = parse_f64(value, line_no);
                else throw ParseError(line_no, "unknown case key '" + key + "'");
                break;
        }
    }

    for (std::size_t i = 0; i < spec.networks.size(); ++i) {
        if (spec.networks[i].name.empty()) {
            spec.networks[i].name = std::string(kind_name(spec.networks[i].kind)) + "-" +
                                    std::to_string(i);
        }
    }
    return spec;
}

ExperimentSpec parse_experiment_spec_text(const std::string& text) {
    std::istringstream in(text);
    return parse_experiment_spec(in);
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec: " + path);
    return parse_experiment_spec(in);
}

std::string experiment_spec_text(const ExperimentSpec& spec) {
    std::string out = "[experiment]\n";
    out += "u = " + std::to_string(spec.unit) + "\n";
    out += "n0 = " + std::to_string(spec.n0) + "\n";
    out += "t_max = " + std::to_string(spec.t_max) + "\n";
    out += "reps = " + std::to_string(spec.reps) + "\n";
    out += std::string("mode = ") +
           (spec.mode == EventMode::SingleEvent ? "single-event" : "per-vertex") + "\n";
    out += "seed = " + std::to_string(spec.master_seed) + "\n";
    for (const auto& net : spec.networks) {
        out += "\n[network]\n";
        out += "name = " + net.name + "\n";
        out += std::string("kind = ") + kind_name(net.kind) + "\n";
        switch (net.kind) {
            case NetworkKind::Star:
                out += "n = " + std::to_string(net.n) + "\n";
                break;
            case NetworkKind::Tree:
                out += "branching = " + std::to_string(net.branching) + "\n";
                out += "depth = " + std::to_string(net.depth) + "\n";
                break;
            case NetworkKind::Jumpers:
                out += "branching = " + std::to_string(net.branching) + "\n";
                out += "depth = " + std::to_string(net.depth) + "\n";
                out += "count = " + std::to_string(net.count) + "\n";
                break;
            case NetworkKind::Ws:
                out += "n = " + std::to_string(net.n) + "\n";
                out += "k = " + std::to_string(net.k) + "\n";
                out += "p = " + format_sig(net.p) + "\n";
                break;
            case NetworkKind::Ba:
                out += "n = " + std::to_string(net.n) + "\n";
                out += "m = " + std::to_string(net.m) + "\n";
                break;
            case NetworkKind::Hypercube:
                out += "dim = " + std::to_string(net.dim) + "\n";
                break;
            case NetworkKind::EdgeList:
                out += "path = " + net.path + "\n";
                break;
        }
        if (net.seed) out += "seed = " + std::to_string(*net.seed) + "\n";
    }
    for (const auto& cs : spec.cases) {
        out += "\n[case]\n";
        out += "g = " + format_sig(cs.g_rate) + "\n";
        out += "d = " + format_sig(cs.d_rate) + "\n";
    }
    return out;
}

} // namespace mixsim
