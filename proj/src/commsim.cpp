#include "mixsim/commsim.hpp"

#include <stdexcept>

namespace mixsim {

void SimConfig::validate(const Graph& g) const {
    if (g_rate < 0.0 || g_rate > 1.0) throw std::invalid_argument("g_rate outside [0,1]");
    if (d_rate < 0.0 || d_rate > 1.0) throw std::invalid_argument("d_rate outside [0,1]");
    if (unit == 0) throw std::invalid_argument("unit must be positive");
    if (n0 > g.vertex_count()) {
        throw std::invalid_argument("n0 exceeds vertex count (" + std::to_string(n0) + " > " +
                                    std::to_string(g.vertex_count()) + ")");
    }
}

InfoState init_state(const Graph& g, const SimConfig& cfg, Rng& rng) {
    cfg.validate(g);
    const std::size_t n = g.vertex_count();
    InfoState q(n, 0);
    // Partial Fisher-Yates: the first n0 entries of a shuffled id vector.
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
    for (std::uint32_t i = 0; i < cfg.n0; ++i) {
        const std::size_t j = i + rng.below(n - i);
        std::swap(ids[i], ids[j]);
        q[ids[i]] = cfg.unit;
    }
    return q;
}

namespace {

void collect_holders(const InfoState& q, std::uint64_t unit, std::vector<VertexId>& holders) {
    holders.clear();
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] >= unit) holders.push_back(static_cast<VertexId>(i));
    }
}

// Draw order: generation coin; on success sender index then neighbor index;
// then disappearance coin; on success holder index. Coins are drawn even
// when no holder exists, so the stream position per step is predictable.
InfoState step_single_event(const Graph& g, const InfoState& state, const SimConfig& cfg,
                            Rng& rng, EventLog* log, std::uint32_t step_index) {
    InfoState next = state;
    SimEvent ev;
    ev.step = step_index;
    std::vector<VertexId> holders;

    if (rng.bernoulli(cfg.g_rate)) {
        collect_holders(next, cfg.unit, holders);
        if (!holders.empty()) {
            const VertexId sender = holders[rng.below(holders.size())];
            ev.send_attempted = true;
            ev.sender = sender;
            const auto& nbrs = g.neighbors(sender);
            if (!nbrs.empty()) {
                const VertexId receiver = nbrs[rng.below(nbrs.size())];
                next[receiver] += cfg.unit;
                ev.send_delivered = true;
                ev.receiver = receiver;
            }
        }
    }
    if (rng.bernoulli(cfg.d_rate)) {
        collect_holders(next, cfg.unit, holders);  // eligibility after the send
        if (!holders.empty()) {
            const VertexId target = holders[rng.below(holders.size())];
            next[target] -= cfg.unit;
            ev.erased = target;
        }
    }
    if (log) log->push_back(ev);
    return next;
}

// Holders are visited in ascending vertex order; per holder the draw order
// is send coin, neighbor index, erase coin.
InfoState step_per_vertex(const Graph& g, const InfoState& state, const SimConfig& cfg,
                          Rng& rng, EventLog* log, std::uint32_t step_index) {
    const std::size_t n = state.size();
    std::vector<std::uint64_t> incoming(n, 0);
    std::vector<bool> losing(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (state[i] < cfg.unit) continue;
        const auto v = static_cast<VertexId>(i);
        if (rng.bernoulli(cfg.g_rate)) {
            SimEvent ev;
            ev.step = step_index;
            ev.send_attempted = true;
            ev.sender = v;
            const auto& nbrs = g.neighbors(v);
            if (!nbrs.empty()) {
                const VertexId receiver = nbrs[rng.below(nbrs.size())];
                incoming[receiver] += cfg.unit;
                ev.send_delivered = true;
                ev.receiver = receiver;
            }
            if (log) log->push_back(ev);
        }
        if (rng.bernoulli(cfg.d_rate)) {
            losing[i] = true;
            if (log) {
                SimEvent ev;
                ev.step = step_index;
                ev.erased = v;
                log->push_back(ev);
            }
        }
    }
    InfoState next(n);
    for (std::size_t i = 0; i < n; ++i) {
        next[i] = state[i] + incoming[i] - (losing[i] ? cfg.unit : 0);
    }
    return next;
}

} // namespace

InfoState step(const Graph& g, const InfoState& state, const SimConfig& cfg, Rng& rng,
               EventLog* log, std::uint32_t step_index) {
    if (state.size() != g.vertex_count()) {
        throw std::invalid_argument("state length does not match graph");
    }
    return cfg.mode == EventMode::SingleEvent
               ? step_single_event(g, state, cfg, rng, log, step_index)
               : step_per_vertex(g, state, cfg, rng, log, step_index);
}

InfoSeries run(const Graph& g, const SimConfig& cfg, EventLog* log) {
    cfg.validate(g);
    Rng rng(cfg.seed);
    InfoSeries series;
    series.reserve(cfg.t_max + 1);
    series.push_back(init_state(g, cfg, rng));
    for (std::uint32_t t = 0; t < cfg.t_max; ++t) {
        series.push_back(step(g, series.back(), cfg, rng, log, t));
    }
    return series;
}

namespace {

std::string event_label(const SimEvent& ev) {
    std::string label;
    if (ev.send_attempted) label = ev.send_delivered ? "send" : "send-noop";
    if (ev.erased) label += label.empty() ? "erase" : "+erase";
    return label.empty() ? "none" : label;
}

void append_opt(std::string& out, const std::optional<VertexId>& v) {
    out += ',';
    if (v) out += std::to_string(*v);
}

} // namespace

std::string event_log_csv(const EventLog& log) {
    std::string out = "step,event,sender,receiver,erased\n";
    for (const auto& ev : log) {
        out += std::to_string(ev.step);
        out += ',';
        out += event_label(ev);
        append_opt(out, ev.sender);
        append_opt(out, ev.receiver);
        append_opt(out, ev.erased);
        out += '\n';
    }
    return out;
}

std::string info_series_csv(const InfoSeries& series) {
    std::string out = "step";
    const std::size_t n = series.empty() ? 0 : series[0].size();
    for (std::size_t i = 0; i < n; ++i) out += ",q_" + std::to_string(i);
    out += '\n';
    for (std::size_t t = 0; t < series.size(); ++t) {
        out += std::to_string(t);
        for (const auto q : series[t]) {
            out += ',';
            out += std::to_string(q);
        }
        out += '\n';
    }
    return out;
}

} // namespace mixsim
