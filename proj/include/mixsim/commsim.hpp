#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixsim/graph.hpp"
#include "mixsim/rng.hpp"

namespace mixsim {

// Event semantics for one simulation step.
//
// SingleEvent (default): at most one send and one erase per step. With
// probability g_rate a sender is drawn uniformly from the vertices holding
// at least one unit, a receiver uniformly from the sender's neighbors, and
// the receiver gains a copy of the unit (the sender keeps its holding —
// communication shares information rather than moving it). Then with
// probability d_rate one uniformly drawn holder (eligibility re-evaluated
// after the send) loses a unit. Per-step total change is in {-u, 0, +u}.
//
// PerVertex: every vertex holding at least one unit at step start
// independently sends a copy to one uniform neighbor with probability
// g_rate and independently loses a unit with probability d_rate; all
// deltas are computed from the start-of-step snapshot and applied
// synchronously, with at most one decrement per holder.
enum class EventMode { SingleEvent, PerVertex };

struct SimConfig {
    double g_rate = 0.0;  // generation probability per step (or per holder)
    double d_rate = 0.0;  // disappearance probability per step (or per holder)
    std::uint64_t unit = 1;
    std::uint32_t n0 = 0;     // initially informed vertex count
    std::uint32_t t_max = 0;  // step count
    EventMode mode = EventMode::SingleEvent;
    std::uint64_t seed = 0;

    // Throws std::invalid_argument when rates leave [0,1], unit is zero,
    // or n0 exceeds the vertex count.
    void validate(const Graph& g) const;
};

// Per-vertex holdings, always multiples of the configured unit.
using InfoState = std::vector<std::uint64_t>;

// states[t] for t = 0..t_max.
using InfoSeries = std::vector<InfoState>;

// Audit record for one step. In SingleEvent mode there is exactly one entry
// per step; in PerVertex mode one entry per elementary event.
struct SimEvent {
    std::uint32_t step = 0;
    bool send_attempted = false;  // generation coin fired and a holder existed
    bool send_delivered = false;  // false with send_attempted set = isolated sender no-op
    std::optional<VertexId> sender;
    std::optional<VertexId> receiver;
    std::optional<VertexId> erased;
};

using EventLog = std::vector<SimEvent>;

// Exactly n0 distinct vertices drawn uniformly without replacement start
// with one unit each; everyone else starts at zero.
InfoState init_state(const Graph& g, const SimConfig& cfg, Rng& rng);

// One transition under cfg.mode. The RNG draw order is fixed and documented
// by the implementation, so a given (state, rng state) pair always produces
// the same successor.
InfoState step(const Graph& g, const InfoState& state, const SimConfig& cfg, Rng& rng,
               EventLog* log = nullptr, std::uint32_t step_index = 0);

// Full trajectory: t_max+1 states, determined entirely by (g, cfg).
InfoSeries run(const Graph& g, const SimConfig& cfg, EventLog* log = nullptr);

// CSV exports. Event log columns: step,event,sender,receiver,erased with one
// line per SimEvent; event is none/send/send-noop/erase/send+erase/
// send-noop+erase. Series columns: step,q_0..q_{n-1}.
std::string event_log_csv(const EventLog& log);
std::string info_series_csv(const InfoSeries& series);

} // namespace mixsim
