#include "mixsim/msm.hpp"

#include <cmath>
#include <stdexcept>

#include "mixsim/csv.hpp"

namespace mixsim {

namespace {

void check_lengths(const InfoState& prev, const InfoState& next) {
    if (prev.size() != next.size()) throw std::invalid_argument("state length mismatch");
    if (prev.empty()) throw std::invalid_argument("empty state");
}

double total(const InfoState& q) {
    double sum = 0.0;
    for (const auto v : q) sum += static_cast<double>(v);
    return sum;
}

double squared_norm(const InfoState& q) {
    double sum = 0.0;
    for (const auto v : q) {
        const auto x = static_cast<double>(v);
        sum += x * x;
    }
    return sum;
}

double squared_diff(const InfoState& prev, const InfoState& next) {
    double sum = 0.0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        const double d = static_cast<double>(next[i]) - static_cast<double>(prev[i]);
        sum += d * d;
    }
    return sum;
}

} // namespace

double stat_I(const InfoState& prev, const InfoState& next, std::uint64_t unit) {
    check_lengths(prev, next);
    if (unit == 0) throw std::invalid_argument("unit must be positive");
    return std::abs(total(next) - total(prev)) /
           (static_cast<double>(prev.size()) * static_cast<double>(unit));
}

double stat_L(const InfoState& prev, const InfoState& next, std::uint64_t unit) {
    check_lengths(prev, next);
    if (unit == 0) throw std::invalid_argument("unit must be positive");
    return std::sqrt(squared_diff(prev, next)) /
           (std::sqrt(static_cast<double>(prev.size())) * static_cast<double>(unit));
}

std::optional<double> stat_LR(const InfoState& prev, const InfoState& next) {
    check_lengths(prev, next);
    const double denom = squared_norm(next);
    if (denom == 0.0) return std::nullopt;
    return std::sqrt(squared_diff(prev, next)) / std::sqrt(denom);
}

std::optional<double> stat_S(const InfoState& prev, const InfoState& next) {
    check_lengths(prev, next);
    const double np = squared_norm(prev);
    const double nn = squared_norm(next);
    if (np == 0.0 || nn == 0.0) return std::nullopt;
    // Identical vectors have cosine exactly 1; bypassing the division keeps
    // stagnant runs at variance 0 instead of accumulating rounding dust.
    if (prev == next) return 1.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < prev.size(); ++i) {
        dot += static_cast<double>(next[i]) * static_cast<double>(prev[i]);
    }
    return dot / (std::sqrt(nn) * std::sqrt(np));
}

StepSeries step_series(const InfoSeries& series, std::uint64_t unit) {
    if (series.size() < 2) throw std::invalid_argument("series needs at least two states");
    StepSeries stats(series.size() - 1);
    for (std::size_t t = 0; t + 1 < series.size(); ++t) {
        stats[t].I = stat_I(series[t], series[t + 1], unit);
        stats[t].L = stat_L(series[t], series[t + 1], unit);
        stats[t].L_R = stat_LR(series[t], series[t + 1]);
        stats[t].S = stat_S(series[t], series[t + 1]);
    }
    return stats;
}

namespace {

// Two-pass time mean and population variance over the defined entries, in
// step order. The two-pass form keeps the variance non-negative, which
// E[x^2]-mean^2 does not guarantee under rounding.
struct Moments {
    std::optional<double> mean, variance;
    std::size_t excluded = 0;
};

template <typename Extract>
Moments moments_of(const StepSeries& stats, Extract extract) {
    std::size_t count = 0;
    double sum = 0.0;
    for (const auto& s : stats) {
        if (const auto v = extract(s)) {
            sum += *v;
            ++count;
        }
    }
    Moments m;
    m.excluded = stats.size() - count;
    if (count == 0) return m;
    const double mean = sum / static_cast<double>(count);
    double sq = 0.0;
    for (const auto& s : stats) {
        if (const auto v = extract(s)) {
            const double d = *v - mean;
            sq += d * d;
        }
    }
    m.mean = mean;
    m.variance = sq / static_cast<double>(count);
    return m;
}

} // namespace

MeasureSet aggregate(const StepSeries& stats) {
    MeasureSet ms;
    const auto mi = moments_of(stats, [](const StepStats& s) { return std::optional<double>(s.I); });
    const auto ml = moments_of(stats, [](const StepStats& s) { return std::optional<double>(s.L); });
    const auto mr = moments_of(stats, [](const StepStats& s) { return s.L_R; });
    const auto msim = moments_of(stats, [](const StepStats& s) { return s.S; });
    ms.mu_I = mi.mean;
    ms.var_I = mi.variance;
    ms.mu_L = ml.mean;
    ms.var_L = ml.variance;
    ms.mu_LR = mr.mean;
    ms.var_LR = mr.variance;
    ms.mu_S = msim.mean;
    ms.var_S = msim.variance;
    if (ms.mu_S && ms.var_S) ms.m_mix = *ms.mu_S * *ms.var_S;
    ms.excluded_LR = static_cast<double>(mr.excluded);
    ms.excluded_S = static_cast<double>(msim.excluded);
    return ms;
}

const char* phase_name(Phase phase) {
    switch (phase) {
        case Phase::Mixism: return "Mixism";
        case Phase::Atomism: return "Atomism";
        case Phase::Mobism: return "Mobism";
        case Phase::Nihilism: return "Nihilism";
    }
    return "?";
}

PhaseResult classify_phase(const MeasureSet& ms, const PhaseScales& scales) {
    PhaseResult result;
    if (!ms.m_mix || !ms.m_atom() || !ms.m_mob()) {
        result.status = "classification refused: phase measures absent";
        return result;
    }
    const double mix = *ms.m_mix;
    const double atom = *ms.m_atom();
    const double mob = *ms.m_mob();
    if (mix < scales.epsilon && atom < scales.epsilon && mob < scales.epsilon) {
        result.phase = Phase::Nihilism;
        result.status = "ok";
        return result;
    }
    const double scores[3] = {mix / scales.r_mix, atom / scales.r_atom, mob / scales.r_mob};
    std::size_t best = 0;
    for (std::size_t i = 1; i < 3; ++i) {
        if (scores[i] > scores[best]) best = i;
    }
    result.phase = best == 0 ? Phase::Mixism : best == 1 ? Phase::Atomism : Phase::Mobism;
    result.status = "ok";
    return result;
}

const char* const kMeasureCsvHeader =
    "network,case,mu_I,var_I,mu_L,var_L,mu_LR,var_LR,mu_S,var_S,M_mix,M_atom,M_mob,"
    "excluded_LR,excluded_S";

const char* const kMeasureNames[9] = {"mu_I", "var_I", "mu_L",  "var_L", "mu_LR",
                                      "var_LR", "mu_S", "var_S", "M_mix"};

std::optional<double> measure_value(const MeasureSet& ms, std::size_t index) {
    switch (index) {
        case 0: return ms.mu_I;
        case 1: return ms.var_I;
        case 2: return ms.mu_L;
        case 3: return ms.var_L;
        case 4: return ms.mu_LR;
        case 5: return ms.var_LR;
        case 6: return ms.mu_S;
        case 7: return ms.var_S;
        case 8: return ms.m_mix;
    }
    throw std::out_of_range("measure index");
}

std::string measure_csv_row(const std::string& network, const std::string& case_label,
                            const MeasureSet& ms) {
    std::string row = network + "," + case_label;
    const std::optional<double> fields[] = {
        ms.mu_I, ms.var_I, ms.mu_L, ms.var_L, ms.mu_LR, ms.var_LR,
        ms.mu_S, ms.var_S, ms.m_mix, ms.m_atom(), ms.m_mob(),
        ms.excluded_LR, ms.excluded_S};
    for (const auto& f : fields) {
        row += ',';
        if (f) row += format_sig(*f);
    }
    return row;
}

} // namespace mixsim
