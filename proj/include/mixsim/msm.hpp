#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixsim/commsim.hpp"

namespace mixsim {

// Change statistics for one transition Q(t) -> Q(t+1). L_R and S are
// undefined (not zero, not an error) when the relevant vector is zero.
struct StepStats {
    double I = 0.0;  // |total(t+1) - total(t)| / (n*u)
    double L = 0.0;  // ||Q(t+1) - Q(t)|| / (sqrt(n)*u)
    std::optional<double> L_R;  // ||Q(t+1) - Q(t)|| / ||Q(t+1)||
    std::optional<double> S;    // cos angle between Q(t+1) and Q(t)
};

using StepSeries = std::vector<StepStats>;

double stat_I(const InfoState& prev, const InfoState& next, std::uint64_t unit);
double stat_L(const InfoState& prev, const InfoState& next, std::uint64_t unit);
std::optional<double> stat_LR(const InfoState& prev, const InfoState& next);
std::optional<double> stat_S(const InfoState& prev, const InfoState& next);

// stats[t] from (states[t], states[t+1]); length = series length - 1.
StepSeries step_series(const InfoSeries& series, std::uint64_t unit);

// Time mean and population variance of each statistic over its defined
// steps, plus the composite and alias measures. A statistic with zero
// defined steps yields absent mean/variance rather than a fabricated zero.
struct MeasureSet {
    std::optional<double> mu_I, var_I;
    std::optional<double> mu_L, var_L;
    std::optional<double> mu_LR, var_LR;
    std::optional<double> mu_S, var_S;
    std::optional<double> m_mix;  // mu_S * var_S for a single run; mean of
                                  // per-repetition products for averaged sets
    // Undefined steps dropped from the L_R / S aggregates. Stored as doubles
    // so repetition averages share the type; integral for single runs.
    double excluded_LR = 0.0;
    double excluded_S = 0.0;

    std::optional<double> m_atom() const { return var_LR; }
    std::optional<double> m_mob() const { return mu_L; }
};

MeasureSet aggregate(const StepSeries& stats);

enum class Phase { Mixism, Atomism, Mobism, Nihilism };

const char* phase_name(Phase phase);

// Reference scales for the phase heuristic. The decision rule is a
// convenience classifier layered on top of the measures, not part of their
// definition: Nihilism when all three phase measures sit below epsilon,
// otherwise the largest of M_mix/r_mix, M_atom/r_atom, M_mob/r_mob wins
// (ties resolve in that order).
struct PhaseScales {
    double r_mix = 0.02;
    double r_atom = 0.1;
    double r_mob = 0.25;
    double epsilon = 1e-3;
};

struct PhaseResult {
    std::optional<Phase> phase;  // empty when classification was refused
    std::string status;          // reason when refused
};

PhaseResult classify_phase(const MeasureSet& ms, const PhaseScales& scales = {});

// Fixed MeasureSet CSV schema. Values use 6 significant digits; absent
// measures become empty fields.
extern const char* const kMeasureCsvHeader;
std::string measure_csv_row(const std::string& network, const std::string& case_label,
                            const MeasureSet& ms);

// The nine aggregate measure names in fixed order, matching radar axes.
extern const char* const kMeasureNames[9];
std::optional<double> measure_value(const MeasureSet& ms, std::size_t index);

} // namespace mixsim
