#pragma once

#include <string>
#include <vector>

#include "mixsim/commsim.hpp"

namespace mixsim {

// Polar embedding of an information state: r is the Euclidean norm of Q(t),
// theta the angle between Q(t) and the all-ones vector. Non-negative
// holdings keep theta in [0, pi/2]; the zero state maps to (0, 0) by
// convention so exports stay total.
struct TrajectoryPoint {
    std::size_t t = 0;
    double r = 0.0;
    double theta = 0.0;
};

TrajectoryPoint polar_point(const InfoState& state);

// One point per state, index-ordered.
std::vector<TrajectoryPoint> trajectory(const InfoSeries& series);

// CSV with header "t,r,theta".
std::string trajectory_csv(const std::vector<TrajectoryPoint>& points);

// Deterministic SVG: polar axes (theta angular over [0, pi/2], r radial)
// with one polyline per trajectory, colored by index. Byte-identical output
// for identical input.
std::string trajectory_svg(const std::vector<std::vector<TrajectoryPoint>>& trajectories,
                           const std::vector<std::string>& labels);

} // namespace mixsim
