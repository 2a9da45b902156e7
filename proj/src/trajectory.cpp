#include "mixsim/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "mixsim/csv.hpp"
#include "mixsim/svg.hpp"

namespace mixsim {

TrajectoryPoint polar_point(const InfoState& state) {
    TrajectoryPoint pt;
    double sum = 0.0, sq = 0.0;
    for (const auto v : state) {
        const auto x = static_cast<double>(v);
        sum += x;
        sq += x * x;
    }
    pt.r = std::sqrt(sq);
    if (pt.r > 0.0) {
        // cos(theta) = (Q . 1) / (|Q| * |1|); clamp against rounding near
        // parallel vectors.
        const double c = sum / (std::sqrt(static_cast<double>(state.size())) * pt.r);
        pt.theta = std::acos(std::clamp(c, -1.0, 1.0));
    }
    return pt;
}

std::vector<TrajectoryPoint> trajectory(const InfoSeries& series) {
    std::vector<TrajectoryPoint> points(series.size());
    for (std::size_t t = 0; t < series.size(); ++t) {
        points[t] = polar_point(series[t]);
        points[t].t = t;
    }
    return points;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& points) {
    std::string out = "t,r,theta\n";
    for (const auto& pt : points) {
        out += std::to_string(pt.t);
        out += ',';
        out += format_sig(pt.r);
        out += ',';
        out += format_sig(pt.theta);
        out += '\n';
    }
    return out;
}

} // namespace mixsim
