#include "mixsim/svg.hpp"

#include <cmath>

#include "mixsim/csv.hpp"
#include "mixsim/msm.hpp"
#include "mixsim/trajectory.hpp"

namespace mixsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

const std::string kPalette[] = {"#d62728", "#ff7f0e", "#2ca02c", "#1f77b4",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string coord(double v) { return format_fixed(v, 2); }

} // namespace

const std::string& series_color(std::size_t index) {
    return kPalette[index % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

std::string trajectory_svg(const std::vector<std::vector<TrajectoryPoint>>& trajectories,
                           const std::vector<std::string>& labels) {
    // Quarter-plane polar layout: origin bottom-left, theta=0 along the
    // horizontal axis, theta=pi/2 vertical.
    const double size = 640.0, margin = 60.0;
    const double ox = margin, oy = size - margin;
    const double span = size - 2.0 * margin;

    double r_max = 1.0;
    for (const auto& traj : trajectories) {
        for (const auto& pt : traj) r_max = std::max(r_max, pt.r);
    }

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
        "viewBox=\"0 0 640 640\">\n"
        "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    // Axes and radial grid arcs at quarter fractions of r_max.
    svg += "<line x1=\"" + coord(ox) + "\" y1=\"" + coord(oy) + "\" x2=\"" +
           coord(ox + span) + "\" y2=\"" + coord(oy) + "\" stroke=\"#888\"/>\n";
    svg += "<line x1=\"" + coord(ox) + "\" y1=\"" + coord(oy) + "\" x2=\"" + coord(ox) +
           "\" y2=\"" + coord(oy - span) + "\" stroke=\"#888\"/>\n";
    for (int i = 1; i <= 4; ++i) {
        const double rr = span * i / 4.0;
        svg += "<path d=\"M " + coord(ox + rr) + " " + coord(oy) + " A " + coord(rr) + " " +
               coord(rr) + " 0 0 0 " + coord(ox) + " " + coord(oy - rr) +
               "\" fill=\"none\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + coord(ox + rr + 2) + "\" y=\"" + coord(oy + 16) +
               "\" font-size=\"11\" fill=\"#555\">" + format_sig(r_max * i / 4.0, 3) +
               "</text>\n";
    }
    for (std::size_t s = 0; s < trajectories.size(); ++s) {
        const auto& traj = trajectories[s];
        if (traj.empty()) continue;
        std::string points;
        for (const auto& pt : traj) {
            const double rr = span * pt.r / r_max;
            points += coord(ox + rr * std::cos(pt.theta)) + "," +
                      coord(oy - rr * std::sin(pt.theta)) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + series_color(s) +
               "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        if (s < labels.size()) {
            const double ly = 24.0 + 18.0 * static_cast<double>(s);
            svg += "<rect x=\"500\" y=\"" + coord(ly - 10) +
                   "\" width=\"12\" height=\"12\" fill=\"" + series_color(s) + "\"/>\n";
            svg += "<text x=\"518\" y=\"" + coord(ly) + "\" font-size=\"12\">" + labels[s] +
                   "</text>\n";
        }
    }
    svg += "<text x=\"" + coord(ox + span + 6) + "\" y=\"" + coord(oy + 4) +
           "\" font-size=\"12\">theta=0</text>\n";
    svg += "<text x=\"" + coord(ox - 12) + "\" y=\"" + coord(oy - span - 8) +
           "\" font-size=\"12\">theta=pi/2</text>\n";
    svg += "</svg>\n";
    return svg;
}

std::string radar_svg(const std::vector<std::string>& row_labels,
                      const std::vector<std::array<std::optional<double>, 9>>& rows,
                      const std::string& title) {
    const double cx = 320.0, cy = 330.0, radius = 225.0;
    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"660\" "
        "viewBox=\"0 0 640 660\">\n"
        "<rect width=\"640\" height=\"660\" fill=\"white\"/>\n";
    svg += "<text x=\"320\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">" + title +
           "</text>\n";

    auto axis_point = [&](std::size_t axis, double value) {
        const double angle = kPi / 2.0 - 2.0 * kPi * static_cast<double>(axis) / 9.0;
        return std::make_pair(cx + radius * value * std::cos(angle),
                              cy - radius * value * std::sin(angle));
    };

    // Grid rings and axes.
    for (int ring = 1; ring <= 4; ++ring) {
        std::string points;
        for (std::size_t a = 0; a < 9; ++a) {
            const auto [x, y] = axis_point(a, ring / 4.0);
            points += coord(x) + "," + coord(y) + " ";
        }
        svg += "<polygon fill=\"none\" stroke=\"#ddd\" points=\"" + points + "\"/>\n";
    }
    for (std::size_t a = 0; a < 9; ++a) {
        const auto [x, y] = axis_point(a, 1.0);
        svg += "<line x1=\"" + coord(cx) + "\" y1=\"" + coord(cy) + "\" x2=\"" + coord(x) +
               "\" y2=\"" + coord(y) + "\" stroke=\"#bbb\"/>\n";
        const auto [lx, ly] = axis_point(a, 1.12);
        svg += "<text x=\"" + coord(lx) + "\" y=\"" + coord(ly) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + kMeasureNames[a] + "</text>\n";
    }

    for (std::size_t s = 0; s < rows.size(); ++s) {
        std::string points;
        bool complete = true;
        for (std::size_t a = 0; a < 9; ++a) {
            if (!rows[s][a]) {
                complete = false;
                continue;
            }
            const auto [x, y] = axis_point(a, *rows[s][a]);
            points += coord(x) + "," + coord(y) + " ";
        }
        if (points.empty()) continue;
        // Absent axes leave a gap: fall back to an open polyline.
        const std::string tag = complete ? "polygon" : "polyline";
        svg += "<" + tag + " fill=\"" + series_color(s) + "\" fill-opacity=\"0.08\" stroke=\"" +
               series_color(s) + "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        const double ly = 640.0 - 14.0 * static_cast<double>(rows.size() - s);
        svg += "<rect x=\"16\" y=\"" + coord(ly - 9) + "\" width=\"10\" height=\"10\" fill=\"" +
               series_color(s) + "\"/>\n";
        svg += "<text x=\"32\" y=\"" + coord(ly) + "\" font-size=\"12\">" +
               (s < row_labels.size() ? row_labels[s] : "") + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace mixsim
