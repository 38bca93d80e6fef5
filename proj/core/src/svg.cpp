#include "diogon/svg.hpp"

#include "diogon/ngon_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace diogon {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

}  // namespace

std::string render_svg(const DiophantineSet& set) {
    const auto& pts = set.points;
    if (pts.empty()) throw std::domain_error("render_svg: empty set");
    const std::size_t n = pts.size();

    std::vector<double> X(n), Y(n);
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        X[i] = pts[i].x().to_double();
        Y[i] = pts[i].y().to_double();
        if (i == 0 || X[i] < minx) minx = X[i];
        if (i == 0 || X[i] > maxx) maxx = X[i];
        if (i == 0 || Y[i] < miny) miny = Y[i];
        if (i == 0 || Y[i] > maxy) maxy = Y[i];
    }
    double span = std::max(maxx - minx, maxy - miny);
    if (span <= 0) span = 1.0;
    const double margin = 48.0;
    const double scale = 560.0 / span;
    const double width = (maxx - minx) * scale + 2 * margin;
    const double height = (maxy - miny) * scale + 2 * margin;
    // y grows upward in the plane, downward in SVG
    auto px = [&](std::size_t i) { return margin + (X[i] - minx) * scale; };
    auto py = [&](std::size_t i) { return margin + (maxy - Y[i]) * scale; };

    std::set<std::pair<std::size_t, std::size_t>> boundary;
    if (n == 2) {
        boundary.insert({0, 1});
    } else if (n >= 3) {
        auto poly = assemble_polygon(pts, pts[0], pts[1]);
        std::vector<std::size_t> order;
        for (const auto& p : poly)
            for (std::size_t i = 0; i < n; ++i)
                if (pts[i].x() == p.x() && pts[i].y() == p.y()) {
                    order.push_back(i);
                    break;
                }
        for (std::size_t t = 0; t < order.size(); ++t) {
            std::size_t i = order[t], j = order[(t + 1) % order.size()];
            boundary.insert({std::min(i, j), std::max(i, j)});
        }
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
       << fmt(height) << "\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\" fill=\"#ffffff\"/>\n";

    for (int pass = 0; pass < 2; ++pass)  // chords first, boundary on top
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                bool on_boundary = boundary.count({i, j}) != 0;
                if ((pass == 0) == on_boundary) continue;
                os << "  <line x1=\"" << fmt(px(i)) << "\" y1=\"" << fmt(py(i))
                   << "\" x2=\"" << fmt(px(j)) << "\" y2=\"" << fmt(py(j)) << "\" stroke=\""
                   << (on_boundary ? "#1f3b57" : "#b8c8d8") << "\" stroke-width=\""
                   << (on_boundary ? "2" : "1") << "\"/>\n";
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double mx = (px(i) + px(j)) / 2, my = (py(i) + py(j)) / 2;
            // nudge the label off the segment, perpendicular to it
            double dx = px(j) - px(i), dy = py(j) - py(i);
            double len = std::hypot(dx, dy);
            if (len > 0) {
                mx += -dy / len * 9.0;
                my += dx / len * 9.0;
            }
            os << "  <text x=\"" << fmt(mx) << "\" y=\"" << fmt(my)
               << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#444444\" "
                  "text-anchor=\"middle\">"
               << set.distance_matrix[i][j].str() << "</text>\n";
        }

    for (std::size_t i = 0; i < n; ++i) {
        os << "  <circle cx=\"" << fmt(px(i)) << "\" cy=\"" << fmt(py(i))
           << "\" r=\"4\" fill=\"#b03a2e\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
        os << "  <text x=\"" << fmt(px(i) + 7) << "\" y=\"" << fmt(py(i) - 7)
           << "\" font-family=\"monospace\" font-size=\"11\" fill=\"#b03a2e\">" << i
           << "</text>\n";
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace diogon
