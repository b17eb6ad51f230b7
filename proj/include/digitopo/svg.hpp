#pragma once

#include "homotopy.hpp"

namespace digitopo::svg {

namespace detail {
inline std::pair<Coord, Coord> xy(const Point& p) {
    if (p.size() == 1) return {p[0], 0};
    if (p.size() == 2) return {p[0], p[1]};
    throw Error(Error::Kind::dimension, "rendering supports one or two coordinates");
}
}  // namespace detail

// Points as dots, adjacencies as segments, an optional path as a polyline.
inline std::string render_image(const DigitalImage& X, const std::optional<LatticePath>& path = std::nullopt) {
    const int cell = 40, margin = 30;
    Coord xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& p : X.points()) {
        auto [x, y] = detail::xy(p);
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    auto px = [&](Coord x) { return margin + (x - xmin) * cell; };
    auto py = [&](Coord y) { return margin + (ymax - y) * cell; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + (xmax - xmin) * cell << "\" height=\""
       << 2 * margin + (ymax - ymin) * cell << "\">\n";
    for (std::size_t i = 0; i < X.size(); ++i)
        for (auto j : X.neighbours(i))
            if (j > i) {
                auto [x1, y1] = detail::xy(X.point(i));
                auto [x2, y2] = detail::xy(X.point(j));
                os << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
                   << "\" stroke=\"#888\" stroke-width=\"2\"/>\n";
            }
    if (path && !path->steps.empty()) {
        os << "<polyline fill=\"none\" stroke=\"#c33\" stroke-width=\"3\" points=\"";
        for (std::size_t i = 0; i < path->steps.size(); ++i) {
            auto [x, y] = detail::xy(path->steps[i]);
            os << (i ? " " : "") << px(x) << "," << py(y);
        }
        os << "\"/>\n";
    }
    for (const auto& p : X.points()) {
        auto [x, y] = detail::xy(p);
        bool base = X.based() && *X.basepoint() == p;
        os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"6\" fill=\"" << (base ? "#36c" : "#222") << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// One square per cell, shaded by the rank of its value among the grid's distinct values.
inline std::string render_grid(const HomotopyGrid& G) {
    const int cell = 24, margin = 10;
    std::vector<Point> vals;
    for (const auto& r : G.rows) vals.insert(vals.end(), r.begin(), r.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::ostringstream os;
    const auto W = static_cast<int>(G.width() + 1), N = static_cast<int>(G.height() + 1);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + W * cell << "\" height=\"" << 2 * margin + N * cell
       << "\">\n";
    for (int t = 0; t < N; ++t)
        for (int s = 0; s < W; ++s) {
            const Point& v = G.at(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
            auto rank = std::lower_bound(vals.begin(), vals.end(), v) - vals.begin();
            int shade = vals.size() <= 1 ? 128 : static_cast<int>(40 + 180 * rank / static_cast<long>(vals.size() - 1));
            os << "<rect x=\"" << margin + s * cell << "\" y=\"" << margin + (N - 1 - t) * cell << "\" width=\"" << cell
               << "\" height=\"" << cell << "\" fill=\"rgb(" << shade << "," << shade << "," << shade << ")\"/>\n";
        }
    os << "</svg>\n";
    return os.str();
}

}  // namespace digitopo::svg
