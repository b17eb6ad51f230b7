#pragma once

#include "map_homotopy.hpp"

namespace digitopo {

// One step of x toward c.
inline Coord step_toward(Coord x, Coord c) {
    if (x < c) return x + 1;
    if (x > c) return x - 1;
    return x;
}

inline DigitalImage subset_where(const DigitalImage& X, const std::function<bool(const Point&)>& keep) {
    std::vector<Point> pts;
    for (const auto& p : X.points())
        if (keep(p)) pts.push_back(p);
    std::optional<Point> base;
    if (X.based() && keep(*X.basepoint())) base = X.basepoint();
    return DigitalImage(X.dim(), std::move(pts), base);
}

// Every point of U moves one step toward centre per stage, the second
// coordinate following the circle. With centre 0 the two halves disagree on
// (2,0) from t = 1 on, so building it throws Error::branch.
inline MapHomotopy stepwise_contraction(const DigitalImage& U, const DigitalImage& C, Coord centre, std::size_t height = 2) {
    MapHomotopy H{U, C, {}, true};
    for (std::size_t t = 0; t <= height; ++t) {
        std::vector<Point> stage;
        for (const auto& p : U.points()) {
            Coord x = p[0];
            for (std::size_t i = 0; i < t; ++i) x = step_toward(x, centre);
            stage.push_back(Piecewise("stepwise_contraction", p[0], static_cast<Coord>(t))
                                .when(p[1] >= 0, [&] { return Point{x, 2 - x}; })
                                .when(p[1] <= 0, [&] { return Point{x, x - 2}; })
                                .value());
        }
        H.stages.push_back(std::move(stage));
    }
    return H;
}

// H((x1,x2),t) = (m_t(x1), 2 - m_t(x1)) for x2 >= 0, (m_t(x1), m_t(x1) - 2) for
// x2 <= 0, where m_t clamps x1 into a window that shrinks one step per stage
// onto centre. Moving every point at once would break continuity across
// the diagonal of U x [0,height].
inline MapHomotopy centring_contraction(const DigitalImage& U, const DigitalImage& C, Coord centre, std::size_t height = 2) {
    MapHomotopy H{U, C, {}, true};
    Coord lo = centre, hi = centre;
    for (const auto& p : U.points()) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
    }
    for (std::size_t t = 0; t <= height; ++t) {
        const auto T = static_cast<Coord>(t);
        const Coord wlo = std::min(centre, lo + T), whi = std::max(centre, hi - T);
        std::vector<Point> stage;
        for (const auto& p : U.points()) {
            const Coord x = std::clamp(p[0], wlo, whi);
            stage.push_back(Piecewise("centring_contraction", p[0], T)
                                .when(p[1] >= 0, [&] { return Point{x, 2 - x}; })
                                .when(p[1] <= 0, [&] { return Point{x, x - 2}; })
                                .value());
        }
        H.stages.push_back(std::move(stage));
    }
    return H;
}

// All based continuous maps X -> Y, by exhaustive search over tables.
inline std::vector<DigitalMap> based_map_census(const DigitalImage& X, const DigitalImage& Y) {
    std::vector<DigitalMap> out;
    const Point& x0 = X.require_basepoint();
    const Point& y0 = Y.require_basepoint();
    std::vector<Point> vals(X.size());
    std::vector<bool> set(X.size(), false);
    const std::size_t b = X.require_index(x0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == X.size()) {
            out.emplace_back(X, Y, vals);
            return;
        }
        if (i == b) {
            vals[i] = y0;
            set[i] = true;
            bool ok = true;
            for (auto j : X.neighbours(i))
                if (set[j] && !adjacent(vals[j], y0)) ok = false;
            if (ok) rec(i + 1);
            set[i] = false;
            return;
        }
        for (const auto& y : Y.points()) {
            bool ok = true;
            for (auto j : X.neighbours(i))
                if (set[j] && !adjacent(vals[j], y)) ok = false;
            if (!ok) continue;
            vals[i] = y;
            set[i] = true;
            rec(i + 1);
            set[i] = false;
        }
    };
    rec(0);
    return out;
}

// Subdivision equivalence data for the two circles: f: S(D,2) -> C, g: C -> D,
// F = f, G = g' ∘ rho_2. Both homotopy witnesses have height zero.
inline SubdivisionEquivalence circle_equivalence(const DigitalImage& D, const DigitalImage& C, const DigitalMap& f,
                                                 const DigitalMap& g, const DigitalMap& gprime) {
    SubdivisionEquivalence e;
    e.X = D;
    e.Y = C;
    e.k = 2;
    e.l = 1;
    e.f = f;
    e.g = g;
    e.F = f;
    DigitalImage SC2 = subdivide(C, 2);
    e.G = compose(gprime, rho_map(SC2, C, 2));
    e.fG_id = MapWitness{1, 2, MapHomotopy{SC2, C, {rho_map(SC2, C, 2).values()}, true}};
    DigitalImage SD2 = subdivide(D, 2);
    e.gF_id = MapWitness{1, 2, MapHomotopy{SD2, D, {rho_map(SD2, D, 2).values()}, true}};
    return e;
}

}  // namespace digitopo
