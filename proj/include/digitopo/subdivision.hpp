#pragma once

#include "lattice.hpp"

namespace digitopo {

// Where the basepoint of S(X,k) sits inside the block of x0.
// centre: the canonical choice (middle of the block, or the low corner of the
// middle clique for even k). block_origin: k*x0, the convention used for intervals.
enum class BasepointRule { centre, block_origin };

inline void require_factor(int k) {
    if (k < 1) throw Error(Error::Kind::precondition, "subdivision factor must be at least 1, got " + std::to_string(k));
}

inline Point rho_point(const Point& p, int k) {
    require_factor(k);
    Point out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = floor_div(p[i], k);
    return out;
}

inline std::vector<Point> block(const Point& x, int k) {
    require_factor(k);
    std::vector<Point> out;
    Point r(x.size(), 0);
    while (true) {
        Point q(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) q[i] = k * x[i] + r[i];
        out.push_back(std::move(q));
        std::size_t d = 0;
        for (; d < r.size(); ++d) {
            if (r[d] + 1 < k) {
                ++r[d];
                break;
            }
            r[d] = 0;
        }
        if (d == r.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Point block_centre(const Point& y, int k) {
    require_factor(k);
    Point out(y.size());
    Coord off = (k % 2 == 0) ? k / 2 - 1 : k / 2;
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = static_cast<Coord>(k) * y[i] + off;
    return out;
}

inline Point subdivided_basepoint(const Point& y, int k, BasepointRule rule) {
    if (rule == BasepointRule::centre) return block_centre(y, k);
    Point out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = static_cast<Coord>(k) * y[i];
    return out;
}

inline DigitalImage subdivide(const DigitalImage& X, int k, BasepointRule rule = BasepointRule::centre) {
    require_factor(k);
    std::vector<Point> pts;
    for (const auto& x : X.points())
        for (auto& q : block(x, k)) pts.push_back(std::move(q));
    std::optional<Point> base;
    if (X.based()) base = subdivided_basepoint(*X.basepoint(), k, rule);
    return DigitalImage(X.dim(), std::move(pts), std::move(base));
}

// Bookkeeping for one subdivision: the source, the factor and the subdivided image.
struct Subdivision {
    DigitalImage source;
    int factor = 1;
    DigitalImage image;
    BasepointRule rule = BasepointRule::centre;

    Subdivision(const DigitalImage& X, int k, BasepointRule r = BasepointRule::centre)
        : source(X), factor(k), image(subdivide(X, k, r)), rule(r) {}

    DigitalMap projection() const {
        return DigitalMap::from_function(image, source, [&](const Point& p) { return rho_point(p, factor); });
    }
};

// rho_k : SX -> X where SX is a subdivision of X by k (checked pointwise).
inline DigitalMap rho_map(const DigitalImage& SX, const DigitalImage& X, int k) {
    return DigitalMap::from_function(SX, X, [&](const Point& p) {
        Point q = rho_point(p, k);
        if (!X.contains(q))
            throw Error(Error::Kind::membership, "rho_" + std::to_string(k) + "(" + to_string(p) + ") leaves the target");
        return q;
    });
}

// Partial projection S(X,k) -> S(X,k-1) that merges the two middle residues.
inline Coord rho_c_coord(Coord v, int k) {
    if (k < 3) throw Error(Error::Kind::precondition, "partial projection needs k >= 3");
    Coord x = floor_div(v, k), j = floor_mod(v, k);
    Coord half = k / 2;
    return (k - 1) * x + (j <= half - 1 ? j : j - 1);
}

inline Point rho_c_point(const Point& p, int k) {
    Point out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = rho_c_coord(p[i], k);
    return out;
}

inline DigitalMap rho_c_map(const DigitalImage& X, int k, BasepointRule rule = BasepointRule::centre) {
    DigitalImage from = subdivide(X, k, rule);
    DigitalImage to = subdivide(X, k - 1, rule);
    return DigitalMap::from_function(from, to, [&](const Point& p) { return rho_c_point(p, k); });
}

}  // namespace digitopo
