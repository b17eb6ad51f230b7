#pragma once

#include "lattice.hpp"

namespace digitopo {

// A path of length N is N+1 points, consecutive ones adjacent. A loop is a path
// that starts and ends at the basepoint of its image.
struct LatticePath {
    std::vector<Point> steps;

    LatticePath() = default;
    explicit LatticePath(std::vector<Point> s) : steps(std::move(s)) {}

    std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
    const Point& operator[](std::size_t i) const { return steps[i]; }
    const Point& front() const { return steps.front(); }
    const Point& back() const { return steps.back(); }
    bool operator==(const LatticePath& o) const { return steps == o.steps; }
};

using LatticeLoop = LatticePath;

// Indices i where steps i and i+1 fail to be adjacent, or where a step leaves X.
inline std::vector<std::string> path_problems(const DigitalImage& X, const LatticePath& a) {
    std::vector<std::string> out;
    if (a.steps.empty()) out.push_back("empty path");
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        if (a.steps[i].size() != X.dim()) {
            out.push_back("step " + std::to_string(i) + " has the wrong dimension");
            continue;
        }
        if (!X.contains(a.steps[i])) out.push_back("step " + std::to_string(i) + " (" + to_string(a.steps[i]) + ") not in image");
        if (i + 1 < a.steps.size() && a.steps[i + 1].size() == X.dim() && !adjacent(a.steps[i], a.steps[i + 1]))
            out.push_back("steps " + std::to_string(i) + " and " + std::to_string(i + 1) + " not adjacent");
    }
    return out;
}

inline bool is_path(const DigitalImage& X, const LatticePath& a) { return path_problems(X, a).empty(); }

inline bool is_loop(const DigitalImage& X, const LatticePath& a) {
    return X.based() && is_path(X, a) && a.front() == *X.basepoint() && a.back() == *X.basepoint();
}

inline void require_loop(const DigitalImage& X, const LatticePath& a) {
    auto probs = path_problems(X, a);
    if (!probs.empty()) throw Error(Error::Kind::precondition, "not a path: " + probs.front());
    if (!is_loop(X, a)) throw Error(Error::Kind::precondition, "path is not a loop at the basepoint");
}

// Juxtaposition: length M+N+1.
inline LatticePath concat(const LatticePath& a, const LatticePath& b) {
    if (!adjacent(a.back(), b.front()))
        throw Error(Error::Kind::precondition, "concat: end of the first path is not adjacent to the start of the second");
    LatticePath out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

// Shares the junction point: length M+N.
inline LatticePath short_concat(const LatticePath& a, const LatticePath& b) {
    if (a.back() != b.front())
        throw Error(Error::Kind::precondition, "short_concat: end of the first path differs from the start of the second");
    LatticePath out = a;
    out.steps.insert(out.steps.end(), b.steps.begin() + 1, b.steps.end());
    return out;
}

inline LatticePath reverse(const LatticePath& a) {
    LatticePath out = a;
    std::reverse(out.steps.begin(), out.steps.end());
    return out;
}

inline LatticePath constant_path(const Point& y, std::size_t n) { return LatticePath(std::vector<Point>(n + 1, y)); }

// a ∘ rho_k on I_{kN+k-1}.
inline LatticePath reparam(const LatticePath& a, int k) {
    if (k < 1) throw Error(Error::Kind::precondition, "reparam factor must be at least 1");
    LatticePath out;
    out.steps.reserve(a.steps.size() * static_cast<std::size_t>(k));
    for (const auto& p : a.steps)
        for (int i = 0; i < k; ++i) out.steps.push_back(p);
    return out;
}

inline LatticePath push(const DigitalMap& f, const LatticePath& a) {
    LatticePath out;
    out.steps.reserve(a.steps.size());
    for (const auto& p : a.steps) out.steps.push_back(f(p));
    return out;
}

// The n-fold juxtaposition of a loop with itself; n = 0 gives the one-point loop.
inline LatticePath power(const LatticePath& a, int n, const Point& base) {
    if (n == 0) return constant_path(base, 0);
    LatticePath unit = n > 0 ? a : reverse(a);
    LatticePath out = unit;
    for (int i = 1; i < std::abs(n); ++i) out = concat(out, unit);
    return out;
}

// Coordinate projections of a path in a product image.
inline std::pair<LatticePath, LatticePath> product_split(const LatticePath& a, std::size_t first_dim) {
    std::pair<LatticePath, LatticePath> out;
    for (const auto& p : a.steps) {
        if (p.size() < first_dim) throw Error(Error::Kind::dimension, "product_split: point too short");
        out.first.steps.push_back(split_head(p, first_dim));
        out.second.steps.push_back(split_tail(p, first_dim));
    }
    return out;
}

inline LatticePath product_join(const LatticePath& a, const LatticePath& b) {
    if (a.steps.size() != b.steps.size())
        throw Error(Error::Kind::precondition, "product_join: paths have different lengths");
    LatticePath out;
    for (std::size_t i = 0; i < a.steps.size(); ++i) out.steps.push_back(join_points(a.steps[i], b.steps[i]));
    return out;
}

}  // namespace digitopo
