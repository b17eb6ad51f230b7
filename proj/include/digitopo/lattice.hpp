#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digitopo {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

class Error : public std::runtime_error {
public:
    enum class Kind { dimension, membership, precondition, continuity, parse, branch };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline std::string to_string(const Point& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

// Floor division, so that negative coordinates land in the right block.
inline Coord floor_div(Coord a, Coord b) {
    Coord q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Coord floor_mod(Coord a, Coord b) { return a - b * floor_div(a, b); }

inline void require_same_dim(const Point& p, const Point& q) {
    if (p.size() != q.size())
        throw Error(Error::Kind::dimension,
                    "dimension mismatch: (" + to_string(p) + ") vs (" + to_string(q) + ")");
}

// Product adjacency: every coordinate differs by at most one. Reflexive.
inline bool adjacent(const Point& p, const Point& q) {
    require_same_dim(p, q);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (std::llabs(p[i] - q[i]) > 1) return false;
    return true;
}

inline Point join_points(const Point& a, const Point& b) {
    Point out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

class DigitalImage {
public:
    DigitalImage() = default;

    DigitalImage(std::size_t dim, std::vector<Point> pts, std::optional<Point> basepoint = std::nullopt)
        : dim_(dim), pts_(std::move(pts)), base_(std::move(basepoint)) {
        for (const auto& p : pts_)
            if (p.size() != dim_)
                throw Error(Error::Kind::dimension,
                            "point (" + to_string(p) + ") has wrong dimension for a " +
                                std::to_string(dim_) + "-dimensional image");
        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
        for (std::size_t i = 0; i < pts_.size(); ++i) index_.emplace(pts_[i], i);
        if (base_ && !contains(*base_))
            throw Error(Error::Kind::membership, "basepoint (" + to_string(*base_) + ") not in image");
        build_adjacency();
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& point(std::size_t i) const { return pts_[i]; }
    bool contains(const Point& p) const { return index_.count(p) != 0; }

    std::optional<std::size_t> index_of(const Point& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require_index(const Point& p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw Error(Error::Kind::membership, "point (" + to_string(p) + ") not in image");
        return it->second;
    }

    bool based() const { return base_.has_value(); }
    const std::optional<Point>& basepoint() const { return base_; }

    const Point& require_basepoint() const {
        if (!base_) throw Error(Error::Kind::precondition, "image has no basepoint");
        return *base_;
    }

    DigitalImage with_basepoint(const Point& b) const { return DigitalImage(dim_, pts_, b); }

    // Sorted neighbour indices, excluding the point itself.
    const std::vector<std::size_t>& neighbours(std::size_t i) const { return adj_[i]; }

    bool same_points(const DigitalImage& o) const { return dim_ == o.dim_ && pts_ == o.pts_; }

    bool operator==(const DigitalImage& o) const { return same_points(o) && base_ == o.base_; }

private:
    void build_adjacency() {
        adj_.assign(pts_.size(), {});
        // Offsets in {-1,0,1}^n when that is cheap, pairwise comparison otherwise.
        std::size_t offsets = 1;
        for (std::size_t d = 0; d < dim_ && offsets <= pts_.size(); ++d) offsets *= 3;
        if (offsets <= pts_.size()) {
            for (std::size_t i = 0; i < pts_.size(); ++i) {
                for (std::size_t code = 0; code < offsets; ++code) {
                    Point q = pts_[i];
                    std::size_t c = code;
                    bool zero = true;
                    for (std::size_t d = 0; d < dim_; ++d) {
                        Coord off = static_cast<Coord>(c % 3) - 1;
                        c /= 3;
                        q[d] += off;
                        if (off) zero = false;
                    }
                    if (zero) continue;
                    auto it = index_.find(q);
                    if (it != index_.end()) adj_[i].push_back(it->second);
                }
                std::sort(adj_[i].begin(), adj_[i].end());
            }
        } else {
            for (std::size_t i = 0; i < pts_.size(); ++i)
                for (std::size_t j = i + 1; j < pts_.size(); ++j)
                    if (adjacent(pts_[i], pts_[j])) {
                        adj_[i].push_back(j);
                        adj_[j].push_back(i);
                    }
        }
    }

    std::size_t dim_ = 0;
    std::vector<Point> pts_;
    std::optional<Point> base_;
    std::map<Point, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adj_;
};

// I_N = [0, N] based at 0, or a general interval [lo, hi] with an explicit basepoint.
inline DigitalImage interval(Coord lo, Coord hi, Coord base) {
    if (hi < lo) throw Error(Error::Kind::precondition, "empty interval");
    std::vector<Point> pts;
    for (Coord x = lo; x <= hi; ++x) pts.push_back({x});
    return DigitalImage(1, std::move(pts), Point{base});
}

inline DigitalImage interval(Coord n) { return interval(0, n, 0); }

// Full lattice box [lo_i, hi_i] in every coordinate.
inline DigitalImage box(const Point& lo, const Point& hi, std::optional<Point> basepoint = std::nullopt) {
    require_same_dim(lo, hi);
    std::vector<Point> pts;
    Point cur = lo;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (hi[i] < lo[i]) throw Error(Error::Kind::precondition, "empty box");
    while (true) {
        pts.push_back(cur);
        std::size_t d = 0;
        for (; d < cur.size(); ++d) {
            if (cur[d] < hi[d]) {
                ++cur[d];
                break;
            }
            cur[d] = lo[d];
        }
        if (d == cur.size()) break;
    }
    return DigitalImage(lo.size(), std::move(pts), std::move(basepoint));
}

// Bounding box of an image's points, if the image fills it.
inline std::optional<std::pair<Point, Point>> as_full_box(const DigitalImage& X) {
    if (X.size() == 0) return std::nullopt;
    Point lo = X.point(0), hi = X.point(0);
    for (const auto& p : X.points())
        for (std::size_t d = 0; d < p.size(); ++d) {
            lo[d] = std::min(lo[d], p[d]);
            hi[d] = std::max(hi[d], p[d]);
        }
    std::size_t count = 1;
    for (std::size_t d = 0; d < lo.size(); ++d) count *= static_cast<std::size_t>(hi[d] - lo[d] + 1);
    if (count != X.size()) return std::nullopt;
    return std::make_pair(lo, hi);
}

inline DigitalImage product(const DigitalImage& X, const DigitalImage& Y) {
    std::vector<Point> pts;
    pts.reserve(X.size() * Y.size());
    for (const auto& x : X.points())
        for (const auto& y : Y.points()) pts.push_back(join_points(x, y));
    std::optional<Point> base;
    if (X.based() && Y.based()) base = join_points(*X.basepoint(), *Y.basepoint());
    return DigitalImage(X.dim() + Y.dim(), std::move(pts), std::move(base));
}

inline Point split_head(const Point& p, std::size_t n) { return Point(p.begin(), p.begin() + n); }
inline Point split_tail(const Point& p, std::size_t n) { return Point(p.begin() + n, p.end()); }

class DigitalMap {
public:
    DigitalMap() = default;

    // Table given as values aligned with domain.points().
    DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<Point> values)
        : dom_(std::move(domain)), cod_(std::move(codomain)), values_(std::move(values)) {
        if (values_.size() != dom_.size())
            throw Error(Error::Kind::precondition, "map table does not cover the domain");
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (!cod_.contains(values_[i]))
                throw Error(Error::Kind::membership, "f(" + to_string(dom_.point(i)) + ") = (" +
                                                         to_string(values_[i]) + ") is not in the codomain");
    }

    static DigitalMap from_table(DigitalImage domain, DigitalImage codomain, const std::map<Point, Point>& table) {
        std::vector<Point> values;
        for (const auto& x : domain.points()) {
            auto it = table.find(x);
            if (it == table.end())
                throw Error(Error::Kind::precondition, "map undefined at (" + to_string(x) + ")");
            values.push_back(it->second);
        }
        for (const auto& kv : table)
            if (!domain.contains(kv.first))
                throw Error(Error::Kind::membership, "map defined at (" + to_string(kv.first) + ") outside the domain");
        return DigitalMap(std::move(domain), std::move(codomain), std::move(values));
    }

    static DigitalMap from_function(DigitalImage domain, DigitalImage codomain,
                                    const std::function<Point(const Point&)>& fn) {
        std::vector<Point> values;
        values.reserve(domain.size());
        for (const auto& x : domain.points()) values.push_back(fn(x));
        return DigitalMap(std::move(domain), std::move(codomain), std::move(values));
    }

    const DigitalImage& domain() const { return dom_; }
    const DigitalImage& codomain() const { return cod_; }
    const std::vector<Point>& values() const { return values_; }

    const Point& operator()(const Point& x) const { return values_[dom_.require_index(x)]; }
    const Point& at_index(std::size_t i) const { return values_[i]; }

    bool operator==(const DigitalMap& o) const {
        return dom_.same_points(o.dom_) && cod_.same_points(o.cod_) && values_ == o.values_;
    }

private:
    DigitalImage dom_, cod_;
    std::vector<Point> values_;
};

inline DigitalMap identity_map(const DigitalImage& X) { return DigitalMap(X, X, X.points()); }

inline DigitalMap constant_map(const DigitalImage& X, const DigitalImage& Y, const Point& y) {
    return DigitalMap(X, Y, std::vector<Point>(X.size(), y));
}

inline DigitalMap inclusion_map(const DigitalImage& A, const DigitalImage& X) { return DigitalMap(A, X, A.points()); }

// Every adjacent pair x ~ x' whose images are not adjacent. Each unordered pair reported once.
inline std::vector<std::pair<Point, Point>> check_continuity(const DigitalMap& f) {
    std::vector<std::pair<Point, Point>> bad;
    const auto& X = f.domain();
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j : X.neighbours(i))
            if (j > i && !adjacent(f.at_index(i), f.at_index(j))) bad.emplace_back(X.point(i), X.point(j));
    return bad;
}

inline bool is_continuous(const DigitalMap& f) { return check_continuity(f).empty(); }

inline bool is_based(const DigitalMap& f) {
    return f.domain().based() && f.codomain().based() && f(*f.domain().basepoint()) == *f.codomain().basepoint();
}

// g ∘ f
inline DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
    if (!f.codomain().same_points(g.domain()))
        throw Error(Error::Kind::precondition, "compose: codomain of the inner map is not the domain of the outer map");
    std::vector<Point> values;
    values.reserve(f.domain().size());
    for (const auto& y : f.values()) values.push_back(g(y));
    return DigitalMap(f.domain(), g.codomain(), std::move(values));
}

inline bool is_isomorphism(const DigitalMap& f) {
    if (f.domain().size() != f.codomain().size() || !is_continuous(f)) return false;
    std::vector<Point> img = f.values();
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    std::map<Point, Point> inv;
    for (std::size_t i = 0; i < f.domain().size(); ++i) inv[f.at_index(i)] = f.domain().point(i);
    return is_continuous(DigitalMap::from_table(f.codomain(), f.domain(), inv));
}

inline DigitalMap product_map(const DigitalMap& f, const DigitalMap& g) {
    DigitalImage dom = product(f.domain(), g.domain());
    DigitalImage cod = product(f.codomain(), g.codomain());
    std::size_t n = f.domain().dim();
    return DigitalMap::from_function(dom, cod, [&](const Point& p) {
        return join_points(f(split_head(p, n)), g(split_tail(p, n)));
    });
}

inline DigitalMap restrict_map(const DigitalMap& f, const DigitalImage& A) {
    return DigitalMap::from_function(A, f.codomain(), [&](const Point& a) { return f(a); });
}

}  // namespace digitopo
