#pragma once

#include "path.hpp"
#include "subdivision.hpp"

namespace digitopo {

enum class GridKind { maps, based_loops, rel_endpoints };

inline const char* kind_name(GridKind k) {
    switch (k) {
        case GridKind::maps: return "of-maps";
        case GridKind::based_loops: return "of-based-loops";
        default: return "rel-endpoints";
    }
}

// H : I_M x I_N -> target, stored as rows[t][s].
struct HomotopyGrid {
    DigitalImage target;
    GridKind kind = GridKind::maps;
    std::vector<std::vector<Point>> rows;

    std::size_t width() const { return rows.empty() ? 0 : rows.front().size() - 1; }
    std::size_t height() const { return rows.empty() ? 0 : rows.size() - 1; }
    const Point& at(std::size_t s, std::size_t t) const { return rows[t][s]; }
    LatticePath row(std::size_t t) const { return LatticePath(rows[t]); }
    LatticePath bottom() const { return row(0); }
    LatticePath top() const { return row(height()); }

    LatticePath column(std::size_t s) const {
        LatticePath out;
        for (const auto& r : rows) out.steps.push_back(r[s]);
        return out;
    }

    bool operator==(const HomotopyGrid& o) const {
        return kind == o.kind && target == o.target && rows == o.rows;
    }
};

struct GridViolation {
    std::size_t s1, t1, s2, t2;
    std::string what;
};

struct GridReport {
    std::vector<GridViolation> violations;
    bool ok() const { return violations.empty(); }

    std::string summary() const {
        if (ok()) return "ok";
        const auto& v = violations.front();
        std::ostringstream os;
        os << violations.size() << " violation(s); first: " << v.what << " at (" << v.s1 << "," << v.t1 << ")";
        if (v.s1 != v.s2 || v.t1 != v.t2) os << "-(" << v.s2 << "," << v.t2 << ")";
        return os.str();
    }
};

// Joint continuity on I_M x I_N plus the edge conditions of the declared kind.
inline GridReport verify_grid(const HomotopyGrid& H) {
    GridReport rep;
    auto add = [&](std::size_t s1, std::size_t t1, std::size_t s2, std::size_t t2, std::string what) {
        rep.violations.push_back({s1, t1, s2, t2, std::move(what)});
    };
    if (H.rows.empty() || H.rows.front().empty()) {
        add(0, 0, 0, 0, "empty grid");
        return rep;
    }
    const std::size_t W = H.width(), N = H.height();
    for (std::size_t t = 0; t <= N; ++t) {
        if (H.rows[t].size() != W + 1) {
            add(0, t, 0, t, "ragged row");
            return rep;
        }
        for (std::size_t s = 0; s <= W; ++s) {
            const Point& p = H.at(s, t);
            if (p.size() != H.target.dim()) {
                add(s, t, s, t, "wrong dimension");
                return rep;
            }
            if (!H.target.contains(p)) add(s, t, s, t, "value (" + to_string(p) + ") not in target");
        }
    }
    for (std::size_t t = 0; t <= N; ++t)
        for (std::size_t s = 0; s <= W; ++s) {
            const Point& p = H.at(s, t);
            auto check = [&](std::size_t s2, std::size_t t2) {
                if (!adjacent(p, H.at(s2, t2)))
                    add(s, t, s2, t2, "(" + to_string(p) + ") not adjacent to (" + to_string(H.at(s2, t2)) + ")");
            };
            if (s < W) check(s + 1, t);
            if (t < N) check(s, t + 1);
            if (s < W && t < N) check(s + 1, t + 1);
            if (s > 0 && t < N) check(s - 1, t + 1);
        }
    if (H.kind == GridKind::based_loops) {
        if (!H.target.based()) {
            add(0, 0, 0, 0, "based-loop grid on an unbased target");
        } else {
            const Point& b = *H.target.basepoint();
            for (std::size_t t = 0; t <= N; ++t) {
                if (H.at(0, t) != b) add(0, t, 0, t, "left edge off the basepoint");
                if (H.at(W, t) != b) add(W, t, W, t, "right edge off the basepoint");
            }
        }
    } else if (H.kind == GridKind::rel_endpoints) {
        for (std::size_t t = 1; t <= N; ++t) {
            if (H.at(0, t) != H.at(0, 0)) add(0, 0, 0, t, "left endpoint moves");
            if (H.at(W, t) != H.at(W, 0)) add(W, 0, W, t, "right endpoint moves");
        }
    }
    return rep;
}

// Rows and columns are paths but diagonal cells are unchecked: the weaker
// condition satisfied by homotopies built in the graph product.
inline GridReport verify_grid_graph_product(const HomotopyGrid& H) {
    GridReport rep;
    for (std::size_t t = 0; t <= H.height(); ++t)
        for (std::size_t s = 0; s <= H.width(); ++s) {
            if (s < H.width() && !adjacent(H.at(s, t), H.at(s + 1, t))) rep.violations.push_back({s, t, s + 1, t, "row break"});
            if (t < H.height() && !adjacent(H.at(s, t), H.at(s, t + 1))) rep.violations.push_back({s, t, s, t + 1, "column break"});
        }
    return rep;
}

template <class F>
HomotopyGrid make_grid(const DigitalImage& target, GridKind kind, std::size_t W, std::size_t N, F&& cell) {
    HomotopyGrid H;
    H.target = target;
    H.kind = kind;
    H.rows.assign(N + 1, std::vector<Point>(W + 1));
    for (std::size_t t = 0; t <= N; ++t)
        for (std::size_t s = 0; s <= W; ++s) H.rows[t][s] = cell(static_cast<Coord>(s), static_cast<Coord>(t));
    return H;
}

inline HomotopyGrid grid_from_rows(const DigitalImage& target, GridKind kind, std::vector<LatticePath> rows) {
    HomotopyGrid H;
    H.target = target;
    H.kind = kind;
    for (auto& r : rows) H.rows.push_back(std::move(r.steps));
    return H;
}

// Evaluates a piecewise cell formula. Every branch whose range covers the cell
// must produce the same point.
class Piecewise {
public:
    Piecewise(const char* who, Coord s, Coord t) : who_(who), s_(s), t_(t) {}

    template <class F>
    Piecewise& when(bool covers, F&& value) {
        if (!covers) return *this;
        Point p = value();
        if (v_ && *v_ != p)
            throw Error(Error::Kind::branch, std::string(who_) + ": overlapping branches disagree at (" +
                                                 std::to_string(s_) + "," + std::to_string(t_) + ")");
        v_ = std::move(p);
        return *this;
    }

    Point value() const {
        if (!v_)
            throw Error(Error::Kind::branch, std::string(who_) + ": no branch covers (" + std::to_string(s_) + "," +
                                                 std::to_string(t_) + ")");
        return *v_;
    }

private:
    const char* who_;
    Coord s_, t_;
    std::optional<Point> v_;
};

inline GridKind path_kind(const DigitalImage& X, const LatticePath& a) {
    return is_loop(X, a) ? GridKind::based_loops : GridKind::rel_endpoints;
}

enum class Side { right, left };

// a ∘ rho_k  ≈  (a ∘ rho_{k-1}) · C_M  (right), or C_M · (a ∘ rho_{k-1}) (left).
inline HomotopyGrid reparam_homotopy(const DigitalImage& X, const LatticePath& a, int k, Side side = Side::right) {
    if (k < 2) throw Error(Error::Kind::precondition, "reparam_homotopy needs k >= 2");
    if (side == Side::left) {
        HomotopyGrid R = reparam_homotopy(X, reverse(a), k, Side::right);
        for (auto& r : R.rows) std::reverse(r.begin(), r.end());
        R.kind = path_kind(X, a);
        return R;
    }
    const Coord M = static_cast<Coord>(a.length());
    const Coord W = k * M + k - 1;
    const Point end = a.back();
    return make_grid(X, path_kind(X, a), static_cast<std::size_t>(W), static_cast<std::size_t>(M + 1),
                     [&](Coord s, Coord t) {
                         return Piecewise("reparam_homotopy", s, t)
                             .when(s <= t * (k - 1) - 1, [&] { return a[static_cast<std::size_t>(s / (k - 1))]; })
                             .when(t * (k - 1) <= s && s <= W - t, [&] { return a[static_cast<std::size_t>((s + t) / k)]; })
                             .when(s >= W - t + 1, [&] { return end; })
                             .value();
                     });
}

enum class InverseForm { dot, star };

// gamma·reverse(gamma) (dot) or gamma*reverse(gamma) (star) ≈ constant at gamma(0), rel endpoints.
inline HomotopyGrid inverse_homotopy(const DigitalImage& X, const LatticePath& g, InverseForm form = InverseForm::dot) {
    const Coord M = static_cast<Coord>(g.length());
    const Coord extra = form == InverseForm::dot ? 1 : 0;
    const Coord W = 2 * M + extra;
    auto at = [&](Coord i) { return g[static_cast<std::size_t>(i)]; };
    DigitalImage target = X;
    GridKind kind = GridKind::rel_endpoints;
    if (X.based() && *X.basepoint() == g.front()) kind = GridKind::based_loops;
    return make_grid(target, kind, static_cast<std::size_t>(W), static_cast<std::size_t>(M), [&](Coord s, Coord t) {
        return Piecewise("inverse_homotopy", s, t)
            .when(s <= M - t, [&] { return at(s); })
            .when(M - t <= s && s <= M + extra + t, [&] { return at(M - t); })
            .when(s >= M + extra + t, [&] { return at(W - s); })
            .value();
    });
}

enum class CubeMode { interval_0M, symmetric };

// Contraction of an interval to 0 as a homotopy of maps I_M -> interval.
inline HomotopyGrid cube_contraction(Coord M, CubeMode mode) {
    if (M < 0) throw Error(Error::Kind::precondition, "negative interval length");
    if (mode == CubeMode::interval_0M) {
        return make_grid(interval(M), GridKind::maps, static_cast<std::size_t>(M), static_cast<std::size_t>(M),
                         [&](Coord s, Coord t) {
                             return Piecewise("cube_contraction", s, t)
                                 .when(s <= M - t, [&] { return Point{s}; })
                                 .when(s >= M - t, [&] { return Point{M - t}; })
                                 .value();
                         });
    }
    return make_grid(interval(-M, M, 0), GridKind::maps, static_cast<std::size_t>(2 * M), static_cast<std::size_t>(M),
                     [&](Coord s, Coord t) {
                         Coord x = s - M;
                         return Piecewise("cube_contraction", s, t)
                             .when(x <= -M + t, [&] { return Point{-M + t}; })
                             .when(-M + t <= x && x <= M - t, [&] { return Point{x}; })
                             .when(x >= M - t, [&] { return Point{M - t}; })
                             .value();
                     });
}

// Repeats the top row until the grid has height T.
inline HomotopyGrid lengthen(const HomotopyGrid& H, std::size_t T) {
    if (T < H.height()) throw Error(Error::Kind::precondition, "lengthen cannot shorten a grid");
    HomotopyGrid out = H;
    while (out.height() < T) out.rows.push_back(H.rows.back());
    return out;
}

inline HomotopyGrid time_reverse(const HomotopyGrid& H) {
    HomotopyGrid out = H;
    std::reverse(out.rows.begin(), out.rows.end());
    return out;
}

// Columns of H followed by columns of G; the shorter one is lengthened first.
inline HomotopyGrid side_concat(const HomotopyGrid& H, const HomotopyGrid& G) {
    if (!H.target.same_points(G.target)) throw Error(Error::Kind::precondition, "side_concat: different targets");
    std::size_t T = std::max(H.height(), G.height());
    HomotopyGrid a = lengthen(H, T), b = lengthen(G, T);
    HomotopyGrid out = a;
    for (std::size_t t = 0; t <= T; ++t) out.rows[t].insert(out.rows[t].end(), b.rows[t].begin(), b.rows[t].end());
    if (H.kind == GridKind::based_loops && G.kind == GridKind::based_loops)
        out.kind = GridKind::based_loops;
    else if (H.kind == GridKind::maps || G.kind == GridKind::maps)
        out.kind = GridKind::maps;
    else
        out.kind = GridKind::rel_endpoints;
    return out;
}

// Grid constant in t along a path.
inline HomotopyGrid still(const DigitalImage& X, const LatticePath& a, std::size_t T) {
    return grid_from_rows(X, GridKind::rel_endpoints, std::vector<LatticePath>(T + 1, a));
}

// (left) · H · (right), the strips constant in t. This is how based loop
// homotopies at one basepoint are carried to another.
inline HomotopyGrid whisker(const LatticePath& left, const HomotopyGrid& H, const LatticePath& right) {
    for (std::size_t t = 0; t <= H.height(); ++t) {
        if (H.at(0, t) != left.back()) throw Error(Error::Kind::precondition, "whisker: left strip does not end on the grid edge");
        if (H.at(H.width(), t) != right.front())
            throw Error(Error::Kind::precondition, "whisker: right strip does not start on the grid edge");
    }
    HomotopyGrid mid = H;
    mid.kind = GridKind::rel_endpoints;
    HomotopyGrid out = side_concat(side_concat(still(H.target, left, H.height()), mid), still(H.target, right, H.height()));
    out.kind = GridKind::rel_endpoints;
    if (left.front() == right.back()) {
        out.target = H.target.with_basepoint(left.front());
        out.kind = GridKind::based_loops;
    }
    return out;
}

// gamma runs from the grid's basepoint to the new basepoint.
inline HomotopyGrid whisker_path(const LatticePath& gamma, const HomotopyGrid& H, int m) {
    return whisker(reparam(reverse(gamma), m), H, reparam(gamma, m));
}

// H then G, sharing H's top row with G's bottom row.
inline HomotopyGrid stack(const HomotopyGrid& H, const HomotopyGrid& G) {
    if (H.top() != G.bottom()) throw Error(Error::Kind::precondition, "stack: top row of the first grid is not the bottom row of the second");
    HomotopyGrid out = H;
    out.rows.insert(out.rows.end(), G.rows.begin() + 1, G.rows.end());
    if (H.kind != G.kind) out.kind = GridKind::maps;
    return out;
}

// H run backwards then G, for two grids leaving the same bottom row. The common
// row appears twice.
inline HomotopyGrid stack_reversed(const HomotopyGrid& H, const HomotopyGrid& G) {
    if (H.bottom() != G.bottom()) throw Error(Error::Kind::precondition, "stack_reversed: bottom rows differ");
    HomotopyGrid out = time_reverse(H);
    out.rows.insert(out.rows.end(), G.rows.begin(), G.rows.end());
    if (H.kind != G.kind) out.kind = GridKind::maps;
    return out;
}

inline HomotopyGrid push_homotopy(const DigitalMap& f, const HomotopyGrid& H) {
    HomotopyGrid out;
    out.target = f.codomain();
    out.kind = H.kind;
    for (const auto& r : H.rows) {
        std::vector<Point> row;
        for (const auto& p : r) row.push_back(f(p));
        out.rows.push_back(std::move(row));
    }
    if (H.kind == GridKind::based_loops && !is_based(f)) out.kind = GridKind::rel_endpoints;
    return out;
}

// new(s,t) = H(floor(s/k), t)
inline HomotopyGrid pull_reparam(const HomotopyGrid& H, int k) {
    if (k < 1) throw Error(Error::Kind::precondition, "pull_reparam factor must be at least 1");
    HomotopyGrid out = H;
    for (std::size_t t = 0; t <= H.height(); ++t) out.rows[t] = reparam(H.row(t), k).steps;
    return out;
}

inline HomotopyGrid product_grid(const HomotopyGrid& H, const HomotopyGrid& G) {
    if (H.width() != G.width() || H.height() != G.height())
        throw Error(Error::Kind::precondition, "product_grid: shapes differ");
    HomotopyGrid out;
    out.target = product(H.target, G.target);
    out.kind = (H.kind == G.kind) ? H.kind : GridKind::maps;
    for (std::size_t t = 0; t <= H.height(); ++t) out.rows.push_back(product_join(H.row(t), G.row(t)).steps);
    return out;
}

inline bool homotopy_step(const DigitalImage& X, const LatticeLoop& a, const LatticeLoop& b) {
    if (a.steps.size() != b.steps.size()) throw Error(Error::Kind::precondition, "homotopy_step: length mismatch");
    HomotopyGrid g = grid_from_rows(X, GridKind::based_loops, {a, b});
    return verify_grid(g).ok();
}

// Replayable certificate that left and right are subdivision-based homotopic.
struct EquivalenceWitness {
    DigitalImage target;
    LatticeLoop left, right;
    int left_factor = 1, right_factor = 1;
    std::vector<HomotopyGrid> grids;
};

inline std::vector<std::string> verify_witness(const EquivalenceWitness& w) {
    std::vector<std::string> out;
    if (!is_loop(w.target, w.left)) out.push_back("left is not a based loop");
    if (!is_loop(w.target, w.right)) out.push_back("right is not a based loop");
    if (w.left_factor < 1 || w.right_factor < 1) {
        out.push_back("factors must be positive");
        return out;
    }
    if (static_cast<std::size_t>(w.left_factor) * w.left.steps.size() !=
        static_cast<std::size_t>(w.right_factor) * w.right.steps.size())
        out.push_back("factors do not balance the loop lengths");
    LatticePath from = reparam(w.left, w.left_factor), to = reparam(w.right, w.right_factor);
    if (w.grids.empty()) {
        if (from != to) out.push_back("no grids and the reparametrized loops differ");
        return out;
    }
    if (w.grids.front().bottom() != from) out.push_back("first grid does not start at the reparametrized left loop");
    if (w.grids.back().top() != to) out.push_back("last grid does not end at the reparametrized right loop");
    for (std::size_t i = 0; i < w.grids.size(); ++i) {
        const auto& g = w.grids[i];
        if (g.kind != GridKind::based_loops) out.push_back("grid " + std::to_string(i) + " is not a based loop homotopy");
        if (!(g.target == w.target)) out.push_back("grid " + std::to_string(i) + " has a different target");
        auto rep = verify_grid(g);
        if (!rep.ok()) out.push_back("grid " + std::to_string(i) + ": " + rep.summary());
        if (i + 1 < w.grids.size() && g.top() != w.grids[i + 1].bottom())
            out.push_back("grids " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not share a row");
    }
    return out;
}

inline EquivalenceWitness trivial_witness(const DigitalImage& X, const LatticeLoop& a) {
    return EquivalenceWitness{X, a, a, 1, 1, {}};
}

// a ≈ m and m ≈ b give a ≈ b: both chains are stretched to a common
// reparametrization of m and laid end to end.
inline EquivalenceWitness compose_witness(const EquivalenceWitness& u, const EquivalenceWitness& v) {
    if (u.right != v.left) throw Error(Error::Kind::precondition, "compose_witness: middle loops differ");
    const int p = v.left_factor, l = u.right_factor;
    EquivalenceWitness out{u.target, u.left, v.right, u.left_factor * p, v.right_factor * l, {}};
    for (const auto& g : u.grids) out.grids.push_back(pull_reparam(g, p));
    for (const auto& g : v.grids) out.grids.push_back(pull_reparam(g, l));
    return out;
}

// Pushes every grid of a witness through a based map.
inline EquivalenceWitness push_witness(const DigitalMap& f, const EquivalenceWitness& w) {
    EquivalenceWitness out{f.codomain(), push(f, w.left), push(f, w.right), w.left_factor, w.right_factor, {}};
    for (const auto& g : w.grids) out.grids.push_back(push_homotopy(f, g));
    return out;
}

}  // namespace digitopo
