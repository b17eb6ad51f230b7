#pragma once

#include "homotopy.hpp"

namespace digitopo {

// H : X x I_N -> Y stored stage by stage; stages[t] is aligned with domain.points().
struct MapHomotopy {
    DigitalImage domain, codomain;
    std::vector<std::vector<Point>> stages;
    bool based = true;

    std::size_t height() const { return stages.empty() ? 0 : stages.size() - 1; }
    DigitalMap stage(std::size_t t) const { return DigitalMap(domain, codomain, stages[t]); }
    DigitalMap bottom() const { return stage(0); }
    DigitalMap top() const { return stage(height()); }
};

inline MapHomotopy map_homotopy_from_stages(const std::vector<DigitalMap>& maps, bool based = true) {
    if (maps.empty()) throw Error(Error::Kind::precondition, "map homotopy needs at least one stage");
    MapHomotopy H{maps.front().domain(), maps.front().codomain(), {}, based};
    for (const auto& m : maps) {
        if (!m.domain().same_points(H.domain)) throw Error(Error::Kind::precondition, "stages have different domains");
        H.stages.push_back(m.values());
    }
    return H;
}

inline std::vector<std::string> verify_map_homotopy(const MapHomotopy& H) {
    std::vector<std::string> out;
    const auto& X = H.domain;
    for (std::size_t t = 0; t < H.stages.size(); ++t) {
        if (H.stages[t].size() != X.size()) {
            out.push_back("stage " + std::to_string(t) + " does not cover the domain");
            return out;
        }
        for (const auto& y : H.stages[t])
            if (!H.codomain.contains(y)) out.push_back("stage " + std::to_string(t) + " leaves the codomain at (" + to_string(y) + ")");
    }
    if (!out.empty()) return out;
    auto bad = [&](std::size_t i, std::size_t t, std::size_t j, std::size_t t2) {
        out.push_back("H(" + to_string(X.point(i)) + "," + std::to_string(t) + ") not adjacent to H(" + to_string(X.point(j)) +
                      "," + std::to_string(t2) + ")");
    };
    for (std::size_t t = 0; t < H.stages.size(); ++t)
        for (std::size_t i = 0; i < X.size(); ++i) {
            const Point& p = H.stages[t][i];
            for (std::size_t j : X.neighbours(i)) {
                if (j > i && !adjacent(p, H.stages[t][j])) bad(i, t, j, t);
                if (t + 1 < H.stages.size() && !adjacent(p, H.stages[t + 1][j])) bad(i, t, j, t + 1);
            }
            if (t + 1 < H.stages.size() && !adjacent(p, H.stages[t + 1][i])) bad(i, t, i, t + 1);
        }
    if (H.based) {
        if (!X.based() || !H.codomain.based()) {
            out.push_back("based homotopy between unbased images");
        } else {
            std::size_t b = X.require_index(*X.basepoint());
            for (std::size_t t = 0; t < H.stages.size(); ++t)
                if (H.stages[t][b] != *H.codomain.basepoint())
                    out.push_back("stage " + std::to_string(t) + " moves the basepoint");
        }
    }
    return out;
}

// Composite H ∘ (a x id): a loop pushed through every stage.
inline HomotopyGrid loop_through(const MapHomotopy& H, const LatticePath& a) {
    HomotopyGrid G;
    G.target = H.codomain;
    G.kind = H.based ? GridKind::based_loops : GridKind::maps;
    for (std::size_t t = 0; t <= H.height(); ++t) {
        std::vector<Point> row;
        for (const auto& p : a.steps) row.push_back(H.stages[t][H.domain.require_index(p)]);
        G.rows.push_back(std::move(row));
    }
    return G;
}

// Coordinatewise clamp onto a shrinking window around the basepoint. Each
// window edge moves by one per stage, so the homotopy is jointly continuous.
inline MapHomotopy box_contraction(const DigitalImage& X) {
    auto bounds = as_full_box(X);
    if (!bounds) throw Error(Error::Kind::precondition, "box_contraction needs a full lattice box");
    const Point& b = X.require_basepoint();
    const Point& lo = bounds->first;
    const Point& hi = bounds->second;
    Coord T = 0;
    for (std::size_t d = 0; d < b.size(); ++d) T = std::max({T, b[d] - lo[d], hi[d] - b[d]});
    MapHomotopy H{X, X, {}, true};
    for (Coord t = 0; t <= T; ++t) {
        std::vector<Point> stage;
        for (const auto& p : X.points()) {
            Point q = p;
            for (std::size_t d = 0; d < q.size(); ++d) {
                Coord L = std::min(b[d], lo[d] + t), U = std::max(b[d], hi[d] - t);
                q[d] = std::clamp(q[d], L, U);
            }
            stage.push_back(std::move(q));
        }
        H.stages.push_back(std::move(stage));
    }
    return H;
}

// Subdivision-based homotopy f1 ∘ rho_a' ≈ f2 ∘ rho_b' on S(A, m), m = a·a' = b·b'.
struct MapWitness {
    int left_factor = 1, right_factor = 1;
    MapHomotopy homotopy;
};

// f1 : S(A,a) -> B and f2 : S(A,b) -> B.
inline std::vector<std::string> verify_map_witness(const DigitalImage& A, const DigitalMap& f1, int a, const DigitalMap& f2, int b,
                                                   const MapWitness& w, const std::string& label) {
    std::vector<std::string> out;
    const int m = a * w.left_factor;
    if (m != b * w.right_factor) {
        out.push_back(label + ": factors do not balance");
        return out;
    }
    DigitalImage S = subdivide(A, m);
    if (!w.homotopy.domain.same_points(S)) {
        out.push_back(label + ": homotopy domain is not S(A," + std::to_string(m) + ")");
        return out;
    }
    DigitalMap lhs = compose(f1, rho_map(S, f1.domain(), w.left_factor));
    DigitalMap rhs = compose(f2, rho_map(S, f2.domain(), w.right_factor));
    for (auto& p : verify_map_homotopy(w.homotopy)) out.push_back(label + ": " + p);
    if (w.homotopy.stages.empty()) return out;
    if (w.homotopy.stages.front() != lhs.values()) out.push_back(label + ": bottom stage is not the left map");
    if (w.homotopy.stages.back() != rhs.values()) out.push_back(label + ": top stage is not the right map");
    return out;
}

// f: S(X,k) -> Y, g: S(Y,l) -> X, F: S(X,kl) -> S(Y,l), G: S(Y,kl) -> S(X,k).
struct SubdivisionEquivalence {
    DigitalImage X, Y;
    int k = 1, l = 1;
    DigitalMap f, g, F, G;
    MapWitness fG_id, gF_id;
};

inline std::vector<std::string> verify_subdivision_equivalence(const SubdivisionEquivalence& e) {
    std::vector<std::string> out;
    const DigitalImage SXk = subdivide(e.X, e.k), SYl = subdivide(e.Y, e.l);
    const DigitalImage SXkl = subdivide(e.X, e.k * e.l), SYkl = subdivide(e.Y, e.k * e.l);
    auto shape = [&](const DigitalMap& m, const DigitalImage& d, const DigitalImage& c, const char* name) {
        if (!m.domain().same_points(d) || !m.codomain().same_points(c)) {
            out.push_back(std::string(name) + " has the wrong domain or codomain");
            return false;
        }
        for (const auto& pr : check_continuity(m))
            out.push_back(std::string(name) + " is not continuous at (" + to_string(pr.first) + ")-(" + to_string(pr.second) + ")");
        DigitalMap based(d, c, m.values());
        if (d.based() && c.based() && based(*d.basepoint()) != *c.basepoint()) out.push_back(std::string(name) + " is not based");
        return true;
    };
    bool ok = shape(e.f, SXk, e.Y, "f");
    ok = shape(e.g, SYl, e.X, "g") && ok;
    ok = shape(e.F, SXkl, SYl, "F") && ok;
    ok = shape(e.G, SYkl, SXk, "G") && ok;
    if (!ok) return out;
    DigitalMap f(SXk, e.Y, e.f.values()), g(SYl, e.X, e.g.values());
    DigitalMap F(SXkl, SYl, e.F.values()), G(SYkl, SXk, e.G.values());
    // rho_l ∘ F = f ∘ rho_l on S(X,kl)
    {
        DigitalMap lhs = compose(rho_map(SYl, e.Y, e.l), F);
        DigitalMap rhs = compose(f, rho_map(SXkl, SXk, e.l));
        for (std::size_t i = 0; i < SXkl.size(); ++i)
            if (lhs.at_index(i) != rhs.at_index(i)) {
                out.push_back("square rho_l∘F = f∘rho_l fails at (" + to_string(SXkl.point(i)) + ")");
                break;
            }
    }
    // rho_k ∘ G = g ∘ rho_k on S(Y,kl)
    {
        DigitalMap lhs = compose(rho_map(SXk, e.X, e.k), G);
        DigitalMap rhs = compose(g, rho_map(SYkl, SYl, e.k));
        for (std::size_t i = 0; i < SYkl.size(); ++i)
            if (lhs.at_index(i) != rhs.at_index(i)) {
                out.push_back("square rho_k∘G = g∘rho_k fails at (" + to_string(SYkl.point(i)) + ")");
                break;
            }
    }
    for (auto& p : verify_map_witness(e.Y, compose(f, G), e.k * e.l, identity_map(e.Y), 1, e.fG_id, "f∘G ≈ id_Y")) out.push_back(p);
    for (auto& p : verify_map_witness(e.X, compose(g, F), e.k * e.l, identity_map(e.X), 1, e.gF_id, "g∘F ≈ id_X")) out.push_back(p);
    return out;
}

}  // namespace digitopo
