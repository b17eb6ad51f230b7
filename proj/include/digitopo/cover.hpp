#pragma once

#include "homotopy.hpp"

namespace digitopo {

// Residues 0..2k of an odd factor 2k+1; one step of the centring function moves
// a residue one place toward k.
inline Coord centring(Coord r, int k) {
    if (r < k) return r + 1;
    if (r > k) return r - 1;
    return k;
}

inline Coord centring_pow(Coord r, int k, Coord t) {
    if (t < 0) throw Error(Error::Kind::precondition, "negative centring power");
    return r <= k ? std::min<Coord>(r + t, k) : std::max<Coord>(r - t, k);
}

inline int odd_factor(int k) { return 2 * k + 1; }

// gamma_i(t): the point p of S(X,2k+1) moved t centring steps toward its block centre.
inline Point centring_path_point(const Point& p, int k, Coord t) {
    const Coord K = odd_factor(k);
    Point out(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) out[j] = K * floor_div(p[j], K) + centring_pow(floor_mod(p[j], K), k, t);
    return out;
}

inline LatticePath centring_path(const Point& p, int k) {
    LatticePath g;
    for (Coord t = 0; t <= k; ++t) g.steps.push_back(centring_path_point(p, k, t));
    return g;
}

namespace detail {
inline void place(std::vector<std::optional<Point>>& cells, std::size_t i, Point v, const char* who) {
    if (cells[i] && *cells[i] != v)
        throw Error(Error::Kind::branch, std::string(who) + ": seam mismatch at index " + std::to_string(i));
    cells[i] = std::move(v);
}

inline LatticePath collect(const std::vector<std::optional<Point>>& cells, const char* who) {
    LatticePath out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!cells[i]) throw Error(Error::Kind::branch, std::string(who) + ": index " + std::to_string(i) + " left unset");
        out.steps.push_back(*cells[i]);
    }
    return out;
}
}  // namespace detail

// beta for a path alpha in S(X,2k+1): alternates between the centring paths of
// consecutive points, and sits at block centres at either end.
inline LatticePath beta_path(const LatticePath& a, int k) {
    const std::size_t K = static_cast<std::size_t>(odd_factor(k)), M = a.length();
    const std::size_t ku = static_cast<std::size_t>(k);
    std::vector<std::optional<Point>> cells(K * M + 2 * ku + 1);
    auto bar = [&](std::size_t i) { return K * i + ku; };
    for (std::size_t u = 0; u <= bar(0); ++u) detail::place(cells, u, centring_path_point(a[0], k, k), "beta");
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t s = 0; s <= ku; ++s)
            detail::place(cells, bar(i) + s, centring_path_point(a[i], k, static_cast<Coord>(ku - s)), "beta");
        for (std::size_t s = ku + 1; s <= 2 * ku + 1; ++s)
            detail::place(cells, bar(i) + s, centring_path_point(a[i + 1], k, static_cast<Coord>(s - ku - 1)), "beta");
    }
    for (std::size_t u = bar(M); u < cells.size(); ++u) detail::place(cells, u, centring_path_point(a[M], k, k), "beta");
    return detail::collect(cells, "beta");
}

// Standard cover of a path alpha in X inside S(X,2k+1); length (2k+1)N + 2k.
inline LatticePath standard_cover(const LatticePath& a, int k) {
    const int K = odd_factor(k);
    const std::size_t N = a.length(), ku = static_cast<std::size_t>(k), Ku = static_cast<std::size_t>(K);
    std::vector<std::optional<Point>> cells(Ku * N + 2 * ku + 1);
    auto bar = [&](std::size_t i) { return Ku * i + ku; };
    for (std::size_t u = 0; u < ku; ++u) detail::place(cells, u, block_centre(a[0], K), "standard_cover");
    for (std::size_t i = 0; i < N; ++i) {
        if (!adjacent(a[i], a[i + 1])) throw Error(Error::Kind::precondition, "standard_cover: input is not a path");
        Point c = block_centre(a[i], K);
        // t runs to 2k+1 so the seam with the next segment is checked.
        for (std::size_t t = 0; t <= 2 * ku + 1; ++t) {
            Point v = c;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += static_cast<Coord>(t) * (a[i + 1][j] - a[i][j]);
            detail::place(cells, bar(i) + t, std::move(v), "standard_cover");
        }
    }
    for (std::size_t u = bar(N); u < cells.size(); ++u) detail::place(cells, u, block_centre(a[N], K), "standard_cover");
    return detail::collect(cells, "standard_cover");
}

// The same cover written through the centring function, one gap at a time.
inline LatticePath standard_cover_closed_form(const LatticePath& a, int k) {
    const Coord K = odd_factor(k);
    const std::size_t N = a.length(), ku = static_cast<std::size_t>(k), Ku = static_cast<std::size_t>(K);
    std::vector<std::optional<Point>> cells(Ku * N + 2 * ku + 1);
    auto bar = [&](std::size_t i) { return Ku * i + ku; };
    for (std::size_t u = 0; u <= bar(0); ++u) detail::place(cells, u, block_centre(a[0], static_cast<int>(K)), "closed_form");
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t s = 0; s <= 2 * ku + 1; ++s) {
            Point v(a[i].size());
            for (std::size_t j = 0; j < v.size(); ++j) {
                Coord x = a[i][j], xp = a[i + 1][j], d = xp - x;
                if (s <= ku)
                    v[j] = K * x + centring_pow(k + k * d, k, static_cast<Coord>(ku - s));
                else
                    v[j] = K * xp + centring_pow(k - k * d, k, static_cast<Coord>(s - ku - 1));
            }
            detail::place(cells, bar(i) + s, std::move(v), "closed_form");
        }
    for (std::size_t u = bar(N); u < cells.size(); ++u) detail::place(cells, u, block_centre(a[N], static_cast<int>(K)), "closed_form");
    return detail::collect(cells, "closed_form");
}

inline void require_centred_ends(const LatticePath& a, int k, const char* who) {
    const int K = odd_factor(k);
    if (a.front() != block_centre(rho_point(a.front(), K), K) || a.back() != block_centre(rho_point(a.back(), K), K))
        throw Error(Error::Kind::precondition, std::string(who) + ": path must start and end at block centres");
}

// Height-k homotopy from beta to a ∘ rho_{2k+1}: on each block the star-form
// inverse homotopy of the centring path contracts gamma * reverse(gamma).
inline HomotopyGrid beta_to_reparam_grid(const DigitalImage& SX, const LatticePath& a, int k) {
    require_centred_ends(a, k, "beta_to_reparam_grid");
    HomotopyGrid out;
    for (std::size_t i = 0; i <= a.length(); ++i) {
        HomotopyGrid blockH = inverse_homotopy(SX, centring_path(a[i], k), InverseForm::star);
        out = i == 0 ? blockH : side_concat(out, blockH);
    }
    out.target = SX;
    out.kind = is_loop(SX, a) ? GridKind::based_loops : GridKind::rel_endpoints;
    if (out.bottom() != beta_path(a, k)) throw Error(Error::Kind::branch, "beta_to_reparam_grid: bottom row is not beta");
    if (out.top() != reparam(a, odd_factor(k))) throw Error(Error::Kind::branch, "beta_to_reparam_grid: top row is not a∘rho");
    return out;
}

namespace detail {
// Gap homotopy where both ends share a residue; residue part only.
inline Coord gap_same(Coord s, Coord t, Coord r, int k) {
    Coord v = 0;
    bool set = false;
    auto put = [&](bool cover, Coord power) {
        if (!cover) return;
        const Coord val = centring_pow(r, k, power);
        if (set && v != val) throw Error(Error::Kind::branch, "gap homotopy: branches disagree");
        v = val;
        set = true;
    };
    put(s < k - t, k - s);
    put(k - t <= s && s <= k + 1 + t, t);
    put(s > k + 1 + t, s - (k + 1));
    if (!set) throw Error(Error::Kind::branch, "gap homotopy: no branch");
    return v;
}
}  // namespace detail

// Height-k homotopy from beta to the standard cover of rho_{2k+1} ∘ a, built
// one gap and one coordinate at a time.
inline HomotopyGrid beta_to_cover_grid(const DigitalImage& SX, const LatticePath& a, int k) {
    require_centred_ends(a, k, "beta_to_cover_grid");
    const Coord K = odd_factor(k);
    const Coord M = static_cast<Coord>(a.length());
    const LatticePath beta = beta_path(a, k);
    const Coord W = K * M + 2 * k;
    auto bar = [&](Coord i) { return K * i + k; };
    auto cell = [&](Coord u, Coord t) -> Point {
        if (u <= bar(0)) return beta[static_cast<std::size_t>(u)];
        if (u >= bar(M)) return beta[static_cast<std::size_t>(u)];
        Coord i = floor_div(u - k, K), s = u - bar(i);
        const Point& p = a[static_cast<std::size_t>(i)];
        const Point& q = a[static_cast<std::size_t>(i + 1)];
        Point v(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) {
            Coord x = floor_div(p[j], K), r = floor_mod(p[j], K);
            Coord xp = floor_div(q[j], K), rp = floor_mod(q[j], K);
            Coord b_here = beta[static_cast<std::size_t>(u)][j];
            if (xp != x) {
                v[j] = b_here;
            } else if (r == rp) {
                v[j] = K * x + detail::gap_same(s, t, r, k);
            } else if ((k <= rp && rp < r) || (r < rp && rp <= k)) {
                if (s <= k)
                    v[j] = K * x + detail::gap_same(s, t, r, k);
                else if (s <= 2 * k)
                    v[j] = K * x + detail::gap_same(s + 1, t, r, k);
                else
                    v[j] = beta[static_cast<std::size_t>(bar(i) + 2 * k + 1)][j];
            } else {
                if (s == 0)
                    v[j] = beta[static_cast<std::size_t>(bar(i))][j];
                else if (s <= k)
                    v[j] = K * x + detail::gap_same(s - 1, t, rp, k);
                else
                    v[j] = K * x + detail::gap_same(s, t, rp, k);
            }
        }
        return v;
    };
    HomotopyGrid G = make_grid(SX, is_loop(SX, a) ? GridKind::based_loops : GridKind::rel_endpoints,
                               static_cast<std::size_t>(W), static_cast<std::size_t>(k), cell);
    if (G.bottom() != beta) throw Error(Error::Kind::branch, "beta_to_cover_grid: bottom row is not beta");
    LatticePath projected;
    for (const auto& p : a.steps) projected.steps.push_back(rho_point(p, static_cast<int>(K)));
    if (G.top() != standard_cover(projected, k))
        throw Error(Error::Kind::branch, "beta_to_cover_grid: top row is not the standard cover");
    return G;
}

// Height 2k+1: a ∘ rho_{2k+1} up to beta, then beta up to the cover of rho ∘ a.
inline HomotopyGrid reparam_to_cover_grid(const DigitalImage& SX, const LatticePath& a, int k) {
    return stack_reversed(beta_to_reparam_grid(SX, a, k), beta_to_cover_grid(SX, a, k));
}

struct CoverEdges {
    LatticePath bottom, top, left, right;
};

// Boundary of the lift of a homotopy H in X to S(X,2k+1). The interior is not built here.
inline CoverEdges cover_2d_edges(const HomotopyGrid& H, int k) {
    return CoverEdges{standard_cover(H.bottom(), k), standard_cover(H.top(), k), standard_cover(H.column(0), k),
                      standard_cover(H.column(H.width()), k)};
}

}  // namespace digitopo
