#pragma once

#include <random>
#include <set>

#include "cover.hpp"
#include "dc_example.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "winding.hpp"

namespace digitopo::suite {

struct Checker {
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::vector<std::string> first_failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failed;
        if (first_failures.size() < 8) first_failures.push_back(what);
    }

    // Runs fn and records any library error as a failure.
    template <class F>
    void guard(const std::string& what, F&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            expect(false, what + ": " + e.what());
        }
    }

    bool ok() const { return failed == 0 && checks > 0; }
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

inline CriterionResult finish(int id, std::string name, const Checker& c, std::string extra = "") {
    CriterionResult r{id, std::move(name), c.ok(), ""};
    std::ostringstream os;
    os << c.checks << " checks";
    if (c.failed) os << ", " << c.failed << " failed; first: " << c.first_failures.front();
    if (!extra.empty()) os << "; " << extra;
    r.detail = os.str();
    return r;
}

// ---- random inputs ----

inline DigitalImage random_blob(std::mt19937_64& rng, std::size_t dim, std::size_t size) {
    std::vector<Point> pts{Point(dim, 0)};
    std::set<Point> have(pts.begin(), pts.end());
    std::uniform_int_distribution<int> off(-1, 1);
    std::size_t guard = 0;
    while (pts.size() < size && guard++ < 50 * size) {
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
        Point q = pts[pick(rng)];
        for (auto& c : q) c += off(rng);
        bool inside = true;
        for (auto c : q)
            if (std::llabs(c) > 2) inside = false;
        if (inside && have.insert(q).second) pts.push_back(q);
    }
    return DigitalImage(dim, pts, Point(dim, 0));
}

// A based image with at most three coordinates.
inline DigitalImage random_image(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> which(0, 7);
    switch (which(rng)) {
        case 0: return diamond();
        case 1: return io::fixture_image("C");
        case 2: return interval(std::uniform_int_distribution<int>(1, 6)(rng));
        case 3: return box({0, 0}, {2, 2}, Point{0, 0});
        case 4: return box({0, 0, 0}, {1, 1, 1}, Point{0, 0, 0});
        case 5: return product(diamond(), interval(1));
        case 6: return random_blob(rng, 2, std::uniform_int_distribution<std::size_t>(3, 12)(rng));
        default: return random_blob(rng, 3, std::uniform_int_distribution<std::size_t>(3, 10)(rng));
    }
}

// Random walk of exactly len steps from start (staying put is a valid step).
inline LatticePath random_walk(const DigitalImage& X, const Point& start, std::size_t len, std::mt19937_64& rng) {
    LatticePath a({start});
    std::size_t cur = X.require_index(start);
    for (std::size_t i = 0; i < len; ++i) {
        const auto& nb = X.neighbours(cur);
        std::uniform_int_distribution<std::size_t> pick(0, nb.size());
        std::size_t j = pick(rng);
        if (j < nb.size()) cur = nb[j];
        a.steps.push_back(X.point(cur));
    }
    return a;
}

inline LatticePath random_path(const DigitalImage& X, std::size_t max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> p(0, X.size() - 1), l(0, max_len);
    std::size_t len = l(rng);
    return random_walk(X, X.point(p(rng)), len, rng);
}

// ---- criteria ----

// pi_1(D) is Z: winding gives a homomorphism, hits every integer, and separates.
inline CriterionResult criterion_pi1_diamond(std::uint64_t seed = 11) {
    Checker c;
    std::mt19937_64 rng(seed);
    const DigitalImage D = diamond();
    const LatticeLoop gen = diamond_generator();
    c.guard("homomorphism", [&] {
        for (int i = 0; i < 200; ++i) {
            LatticeLoop a = random_loop(D, 12, rng), b = random_loop(D, 12, rng);
            c.expect(winding_class(concat(a, b)) == winding_class(a) + winding_class(b), "h(a·b) = h(a) + h(b)");
            c.expect(winding_class(reverse(a)) == -winding_class(a), "h(reverse a) = -h(a)");
        }
    });
    c.guard("surjectivity", [&] {
        for (int n = -3; n <= 3; ++n) {
            LatticeLoop a = power(gen, n, *D.basepoint());
            c.expect(is_loop(D, a), "n-fold generator is a loop");
            c.expect(winding_class(a) == n, "h(generator^n) = n for n = " + std::to_string(n));
        }
    });
    std::size_t steps_seen = 0;
    c.guard("winding invariance under steps", [&] {
        StepObserver obs = [&](const LatticeLoop& x, const LatticeLoop& y) {
            ++steps_seen;
            c.expect(winding(x) == winding(y), "winding changed across a homotopy step");
        };
        LatticeLoop padded = concat(gen, constant_path(*D.basepoint(), gen.length()));
        auto r = equivalent_bounded(D, reparam(gen, 2), padded, {}, {}, obs);
        c.expect(r.verdict == Verdict::equivalent, "reparam(generator,2) ~ generator·C found by search");
        if (r.witness) {
            c.expect(verify_witness(*r.witness).empty(), "search witness verifies");
            std::size_t h = r.witness->grids.empty() ? 0 : r.witness->grids[0].height();
            c.expect(h <= gen.length() + 1, "witness height within M+1");
        }
        for (int i = 0; i < 20; ++i) {
            LatticeLoop a = random_loop(D, 6, rng), b = random_loop(D, 6, rng);
            auto rr = equivalent_bounded(D, a, b, SearchBudget{2, 3000}, {}, obs);
            if (rr.witness) c.expect(winding_class(a) == winding_class(b), "equivalent loops share winding");
        }
    });
    c.guard("separation", [&] {
        LatticeLoop con = constant_path(*D.basepoint(), gen.length());
        auto blind = equivalent_bounded(D, gen, con);
        c.expect(!blind.witness, "no search witness between generator and constant");
        auto r = equivalent_bounded(D, gen, con, {}, diamond_invariant(D));
        c.expect(r.verdict == Verdict::separated_by_invariant, "generator and constant separated by winding");
        c.expect(winding(gen) == 4 && winding(con) == 0, "windings 4 and 0");
    });
    return finish(1, "fundamental group of D is Z", c, std::to_string(steps_seen) + " search steps observed");
}

// Every grid constructor yields verified grids on random inputs.
inline CriterionResult criterion_constructors(std::uint64_t seed = 12, int instances = 100) {
    Checker c;
    std::mt19937_64 rng(seed);
    std::map<std::string, int> counts;
    auto check = [&](const std::string& name, const HomotopyGrid& g) {
        ++counts[name];
        auto rep = verify_grid(g);
        c.expect(rep.ok(), name + ": " + rep.summary());
    };
    std::uniform_int_distribution<int> kdist(2, 4);
    for (int i = 0; i < instances; ++i) {
        c.guard("constructor instance " + std::to_string(i), [&] {
            DigitalImage X = random_image(rng);
            LatticeLoop a = random_loop(X, 12, rng);
            LatticePath p = random_path(X, 12, rng);
            int k = kdist(rng);
            check("reparam_homotopy/right", reparam_homotopy(X, a, k, Side::right));
            check("reparam_homotopy/left", reparam_homotopy(X, a, k, Side::left));
            check("reparam_homotopy/path", reparam_homotopy(X, p, k, Side::right));
            check("inverse_homotopy/dot", inverse_homotopy(X, p, InverseForm::dot));
            check("inverse_homotopy/star", inverse_homotopy(X, p, InverseForm::star));
            Coord M = std::uniform_int_distribution<Coord>(0, 12)(rng);
            check("cube_contraction/interval", cube_contraction(M, CubeMode::interval_0M));
            check("cube_contraction/symmetric", cube_contraction(M, CubeMode::symmetric));

            HomotopyGrid r = reparam_homotopy(X, a, k, Side::right);
            check("lengthen", lengthen(r, r.height() + std::uniform_int_distribution<std::size_t>(0, 5)(rng)));
            LatticeLoop b = random_loop(X, 12, rng);
            check("side_concat", side_concat(r, reparam_homotopy(X, b, 2, Side::left)));
            check("stack", stack(r, time_reverse(r)));
            check("pull_reparam", pull_reparam(r, k));

            // Whiskering: a loop homotopy at the end of a path, carried back to the basepoint.
            LatticePath gamma = random_walk(X, *X.basepoint(), std::uniform_int_distribution<std::size_t>(0, 6)(rng), rng);
            const Point far = gamma.back();
            gamma = reverse(gamma);  // from far to the basepoint
            DigitalImage Xf = X.with_basepoint(far);
            LatticeLoop af = random_loop(Xf, 8, rng);
            check("whisker", whisker_path(gamma, reparam_homotopy(Xf, af, 2), 2));

            DigitalImage S2 = subdivide(X, 2);
            LatticeLoop up = random_loop(S2, 12, rng);
            check("push_homotopy", push_homotopy(rho_map(S2, X, 2), reparam_homotopy(S2, up, k)));

            DigitalImage Y = random_image(rng);
            LatticeLoop a2 = random_loop(X, 8, rng), b2 = random_loop(Y, 8, rng);
            std::size_t L = std::max(a2.length(), b2.length());
            while (a2.length() < L) a2.steps.push_back(*X.basepoint());
            while (b2.length() < L) b2.steps.push_back(*Y.basepoint());
            check("product_grid", product_grid(reparam_homotopy(X, a2, k), reparam_homotopy(Y, b2, k)));

            if (auto bx = as_full_box(X)) check("box_contraction", loop_through(box_contraction(X), a));

            int kk = std::uniform_int_distribution<int>(1, 2)(rng);
            DigitalImage SX = subdivide(X, odd_factor(kk));
            LatticeLoop s = random_loop(SX, 10, rng);
            check("beta_to_reparam_grid", beta_to_reparam_grid(SX, s, kk));
            check("beta_to_cover_grid", beta_to_cover_grid(SX, s, kk));
            check("reparam_to_cover_grid", reparam_to_cover_grid(SX, s, kk));

            LatticeLoop d = random_loop(diamond(), 12, rng);
            d = concat(d, reverse(d));
            check("contract_winding_zero_loop", contract_winding_zero_loop(d));
        });
    }
    // Box contraction only applies to boxes; top it up on boxes directly.
    for (int i = 0; counts["box_contraction"] < instances && i < 10 * instances; ++i) {
        c.guard("box instance", [&] {
            std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
            Point lo(dim), hi(dim), b(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                lo[d] = std::uniform_int_distribution<Coord>(-2, 0)(rng);
                hi[d] = lo[d] + std::uniform_int_distribution<Coord>(0, 3)(rng);
                b[d] = std::uniform_int_distribution<Coord>(lo[d], hi[d])(rng);
            }
            DigitalImage X = box(lo, hi, b);
            check("box_contraction", loop_through(box_contraction(X), random_loop(X, 12, rng)));
        });
    }
    int least = instances;
    std::string low;
    for (const auto& kv : counts)
        if (kv.second < least) {
            least = kv.second;
            low = kv.first;
        }
    c.expect(least >= instances, "too few instances of " + low);
    return finish(2, "every grid constructor verifies", c, std::to_string(counts.size()) + " constructors");
}

// Exact identities among projections, concatenation and subdivision.
inline CriterionResult criterion_algebraic_laws(std::uint64_t seed = 13) {
    Checker c;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 60; ++i) {
        c.guard("laws instance " + std::to_string(i), [&] {
            DigitalImage X = random_image(rng);
            int p = std::uniform_int_distribution<int>(1, 4)(rng), q = std::uniform_int_distribution<int>(1, 4)(rng);
            DigitalImage Spq = subdivide(X, p * q), Sq = subdivide(X, q);
            DigitalMap lhs = rho_map(Spq, X, p * q);
            DigitalMap rhs = compose(rho_map(subdivide(X, p), X, p), rho_map(Spq, subdivide(X, p), q));
            c.expect(lhs == rhs, "rho_pq = rho_p ∘ rho_q");
            std::size_t blocksize = 1;
            for (std::size_t d = 0; d < X.dim(); ++d) blocksize *= static_cast<std::size_t>(p * q);
            c.expect(Spq.size() == X.size() * blocksize, "|S(X,k)| = k^n |X|");
            c.expect(block(X.point(0), p * q).size() == blocksize, "block has k^n points");
            c.expect(subdivide(X, 1) == X, "S(X,1) = X");
            c.expect(is_continuous(rho_map(Sq, X, q)) && is_based(rho_map(Sq, X, q)), "rho_k is continuous and based");
            c.expect(rho_point(*Sq.basepoint(), q) == *X.basepoint(), "subdivided basepoint lies over the basepoint");
            int k = std::uniform_int_distribution<int>(3, 6)(rng);
            DigitalMap rc = rho_c_map(X, k);
            c.expect(is_continuous(rc), "partial projection is continuous");
            c.expect(rho_c_point(*subdivide(X, k).basepoint(), k) == *subdivide(X, k - 1).basepoint(), "partial projection is based");
            DigitalImage Sk = subdivide(X, k), Sk1 = subdivide(X, k - 1);
            c.expect(rho_map(Sk, X, k) == compose(rho_map(Sk1, X, k - 1), rc), "rho_k = rho_{k-1} ∘ partial projection");

            LatticePath a = random_path(X, 12, rng);
            LatticePath b = random_walk(X, a.back(), std::uniform_int_distribution<std::size_t>(0, 8)(rng), rng);
            c.expect(concat(a, b).length() == a.length() + b.length() + 1, "concat length");
            c.expect(short_concat(a, b).length() == a.length() + b.length(), "short concat length");
            c.expect(reverse(reverse(a)) == a, "reverse is an involution");
            c.expect(reverse(concat(a, b)) == concat(reverse(b), reverse(a)), "reverse of a concat");
            int r1 = std::uniform_int_distribution<int>(1, 4)(rng), r2 = std::uniform_int_distribution<int>(1, 4)(rng);
            c.expect(reparam(reparam(a, r1), r2) == reparam(a, r1 * r2), "reparam composes");
            c.expect(reparam(a, r1).length() == static_cast<std::size_t>(r1) * a.length() + r1 - 1, "reparam length");
            c.expect(reverse(reparam(a, r1)) == reparam(reverse(a), r1), "reparam commutes with reverse");
            c.expect(push(identity_map(X), a) == a, "push by identity");
            DigitalMap proj = rho_map(Sq, X, q);
            LatticePath up = random_path(Sq, 10, rng);
            c.expect(is_path(X, push(proj, up)), "pushed path is a path");
            c.expect(push(proj, reparam(up, r1)) == reparam(push(proj, up), r1), "push commutes with reparam");

            LatticeLoop la = random_loop(X, 10, rng), lb = random_loop(X, 10, rng);
            HomotopyGrid Ha = reparam_homotopy(X, la, 2), Hb = reparam_homotopy(X, lb, 3);
            HomotopyGrid side = side_concat(Ha, Hb);
            c.expect(side.bottom() == concat(Ha.bottom(), Hb.bottom()), "side_concat bottom is the concat");
            c.expect(side.top() == concat(Ha.top(), Hb.top()), "side_concat top is the concat");
            int kk = std::uniform_int_distribution<int>(2, 4)(rng);
            HomotopyGrid R = reparam_homotopy(X, la, kk);
            LatticeLoop Cm = constant_path(*X.basepoint(), la.length());
            c.expect(R.bottom() == reparam(la, kk), "reparam homotopy starts at a∘rho_k");
            c.expect(R.top() == concat(reparam(la, kk - 1), Cm), "reparam homotopy (right) ends at (a∘rho_{k-1})·C");
            HomotopyGrid Lg = reparam_homotopy(X, la, kk, Side::left);
            c.expect(Lg.top() == concat(Cm, reparam(la, kk - 1)), "reparam homotopy (left) ends at C·(a∘rho_{k-1})");
            HomotopyGrid I = inverse_homotopy(X, a);
            c.expect(I.bottom() == concat(a, reverse(a)) && I.top() == constant_path(a.front(), 2 * a.length() + 1),
                     "inverse homotopy ends");
            c.expect(pull_reparam(Ha, 1) == Ha, "pull_reparam by 1");
            c.expect(push_homotopy(identity_map(X), Ha) == Ha, "push by identity");
        });
    }
    c.guard("cube contraction rows", [&] {
        HomotopyGrid g = cube_contraction(2, CubeMode::interval_0M);
        c.expect(g.rows == std::vector<std::vector<Point>>{{{0}, {1}, {2}}, {{0}, {1}, {1}}, {{0}, {0}, {0}}}, "I_2 contraction rows");
        HomotopyGrid h = cube_contraction(1, CubeMode::symmetric);
        c.expect(h.rows == std::vector<std::vector<Point>>{{{-1}, {0}, {1}}, {{0}, {0}, {0}}}, "[-1,1] contraction rows");
    });
    return finish(3, "exact algebraic laws", c);
}

// The standard cover commutes with projection, matches its closed form, and
// coordinate jumps force the extreme residues.
inline CriterionResult criterion_standard_cover(std::uint64_t seed = 14) {
    Checker c;
    std::mt19937_64 rng(seed);
    for (int K : {3, 5}) {
        const int k = K / 2;
        for (int i = 0; i < 200; ++i) {
            c.guard("cover instance", [&] {
                DigitalImage X = random_image(rng);
                DigitalImage SX = subdivide(X, K);
                LatticePath a = random_path(X, 12, rng);
                LatticePath hat = standard_cover(a, k);
                c.expect(hat.length() == static_cast<std::size_t>(K) * a.length() + 2 * k, "cover length");
                c.expect(is_path(SX, hat), "cover is a path upstairs");
                c.expect(push(rho_map(SX, X, K), hat) == reparam(a, K), "rho ∘ cover = a ∘ rho");
                c.expect(standard_cover_closed_form(a, k) == hat, "closed form agrees");
                LatticePath up = random_path(SX, 12, rng);
                for (std::size_t s = 0; s + 1 < up.steps.size(); ++s)
                    for (std::size_t j = 0; j < up[s].size(); ++j) {
                        Coord x = floor_div(up[s][j], K), xp = floor_div(up[s + 1][j], K);
                        Coord r = floor_mod(up[s][j], K), rp = floor_mod(up[s + 1][j], K);
                        if (xp - x == 1) c.expect(r == 2 * k && rp == 0, "jump +1 forces residues (2k, 0)");
                        if (xp - x == -1) c.expect(r == 0 && rp == 2 * k, "jump -1 forces residues (0, 2k)");
                    }
            });
        }
    }
    c.guard("cover example", [&] {
        LatticePath a({{0}, {1}});
        LatticePath hat = standard_cover(a, 1);
        c.expect(hat == LatticePath({{1}, {1}, {2}, {3}, {4}, {4}}), "cover of [0,1] at factor 3");
        c.expect(push(rho_map(subdivide(interval(1), 3), interval(1), 3), hat) == LatticePath({{0}, {0}, {0}, {1}, {1}, {1}}),
                 "its projection");
    });
    return finish(4, "standard cover square", c);
}

// The two circles: shipped maps, the equivalence data, the census and the contraction of U.
inline CriterionResult criterion_circles(std::uint64_t = 15) {
    Checker c;
    c.guard("circle data", [&] {
        DigitalImage D = io::fixture_image("D"), C = io::fixture_image("C"), SD2 = io::fixture_image("SD2");
        c.expect(SD2 == subdivide(D, 2), "shipped S(D,2) is the subdivision of D");
        DigitalMap f = io::fixture_map("f").map, g = io::fixture_map("g").map, gp = io::fixture_map("gprime").map;
        for (auto* m : {&f, &g, &gp}) {
            c.expect(is_continuous(*m), "shipped map is continuous");
            c.expect(is_based(*m), "shipped map is based");
        }
        c.expect(compose(f, gp) == identity_map(C), "f ∘ g' = id_C");
        c.expect(compose(g, f) == rho_map(SD2, D, 2), "g ∘ f = rho_2");
        auto probs = verify_subdivision_equivalence(circle_equivalence(D, C, f, g, gp));
        c.expect(probs.empty(), "subdivision equivalence data: " + (probs.empty() ? std::string("ok") : probs.front()));
        DigitalImage U = subset_where(C, [](const Point& p) { return p[0] >= 0; });
        c.expect(U.same_points(io::fixture_image("U")), "shipped U matches x1 >= 0");
        auto census = based_map_census(D, C);
        c.expect(!census.empty(), "census is nonempty");
        for (const auto& m : census)
            for (const auto& y : m.values()) c.expect(U.contains(y), "based map D -> C leaves U");
        MapHomotopy H = io::fixture_map_homotopy("lambda").homotopy;
        auto hp = verify_map_homotopy(H);
        c.expect(hp.empty(), "contraction of U verifies: " + (hp.empty() ? std::string("ok") : hp.front()));
        MapHomotopy computed = centring_contraction(U, C, 2);
        c.expect(computed.stages == H.stages, "shipped contraction matches the formula");
        c.expect(H.bottom() == inclusion_map(U, C), "contraction starts at the inclusion");
        c.expect(H.top() == constant_map(U, C, *C.basepoint()), "contraction ends at the constant map");
        for (const auto& m : census) {
            DigitalMap into(D, U, m.values());
            MapHomotopy pulled{D, C, {}, true};
            for (std::size_t t = 0; t <= H.height(); ++t) pulled.stages.push_back(compose(H.stage(t), into).values());
            c.expect(verify_map_homotopy(pulled).empty(), "based map D -> C is null through U");
        }
        std::size_t n = census.size();
        c.expect(n > 0, std::to_string(n) + " maps");
    });
    return finish(5, "circles D and C", c);
}

// A graph-product contraction of D is rejected, though it passes the weaker check.
inline CriterionResult criterion_graph_product_contrast(std::uint64_t = 16) {
    Checker c;
    c.guard("contrast", [&] {
        auto gf = io::load_grid(io::fixture_dir() / "diamond_graph_contraction.grid");
        auto rep = verify_grid(gf.grid);
        c.expect(!rep.ok(), "graph-product contraction must fail joint continuity");
        c.expect(verify_grid_graph_product(gf.grid).ok(), "it is a homotopy in the graph product");
        c.expect(gf.grid.bottom() == diamond_generator(), "bottom row is the generator");
    });
    return finish(6, "graph-product contraction rejected", c);
}

// Group laws at desk scale, witnesses replayed from text, product loops.
inline CriterionResult criterion_group_laws(std::uint64_t seed = 17) {
    Checker c;
    std::mt19937_64 rng(seed);
    const DigitalImage images[] = {diamond(), product(interval(2), interval(2))};
    for (const auto& X : images) {
        for (int i = 0; i < 50; ++i) {
            c.guard("group law instance", [&] {
                LatticeLoop a = random_loop(X, 8, rng), b = random_loop(X, 8, rng), d = random_loop(X, 8, rng);
                std::vector<EquivalenceWitness> ws{right_identity_witness(X, a), left_identity_witness(X, a), inverse_witness(X, a)};
                for (const auto& w : ws) {
                    auto probs = verify_witness(w);
                    c.expect(probs.empty(), "group law witness: " + (probs.empty() ? std::string("ok") : probs.front()));
                    std::string text = io::serialize_witness(io::inline_ref(X), w);
                    auto back = io::parse_witness_file(text, ".");
                    c.expect(verify_witness(back.witness).empty(), "witness re-verifies from text");
                    c.expect(io::serialize_witness(back.image_ref, back.witness) == text, "witness text round-trips");
                }
                c.expect(concat(concat(a, b), d) == concat(a, concat(b, d)), "concat is associative");
                auto prod = product_witness(right_identity_witness(X, a), right_identity_witness(X, b));
                c.expect(prod && verify_witness(*prod).empty(), "product of witnesses verifies");
            });
        }
    }
    const DigitalImage Xp = diamond(), Yp = interval(1);
    const DigitalImage P = product(Xp, Yp);
    int done = 0;
    for (int tries = 0; done < 50 && tries < 5000; ++tries) {
        c.guard("product instance", [&] {
            LatticeLoop a = random_loop(Xp, 8, rng), b = random_loop(Yp, 8, rng);
            if (a.length() != b.length()) return;
            ++done;
            LatticeLoop j = product_join(a, b);
            c.expect(is_loop(P, j), "join is a loop");
            auto sp = product_split(j, Xp.dim());
            c.expect(sp.first == a && sp.second == b, "split ∘ join = id");
            c.expect(product_join(sp.first, sp.second) == j, "join ∘ split = id");
            LatticeLoop Cm = constant_path(*Yp.basepoint(), a.length()), Cx = constant_path(*Xp.basepoint(), a.length());
            LatticeLoop lhs = concat(product_join(a, Cm), product_join(Cx, b));
            auto parts = product_split(lhs, Xp.dim());
            c.expect(parts.first == concat(a, Cx) && parts.second == concat(Cm, b), "product of axis loops splits");
            HomotopyGrid g = product_grid(reparam_homotopy(Xp, a, 2, Side::right), reparam_homotopy(Yp, b, 2, Side::left));
            EquivalenceWitness w{P, j, lhs, 2, 1, {g}};
            auto probs = verify_witness(w);
            c.expect(probs.empty(), "join(a,b) ~ join(a,C)·join(C,b): " + (probs.empty() ? std::string("ok") : probs.front()));
        });
    }
    c.expect(done == 50, "50 product loops");
    return finish(7, "group laws and products", c);
}

// rho_k induces a bijection on sampled classes.
inline CriterionResult criterion_rho_iso(std::uint64_t seed = 18) {
    Checker c;
    const std::pair<std::string, DigitalImage> images[] = {
        {"D", diamond()}, {"I2", interval(2)}, {"I2xI2", product(interval(2), interval(2))}};
    std::ostringstream extra;
    for (const auto& [name, X] : images)
        for (int k : {2, 3}) {
            c.guard("rho evidence " + name, [&] {
                IsoSamples s;
                s.seed = seed + static_cast<std::uint64_t>(k);
                IsoReport r = rho_iso_evidence(X, k, s);
                c.expect(!r.any_failure(), name + " k=" + std::to_string(k) + ": failure verdict");
                c.expect(r.count("surjectivity", "conclusive") == s.count, name + " k=" + std::to_string(k) + ": surjectivity not conclusive");
                std::size_t inj = r.count("injectivity", "conclusive") + r.count("injectivity", "separated-by-invariant");
                c.expect(inj == s.count, name + " k=" + std::to_string(k) + ": injectivity not conclusive");
                extra << name << "/k" << k << " inj " << r.count("injectivity", "conclusive") << "+"
                      << r.count("injectivity", "separated-by-invariant") << " ";
            });
        }
    return finish(8, "rho_k isomorphism evidence", c, extra.str());
}

inline std::vector<CriterionResult> run_all(const std::set<int>& only = {}) {
    std::vector<CriterionResult> out;
    using Fn = CriterionResult (*)();
    const std::pair<int, Fn> all[] = {
        {1, [] { return criterion_pi1_diamond(); }},        {2, [] { return criterion_constructors(); }},
        {3, [] { return criterion_algebraic_laws(); }},     {4, [] { return criterion_standard_cover(); }},
        {5, [] { return criterion_circles(); }},            {6, [] { return criterion_graph_product_contrast(); }},
        {7, [] { return criterion_group_laws(); }},         {8, [] { return criterion_rho_iso(); }},
    };
    for (const auto& [id, fn] : all)
        if (only.empty() || only.count(id)) out.push_back(fn());
    return out;
}

inline std::string format_line(const CriterionResult& r) {
    return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

}  // namespace digitopo::suite
