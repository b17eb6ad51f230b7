#include <gtest/gtest.h>

#include <random>

#include "digitopo/digitopo.hpp"

using namespace digitopo;

namespace {

// Every pair of cells in a common 2x2 window must be adjacent.
bool oracle_jointly_continuous(const HomotopyGrid& H) {
    const auto W = static_cast<long>(H.width()), N = static_cast<long>(H.height());
    for (long t = 0; t <= N; ++t)
        for (long s = 0; s <= W; ++s)
            for (long dt = -1; dt <= 1; ++dt)
                for (long ds = -1; ds <= 1; ++ds) {
                    long s2 = s + ds, t2 = t + dt;
                    if (s2 < 0 || t2 < 0 || s2 > W || t2 > N) continue;
                    if (!adjacent(H.rows[t][s], H.rows[t2][s2])) return false;
                }
    return true;
}

LatticeLoop walk(const DigitalImage& X, std::mt19937_64& rng, std::size_t len) {
    LatticeLoop a({*X.basepoint()});
    for (std::size_t i = 0; i < len; ++i) {
        const auto& nb = X.neighbours(X.require_index(a.back()));
        std::size_t pick = rng() % (nb.size() + 1);
        a.steps.push_back(pick == nb.size() ? a.back() : X.point(nb[pick]));
    }
    return a;
}

// Closes a walk in a box by retracing it.
LatticeLoop loop_in(const DigitalImage& X, std::mt19937_64& rng, std::size_t len) {
    LatticeLoop a = walk(X, rng, len);
    return short_concat(a, reverse(a));
}

}  // namespace

TEST(Grid, VerifierMatchesWindowOracleOnRandomGrids) {
    std::mt19937_64 rng(21);
    DigitalImage I = interval(3);
    int ok = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t W = 1 + rng() % 4, N = 1 + rng() % 3;
        HomotopyGrid H = make_grid(I, GridKind::maps, W, N, [&](Coord, Coord) { return Point{static_cast<Coord>(rng() % 2 + (trial % 3))}; });
        EXPECT_EQ(verify_grid(H).ok(), oracle_jointly_continuous(H));
        ok += oracle_jointly_continuous(H);
    }
    EXPECT_GT(ok, 50);
}

TEST(Grid, AntiDiagonalIsChecked) {
    DigitalImage I = interval(2);
    HomotopyGrid H = grid_from_rows(I, GridKind::maps, {LatticePath({{1}, {2}}), LatticePath({{0}, {1}})});
    auto rep = verify_grid(H);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.violations.front().s1, 1u);
    EXPECT_EQ(rep.violations.front().s2, 0u);
    EXPECT_TRUE(verify_grid_graph_product(H).ok());
}

TEST(Grid, BasedAndRelativeEdges) {
    DigitalImage I = interval(2);
    HomotopyGrid moving = grid_from_rows(I, GridKind::rel_endpoints, {LatticePath({{0}, {1}}), LatticePath({{1}, {1}})});
    EXPECT_FALSE(verify_grid(moving).ok());
    moving.kind = GridKind::maps;
    EXPECT_TRUE(verify_grid(moving).ok());
    HomotopyGrid off = grid_from_rows(I, GridKind::based_loops, {LatticePath({{0}, {1}, {0}}), LatticePath({{0}, {1}, {1}})});
    EXPECT_FALSE(verify_grid(off).ok());
}

TEST(Inverse, FrozenDotExample) {
    DigitalImage I = interval(1);
    HomotopyGrid H = inverse_homotopy(I, LatticePath({{0}, {1}}), InverseForm::dot);
    ASSERT_EQ(H.height(), 1u);
    EXPECT_EQ(H.bottom(), LatticePath({{0}, {1}, {1}, {0}}));
    EXPECT_EQ(H.top(), LatticePath({{0}, {0}, {0}, {0}}));
    EXPECT_EQ(H.kind, GridKind::based_loops);
    EXPECT_TRUE(verify_grid(H).ok());
}

TEST(Inverse, StarFormShares) {
    DigitalImage I = interval(3);
    LatticePath g({{0}, {1}, {2}});
    HomotopyGrid H = inverse_homotopy(I, g, InverseForm::star);
    EXPECT_EQ(H.bottom(), short_concat(g, reverse(g)));
    EXPECT_EQ(H.top(), constant_path({0}, 4));
    EXPECT_TRUE(verify_grid(H).ok());
}

TEST(Cube, FrozenRows) {
    HomotopyGrid H = cube_contraction(2, CubeMode::interval_0M);
    ASSERT_EQ(H.rows.size(), 3u);
    EXPECT_EQ(H.row(0), LatticePath({{0}, {1}, {2}}));
    EXPECT_EQ(H.row(1), LatticePath({{0}, {1}, {1}}));
    EXPECT_EQ(H.row(2), LatticePath({{0}, {0}, {0}}));
    HomotopyGrid S = cube_contraction(1, CubeMode::symmetric);
    EXPECT_EQ(S.row(0), LatticePath({{-1}, {0}, {1}}));
    EXPECT_EQ(S.row(1), LatticePath({{0}, {0}, {0}}));
    EXPECT_THROW(cube_contraction(-1, CubeMode::symmetric), Error);
}

TEST(Reparam, EndRowsAndContinuityOnBoxes) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t dim = 1 + rng() % 3;
        Point lo(dim, -1), hi(dim, 1);
        DigitalImage X = box(lo, hi, Point(dim, 0));
        LatticeLoop a = loop_in(X, rng, rng() % 6);
        int k = 2 + static_cast<int>(rng() % 3);
        Side side = trial % 2 ? Side::left : Side::right;
        HomotopyGrid H = reparam_homotopy(X, a, k, side);
        EXPECT_TRUE(verify_grid(H).ok()) << verify_grid(H).summary();
        EXPECT_EQ(H.bottom(), reparam(a, k));
        LatticePath pad = constant_path(a.back(), a.length());
        LatticePath expect = side == Side::right ? concat(reparam(a, k - 1), pad) : concat(pad, reparam(a, k - 1));
        EXPECT_EQ(H.top(), expect);
    }
}

TEST(Composition, StackSideConcatAndWhisker) {
    std::mt19937_64 rng(23);
    DigitalImage X = box({-2, -2}, {2, 2}, Point{0, 0});
    for (int trial = 0; trial < 100; ++trial) {
        LatticeLoop a = loop_in(X, rng, rng() % 5), b = loop_in(X, rng, rng() % 5);
        HomotopyGrid Ha = reparam_homotopy(X, a, 2), Hb = reparam_homotopy(X, b, 3);
        HomotopyGrid sc = side_concat(Ha, Hb);
        EXPECT_TRUE(verify_grid(sc).ok());
        EXPECT_EQ(sc.bottom(), concat(Ha.bottom(), Hb.bottom()));
        HomotopyGrid st = stack(Ha, time_reverse(Ha));
        EXPECT_TRUE(verify_grid(st).ok());
        EXPECT_EQ(st.bottom(), st.top());
        // Carry a loop homotopy at a far point back to the origin.
        LatticePath gamma = reverse(walk(X, rng, 1 + rng() % 4));
        DigitalImage Xf = X.with_basepoint(gamma.front());
        LatticeLoop af = loop_in(Xf, rng, rng() % 4);
        HomotopyGrid w = whisker_path(gamma, reparam_homotopy(Xf, af, 2), 2);
        EXPECT_EQ(w.kind, GridKind::based_loops);
        EXPECT_EQ(*w.target.basepoint(), (Point{0, 0}));
        EXPECT_TRUE(verify_grid(w).ok()) << verify_grid(w).summary();
    }
}

TEST(Composition, MismatchedStacksRejected) {
    DigitalImage I = interval(2);
    HomotopyGrid a = still(I, LatticePath({{0}, {1}}), 1), b = still(I, LatticePath({{1}, {1}}), 1);
    EXPECT_THROW(stack(a, b), Error);
    EXPECT_THROW(stack_reversed(a, b), Error);
    EXPECT_THROW(lengthen(a, 0), Error);
}

TEST(Mutation, CorruptedCellIsCaught) {
    std::mt19937_64 rng(24);
    DigitalImage X = box({-3, -3}, {3, 3}, Point{0, 0});
    for (int trial = 0; trial < 100; ++trial) {
        LatticeLoop a = loop_in(X, rng, 1 + rng() % 5);
        HomotopyGrid H = reparam_homotopy(X, a, 2);
        std::size_t s = rng() % (H.width() + 1), t = rng() % (H.height() + 1);
        Point v = H.rows[t][s];
        v[0] = v[0] >= 1 ? -3 : 3;  // at least two away from every old neighbour value
        H.rows[t][s] = v;
        EXPECT_FALSE(verify_grid(H).ok());
    }
}

TEST(Piecewise, DisagreeingBranchesThrow) {
    EXPECT_THROW(Piecewise("p", 0, 0).when(true, [] { return Point{0}; }).when(true, [] { return Point{1}; }), Error);
    EXPECT_THROW(Piecewise("p", 0, 0).when(false, [] { return Point{0}; }).value(), Error);
    EXPECT_EQ(Piecewise("p", 0, 0).when(true, [] { return Point{4}; }).when(true, [] { return Point{4}; }).value(), (Point{4}));
}

TEST(Products, ProductGridOfTwoFactors) {
    DigitalImage D = diamond(), I = interval(1);
    LatticeLoop a = diamond_generator();
    LatticeLoop b({{0}, {1}, {1}, {1}, {0}});
    HomotopyGrid H = product_grid(reparam_homotopy(D, a, 2), reparam_homotopy(I, b, 2));
    EXPECT_TRUE(verify_grid(H).ok());
    EXPECT_EQ(H.target.dim(), 3u);
    EXPECT_THROW(product_grid(reparam_homotopy(D, a, 2), reparam_homotopy(I, LatticeLoop(std::vector<Point>{{0}}), 2)), Error);
}

TEST(Witness, ReparamWitnessVerifiesAndTamperingIsCaught) {
    DigitalImage D = diamond();
    EquivalenceWitness w = right_identity_witness(D, diamond_generator());
    EXPECT_TRUE(verify_witness(w).empty());
    EquivalenceWitness bad = w;
    bad.right_factor += 1;
    EXPECT_FALSE(verify_witness(bad).empty());
    bad = w;
    bad.grids.front().rows[1][1] = {-1, 0};
    EXPECT_FALSE(verify_witness(bad).empty());
}

TEST(MapHomotopy, BoxContractionOnRandomBoxes) {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t dim = 1 + rng() % 3;
        Point lo(dim), hi(dim), b(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            lo[d] = -static_cast<Coord>(rng() % 3);
            hi[d] = lo[d] + static_cast<Coord>(rng() % 4);
            b[d] = lo[d] + static_cast<Coord>(rng() % static_cast<std::uint64_t>(hi[d] - lo[d] + 1));
        }
        DigitalImage X = box(lo, hi, b);
        MapHomotopy H = box_contraction(X);
        EXPECT_TRUE(verify_map_homotopy(H).empty());
        EXPECT_EQ(H.bottom(), identity_map(X));
        EXPECT_EQ(H.top(), constant_map(X, X, b));
        HomotopyGrid g = loop_through(H, loop_in(X, rng, rng() % 5));
        EXPECT_TRUE(verify_grid(g).ok());
    }
    EXPECT_THROW(box_contraction(diamond()), Error);
}
