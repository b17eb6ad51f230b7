#include <gtest/gtest.h>

#include <random>

#include "digitopo/digitopo.hpp"

using namespace digitopo;

namespace {

std::vector<Coord> xs(const LatticePath& a) {
    std::vector<Coord> out;
    for (const auto& p : a.steps) out.push_back(p[0]);
    return out;
}

LatticePath path_of(std::initializer_list<Coord> v) {
    LatticePath a;
    for (Coord x : v) a.steps.push_back({x});
    return a;
}

// Residue walk toward the centre, written out step by step.
Coord oracle_centre_walk(Coord r, int k, Coord t) {
    for (Coord i = 0; i < t; ++i) r = r < k ? r + 1 : (r > k ? r - 1 : r);
    return r;
}

LatticePath random_path(const DigitalImage& X, std::mt19937_64& rng, std::size_t len) {
    LatticePath a({X.point(rng() % X.size())});
    for (std::size_t i = 0; i < len; ++i) {
        const auto& nb = X.neighbours(X.require_index(a.back()));
        std::size_t pick = rng() % (nb.size() + 1);
        a.steps.push_back(pick == nb.size() ? a.back() : X.point(nb[pick]));
    }
    return a;
}

}  // namespace

TEST(Centring, FrozenValues) {
    std::vector<Coord> got;
    for (Coord r = 0; r <= 4; ++r) got.push_back(centring(r, 2));
    EXPECT_EQ(got, (std::vector<Coord>{1, 2, 2, 2, 3}));
    for (int k = 1; k <= 4; ++k)
        for (Coord r = 0; r <= 2 * k; ++r)
            for (Coord t = 0; t <= k + 1; ++t) EXPECT_EQ(centring_pow(r, k, t), oracle_centre_walk(r, k, t));
    EXPECT_THROW(centring_pow(0, 1, -1), Error);
}

TEST(Beta, FrozenExample) {
    LatticePath a = path_of({1, 0, 1});
    EXPECT_EQ(xs(beta_path(a, 1)), (std::vector<Coord>{1, 1, 1, 0, 1, 0, 1, 1, 1}));
}

TEST(Beta, ReparamToCoverGridOnTheFrozenExample) {
    DigitalImage S = subdivide(interval(1), 3);
    LatticePath a = path_of({1, 0, 1});
    HomotopyGrid G = reparam_to_cover_grid(S, a, 1);
    EXPECT_EQ(xs(G.bottom()), (std::vector<Coord>{1, 1, 1, 0, 0, 0, 1, 1, 1}));
    EXPECT_EQ(xs(G.top()), std::vector<Coord>(9, 1));
    EXPECT_EQ(G.height(), 3u);
    EXPECT_TRUE(verify_grid(G).ok());
}

TEST(StandardCover, FrozenExample) {
    EXPECT_EQ(xs(standard_cover(path_of({0, 1}), 1)), (std::vector<Coord>{1, 1, 2, 3, 4, 4}));
    EXPECT_EQ(xs(standard_cover(path_of({0}), 2)), (std::vector<Coord>{2, 2, 2, 2, 2}));
    EXPECT_EQ(xs(standard_cover(path_of({1, 0}), 1)), (std::vector<Coord>{4, 4, 3, 2, 1, 1}));
}

TEST(StandardCover, SquareLengthAndClosedForm) {
    std::mt19937_64 rng(31);
    const DigitalImage images[] = {diamond(), product(interval(2), interval(2)), box({-1, -1, -1}, {1, 1, 1}), interval(4)};
    for (int trial = 0; trial < 200; ++trial) {
        const DigitalImage& X = images[trial % 4];
        int k = 1 + trial % 2;
        const int K = odd_factor(k);
        LatticePath a = random_path(X, rng, rng() % 8);
        LatticePath hat = standard_cover(a, k);
        DigitalImage SX = subdivide(X, K);
        EXPECT_TRUE(is_path(SX, hat));
        EXPECT_EQ(hat.length(), static_cast<std::size_t>(K) * a.length() + 2 * static_cast<std::size_t>(k));
        EXPECT_EQ(push(rho_map(SX, X, K), hat), reparam(a, K));
        EXPECT_EQ(hat, standard_cover_closed_form(a, k));
        EXPECT_EQ(hat.front(), block_centre(a.front(), K));
        EXPECT_EQ(hat.back(), block_centre(a.back(), K));
    }
}

TEST(StandardCover, LoopsCoverToBasedLoops) {
    DigitalImage D = diamond();
    for (int k = 1; k <= 2; ++k) {
        DigitalImage SD = subdivide(D, odd_factor(k));
        EXPECT_TRUE(is_loop(SD, standard_cover(diamond_generator(), k)));
    }
}

TEST(StandardCover, RejectsJumps) {
    EXPECT_THROW(standard_cover(path_of({0, 2}), 1), Error);
}

TEST(Gamma, CentringPathEndsAtTheCentre) {
    EXPECT_EQ(centring_path({3, 5}, 1), LatticePath({{3, 5}, {4, 4}}));
    EXPECT_EQ(centring_path({0}, 2), LatticePath({{0}, {1}, {2}}));
}

TEST(CoverGrids, RandomLoopsInSubdividedImages) {
    std::mt19937_64 rng(32);
    const DigitalImage bases[] = {diamond(), interval(2), product(interval(1), interval(1))};
    for (int trial = 0; trial < 120; ++trial) {
        const DigitalImage& X = bases[trial % 3];
        int k = 1 + trial % 2;
        DigitalImage SX = subdivide(X, odd_factor(k));
        // Out along a walk from the basepoint and back.
        LatticePath start({*SX.basepoint()});
        const std::size_t n = 1 + rng() % 6;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& nb = SX.neighbours(SX.require_index(start.back()));
            start.steps.push_back(SX.point(nb[rng() % nb.size()]));
        }
        LatticeLoop a = short_concat(start, reverse(start));
        HomotopyGrid b2r = beta_to_reparam_grid(SX, a, k);
        HomotopyGrid b2c = beta_to_cover_grid(SX, a, k);
        HomotopyGrid r2c = reparam_to_cover_grid(SX, a, k);
        EXPECT_TRUE(verify_grid(b2r).ok()) << verify_grid(b2r).summary();
        EXPECT_TRUE(verify_grid(b2c).ok()) << verify_grid(b2c).summary();
        EXPECT_TRUE(verify_grid(r2c).ok()) << verify_grid(r2c).summary();
        EXPECT_EQ(r2c.bottom(), reparam(a, odd_factor(k)));
    }
}

TEST(CoverGrids, EndsOffCentreRejected) {
    DigitalImage SX = subdivide(interval(1), 3);
    EXPECT_THROW(beta_to_cover_grid(SX, path_of({0, 1}), 1), Error);
}

TEST(CoverGrids, TwoDimensionalEdges) {
    DigitalImage D = diamond();
    HomotopyGrid H = reparam_homotopy(D, diamond_generator(), 2);
    CoverEdges e = cover_2d_edges(H, 1);
    DigitalImage SD = subdivide(D, 3);
    for (const auto* p : {&e.bottom, &e.top, &e.left, &e.right}) EXPECT_TRUE(is_path(SD, *p));
    EXPECT_EQ(e.bottom.front(), e.left.front());
    EXPECT_EQ(e.top.back(), e.right.back());
}
