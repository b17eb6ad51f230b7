#include <gtest/gtest.h>

#include <random>

#include "digitopo/digitopo.hpp"

using namespace digitopo;

namespace {

// Floor division by repeated subtraction, independent of floor_div.
Coord slow_floor(Coord v, Coord k) {
    Coord q = 0;
    while (v < 0) {
        v += k;
        --q;
    }
    while (v >= k) {
        v -= k;
        ++q;
    }
    return q;
}

DigitalImage random_image(std::mt19937_64& rng) {
    std::size_t dim = 1 + rng() % 3;
    std::vector<Point> pts;
    for (int i = 0; i < 8; ++i) {
        Point p(dim);
        for (auto& x : p) x = static_cast<Coord>(rng() % 7) - 3;
        pts.push_back(p);
    }
    return DigitalImage(dim, pts, pts.front());
}

}  // namespace

TEST(Subdivision, ProjectionMatchesSlowFloor) {
    for (int k = 1; k <= 6; ++k)
        for (Coord v = -20; v <= 20; ++v) EXPECT_EQ(rho_point({v}, k)[0], slow_floor(v, k)) << "k=" << k << " v=" << v;
}

TEST(Subdivision, SizeAndProjectionSurjective) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        DigitalImage X = random_image(rng);
        int k = 1 + static_cast<int>(rng() % 4);
        DigitalImage SX = subdivide(X, k);
        std::size_t expect = X.size();
        for (std::size_t d = 0; d < X.dim(); ++d) expect *= static_cast<std::size_t>(k);
        EXPECT_EQ(SX.size(), expect);
        DigitalMap rho = rho_map(SX, X, k);
        EXPECT_TRUE(is_continuous(rho));
        EXPECT_TRUE(is_based(rho));
        std::set<Point> hit(rho.values().begin(), rho.values().end());
        EXPECT_EQ(hit.size(), X.size());
    }
}

TEST(Subdivision, CentreBasepointOffsets) {
    EXPECT_EQ(block_centre({0}, 2), (Point{0}));
    EXPECT_EQ(block_centre({0}, 3), (Point{1}));
    EXPECT_EQ(block_centre({0}, 4), (Point{1}));
    EXPECT_EQ(block_centre({0}, 5), (Point{2}));
    EXPECT_EQ(block_centre({1, -1}, 3), (Point{4, -2}));
    EXPECT_EQ(*subdivide(diamond(), 2).basepoint(), (Point{2, 0}));
    EXPECT_EQ(*subdivide(interval(3), 4, BasepointRule::block_origin).basepoint(), (Point{0}));
    EXPECT_EQ(*subdivide(interval(1, 3, 2), 3, BasepointRule::block_origin).basepoint(), (Point{6}));
}

TEST(Subdivision, ShippedSD2IsTheSubdivision) {
    EXPECT_EQ(io::fixture_image("SD2"), subdivide(diamond(), 2));
}

TEST(PartialProjection, FrozenTables) {
    auto row = [](int k) {
        std::vector<Coord> out;
        for (Coord v = 0; v < 2 * k; ++v) out.push_back(rho_c_coord(v, k));
        return out;
    };
    EXPECT_EQ(row(3), (std::vector<Coord>{0, 0, 1, 2, 2, 3}));
    EXPECT_EQ(row(4), (std::vector<Coord>{0, 1, 1, 2, 3, 4, 4, 5}));
    EXPECT_EQ(row(5), (std::vector<Coord>{0, 1, 1, 2, 3, 4, 5, 5, 6, 7}));
    EXPECT_THROW(rho_c_coord(0, 2), Error);
}

TEST(PartialProjection, FactorsTheProjectionAndKeepsTheBasepoint) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        DigitalImage X = random_image(rng);
        for (int k = 3; k <= 6; ++k) {
            DigitalMap rc = rho_c_map(X, k);
            EXPECT_TRUE(is_continuous(rc));
            EXPECT_TRUE(is_based(rc)) << "k=" << k;
            DigitalImage SX = subdivide(X, k), SX1 = subdivide(X, k - 1);
            EXPECT_EQ(compose(rho_map(SX1, X, k - 1), rc), rho_map(SX, X, k));
        }
    }
}

TEST(Subdivision, ProjectionsCompose) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        DigitalImage X = random_image(rng);
        int p = 1 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 3);
        DigitalImage Sq = subdivide(X, q), Spq = subdivide(X, p * q);
        DigitalMap inner = DigitalMap::from_function(Spq, Sq, [&](const Point& x) { return rho_point(x, p); });
        EXPECT_EQ(compose(rho_map(Sq, X, q), inner), rho_map(Spq, X, p * q));
    }
}

TEST(Subdivision, BlocksPartitionTheSubdivision) {
    DigitalImage X = product(interval(1), interval(2));
    DigitalImage SX = subdivide(X, 3);
    std::set<Point> seen;
    for (const auto& x : X.points())
        for (const auto& q : block(x, 3)) {
            EXPECT_EQ(rho_point(q, 3), x);
            EXPECT_TRUE(seen.insert(q).second);
        }
    EXPECT_EQ(seen.size(), SX.size());
}

TEST(Subdivision, FactorBelowOneRejected) {
    EXPECT_THROW(subdivide(diamond(), 0), Error);
}
