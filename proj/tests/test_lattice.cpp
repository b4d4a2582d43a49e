#include "topobound/lattice.hpp"

#include <gtest/gtest.h>

#include "topobound/rng.hpp"

using namespace topobound;

namespace {

// Reference: torus distance by trying every wraparound shift.
int torus_delta_naive(int a, int b, int extent) {
    int best = extent;
    for (int s = -2; s <= 2; ++s) best = std::min(best, std::abs(a - b + s * extent));
    return best;
}

} // namespace

TEST(Lattice, TorusDeltaMatchesNaive) {
    for (int extent = 1; extent <= 12; ++extent)
        for (int a = 0; a < extent; ++a)
            for (int b = 0; b < extent; ++b)
                EXPECT_EQ(torus_delta(a, b, extent), torus_delta_naive(a, b, extent));
}

TEST(Lattice, LinfDistance) {
    EXPECT_EQ(linf_distance({1, 0}, {4, 5}, 6), 3);
    EXPECT_EQ(linf_distance({0, 0}, {5, 0}, 6), 1);
    EXPECT_EQ(linf_distance({2, 2}, {2, 2}, 6), 0);
    EXPECT_THROW(linf_distance({0}, {0, 0}, 6), ContractError);
}

TEST(Lattice, RegionBasics) {
    Region r({5, 1, 3, 1});
    EXPECT_EQ(r.qubits(), (std::vector<std::size_t>{1, 3, 5}));
    EXPECT_TRUE(r.contains(3));
    EXPECT_FALSE(r.contains(2));
    EXPECT_EQ(r.complement(7).qubits(), (std::vector<std::size_t>{0, 2, 4, 6}));
    EXPECT_TRUE(r.intersects(Region({3, 9})));
    EXPECT_FALSE(r.intersects(Region({0, 2})));
    EXPECT_TRUE(r.contains_all(Region({1, 5})));
    EXPECT_FALSE(r.contains_all(Region({1, 2})));
    EXPECT_EQ(Region::all(3).qubits(), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Lattice, CubeWindowMatchesEnumeration) {
    // cube_contains against the literal window definition, all centers and
    // side lengths on a small doubled torus.
    int extent = 8;
    for (int cx = 0; cx < extent; ++cx)
        for (int cy = 0; cy < extent; ++cy)
            for (int R = 1; R <= extent + 1; ++R) {
                std::vector<int> center{cx, cy};
                for (int px = 0; px < extent; ++px)
                    for (int py = 0; py < extent; ++py) {
                        bool want = false;
                        if (R >= extent) {
                            want = true;
                        } else {
                            bool okx = false, oky = false;
                            for (int off = -(R - 1) / 2; off <= R / 2; ++off) {
                                if (((cx + off) % extent + extent) % extent == px) okx = true;
                                if (((cy + off) % extent + extent) % extent == py) oky = true;
                            }
                            want = okx && oky;
                        }
                        EXPECT_EQ(cube_contains(center, R, extent, {px, py}), want)
                            << cx << "," << cy << " R=" << R << " p=" << px << "," << py;
                    }
            }
}

TEST(Lattice, CubeSizesOnFullGrid) {
    // Coordinates covering the full doubled grid: cube of side R holds R^2
    // points (capped at the torus size).
    int extent = 6;
    std::vector<std::vector<int>> coords;
    for (int x = 0; x < extent; ++x)
        for (int y = 0; y < extent; ++y) coords.push_back({x, y});
    for (int R = 1; R <= extent; ++R) {
        auto reg = cube_region(coords, extent, {3, 2}, R);
        EXPECT_EQ(reg.size(), static_cast<std::size_t>(R * R));
    }
    EXPECT_EQ(cube_region(coords, extent, {3, 2}, extent + 5).size(), coords.size());
    EXPECT_THROW(cube_region(coords, extent, {3, 2}, 0), ContractError);
}

TEST(Lattice, RegionDistanceAndDiameter) {
    std::vector<std::vector<int>> coords = {{0, 0}, {1, 0}, {0, 1}, {5, 5}, {3, 3}};
    int extent = 6;
    EXPECT_EQ(region_distance(coords, extent, Region({0, 1}), Region({4})), 3);
    // {5,5} wraps next to {0,0}.
    EXPECT_EQ(region_distance(coords, extent, Region({0}), Region({3})), 1);
    EXPECT_EQ(region_diameter(coords, extent, Region({0})), 0);
    EXPECT_EQ(region_diameter(coords, extent, Region({0, 1, 4})), 3);
    EXPECT_THROW(region_distance(coords, extent, Region(), Region({0})), ContractError);
}

TEST(Lattice, OneCenterIsOptimalAndTieBreaksLow) {
    Rng rng(7);
    int extent = 10;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<int>> coords;
        for (int i = 0; i < 30; ++i)
            coords.push_back({static_cast<int>(rng.next_below(extent)),
                              static_cast<int>(rng.next_below(extent))});
        std::vector<std::size_t> a;
        for (int i = 0; i < 4; ++i) a.push_back(rng.next_below(coords.size()));
        Region reg(a);
        auto center = one_center(coords, extent, reg);
        auto radius = [&](std::size_t q) {
            int r = 0;
            for (auto qa : reg.qubits())
                r = std::max(r, linf_distance(coords[q], coords[qa], extent));
            return r;
        };
        for (std::size_t q = 0; q < coords.size(); ++q) {
            EXPECT_GE(radius(q), radius(center));
            if (q < center) EXPECT_GT(radius(q), radius(center));
        }
    }
}

TEST(Lattice, BallRegion) {
    std::vector<std::vector<int>> coords;
    for (int x = 0; x < 8; ++x) coords.push_back({x, 0});
    auto ball = ball_region(coords, 8, Region({0}), 2);
    EXPECT_EQ(ball.qubits(), (std::vector<std::size_t>{0, 1, 2, 6, 7}));
    auto ball0 = ball_region(coords, 8, Region({3}), 0);
    EXPECT_EQ(ball0.qubits(), (std::vector<std::size_t>{3}));
}
