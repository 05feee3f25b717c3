//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tests/unit/arrays/RectArray.test.cc
//---------------------------------------------------------------------------//
#include "nestmc/arrays/RectArray.hh"

#include <gtest/gtest.h>

#include "nestmc/arrays/PseudoArray.hh"
#include "nestmc/harness/RandomGeometry.hh"

#include "TestUtils.hh"

namespace nestmc
{
namespace test
{
namespace
{
RectGrid::EdgeArray
make_edges(std::vector<real_type> x, std::vector<real_type> y, std::vector<real_type> z)
{
    return {std::move(x), std::move(y), std::move(z)};
}

std::vector<Daughter> fill_n(size_type n)
{
    std::vector<Daughter> result;
    for (size_type i = 0; i < n; ++i)
    {
        result.push_back({UniverseId(100 + i), {0, 0, 0}});
    }
    return result;
}

// Oracle: first interval with e[i] <= x < e[i + 1]
std::optional<size_type> linear_find(std::span<real_type const> e, real_type x)
{
    for (size_type i = 0; i + 1 < e.size(); ++i)
    {
        if (e[i] <= x && x < e[i + 1])
        {
            return i;
        }
    }
    return std::nullopt;
}

}  // namespace

//---------------------------------------------------------------------------//
TEST(RectGridTest, find)
{
    RectGrid grid(make_edges({0, 1, 2, 4}, {0, 1}, {0, 1}));
    EXPECT_EQ(2, grid.find(Axis::x, 2.5));
    EXPECT_EQ(1, grid.find(Axis::x, 1.0));
    EXPECT_EQ(0, grid.find(Axis::x, 0.0));
    EXPECT_EQ(2, grid.find(Axis::x, 3.999));
    EXPECT_EQ(std::nullopt, grid.find(Axis::x, 4.0));
    EXPECT_EQ(std::nullopt, grid.find(Axis::x, -1e-300));
    EXPECT_EQ((Ijk{3, 1, 1}), grid.dims());
    EXPECT_EQ(3, grid.num_cells());
}

TEST(RectGridTest, surfaces)
{
    RectGrid grid(make_edges({0, 1, 2}, {0, 1}, {0, 1}));
    EXPECT_EQ(7, grid.num_surfaces());
    EXPECT_EQ(LocalSurfaceId(0), grid.edge_surface(Axis::x, 0));
    EXPECT_EQ(LocalSurfaceId(3), grid.edge_surface(Axis::y, 0));
    EXPECT_EQ(LocalSurfaceId(6), grid.edge_surface(Axis::z, 1));
    auto [ax, edge] = grid.surface_edge(LocalSurfaceId(4));
    EXPECT_EQ(Axis::y, ax);
    EXPECT_EQ(1, edge);
}

TEST(RectGridTest, invalid)
{
    EXPECT_THROW(RectGrid(make_edges({0}, {0, 1}, {0, 1})), ConfigError);
    EXPECT_THROW(RectGrid(make_edges({0, 1, 1}, {0, 1}, {0, 1})), ConfigError);
    RectGrid grid(make_edges({0, 1}, {0, 1}, {0, 1}));
    EXPECT_THROW(RectArrayUniverse(grid, fill_n(2)), ConfigError);
}

TEST(RectGridTest, index)
{
    RectGrid grid(make_edges({0, 1, 2, 3}, {0, 1, 2}, {0, 1}));
    for (size_type i = 0; i < grid.num_cells(); ++i)
    {
        EXPECT_EQ(i, grid.index(grid.ijk(i)));
    }
    EXPECT_EQ(4, grid.index({1, 1, 0}));
}

TEST(RectGridTest, distance_and_cross)
{
    RectGrid grid(make_edges({0, 1, 2, 4}, {0, 1}, {0, 1}));
    auto isect = rect_distance_to_surface(
        grid, {2, 0, 0}, {2.5, 0.5, 0.5}, {1, 0, 0});
    ASSERT_TRUE(isect);
    EXPECT_EQ(1.5, isect->distance);
    EXPECT_EQ(Axis::x, isect->axis);
    EXPECT_EQ(Sense::positive, isect->dir_sign);

    isect = rect_distance_to_surface(
        grid, {1, 0, 0}, {1.5, 0.5, 0.5}, {-0.6, 0.8, 0});
    ASSERT_TRUE(isect);
    EXPECT_EQ(Axis::y, isect->axis);
    EXPECT_DOUBLE_EQ(0.625, isect->distance);

    EXPECT_EQ((Ijk{2, 0, 0}),
              rect_cross_surface(grid, {1, 0, 0}, Axis::x, Sense::positive));
    EXPECT_EQ(std::nullopt,
              rect_cross_surface(grid, {2, 0, 0}, Axis::x, Sense::positive));
    EXPECT_EQ(std::nullopt,
              rect_cross_surface(grid, {0, 0, 0}, Axis::y, Sense::negative));
}

TEST(RectGridTest, binary_matches_linear)
{
    RandomSource rng(3);
    int failures = 0;
    for (int t = 0; t < 200; ++t)
    {
        auto edges = random_edges(rng, rng.integer(1, 20), rng.uniform(-5, 5));
        RectGrid grid(make_edges(edges, {0, 1}, {0, 1}));
        for (int i = 0; i < 50; ++i)
        {
            real_type x = rng.uniform(edges.front() - 1, edges.back() + 1);
            if (i % 5 == 0)
            {
                // Exactly on an edge
                x = edges[rng.integer(0, edges.size() - 1)];
            }
            failures += grid.find(Axis::x, x) != linear_find(edges, x);
        }
    }
    EXPECT_EQ(0, failures);
}

TEST(RectArrayTest, surface_interface)
{
    RectArrayUniverse arr(RectGrid(make_edges({0, 1, 2}, {0, 1}, {0, 1})),
                          fill_n(2));
    EXPECT_EQ(7, arr.num_surfaces());
    EXPECT_EQ(LocalCellId(1), arr.find_cell({1.0, 0.5, 0.5}));
    EXPECT_EQ(std::nullopt, arr.find_cell({2.0, 0.5, 0.5}));
    EXPECT_EQ(UniverseId(101), arr.daughter(LocalCellId(1)).universe);

    auto isect = arr.intersect(LocalCellId(0), {0.5, 0.5, 0.5}, {1, 0, 0});
    ASSERT_TRUE(isect);
    EXPECT_EQ(0.5, isect->distance);
    EXPECT_EQ(LocalSurfaceId(1), isect->surface);
    EXPECT_EQ(Sense::positive, isect->sense);

    // Skipping a face, and ignoring the face just crossed
    std::vector<char> skip(7, 0);
    skip[1] = 1;
    isect = arr.intersect(LocalCellId(0), {0.5, 0.5, 0.5}, {0.8, 0.6, 0}, {}, skip);
    ASSERT_TRUE(isect);
    EXPECT_EQ(LocalSurfaceId(4), isect->surface);
    OnSurface const on{LocalSurfaceId(1), 1e-8};
    isect = arr.intersect(LocalCellId(1), {1.0, 0.5, 0.5}, {1, 0, 0}, on);
    ASSERT_TRUE(isect);
    EXPECT_EQ(LocalSurfaceId(2), isect->surface);
    EXPECT_EQ(1.0, isect->distance);
    EXPECT_EQ(std::nullopt,
              arr.intersect(LocalCellId(1), {1.0, 0.5, 0.5}, {-1, 0, 0}, on));

    EXPECT_EQ(LocalCellId(1),
              arr.cross_surface({1.0, 0.5, 0.5},
                                LocalCellId(0),
                                LocalSurfaceId(1),
                                Sense::positive));
    EXPECT_EQ(std::nullopt,
              arr.cross_surface({2.0, 0.5, 0.5},
                                LocalCellId(1),
                                LocalSurfaceId(2),
                                Sense::positive));
}

TEST(RectArrayTest, matches_pseudo_array)
{
    RandomSource rng(20240611);
    int failures = 0;
    int checked = 0;
    for (int t = 0; t < 20; ++t)
    {
        auto arr = random_rect_array(rng, 6);
        auto pseudo = to_pseudo_array_rect(arr);
        auto const d = arr.grid().dims();
        EXPECT_EQ(d[0] + d[1] + d[2] + 3, arr.num_surfaces());
        ASSERT_EQ(arr.num_cells(), pseudo.num_cells());
        for (int i = 0; i < 100; ++i)
        {
            Real3 pos = rng.point(arr.bbox());
            Real3 dir = rng.direction();
            auto ac = arr.find_cell(pos);
            auto pc = pseudo.find_cell(pos);
            if (!ac || !pc)
            {
                ++failures;
                continue;
            }
            auto const& ad = arr.daughter(*ac);
            auto const& pd = *pseudo.cell(*pc).daughter;
            failures += ad.universe != pd.universe
                        || ad.translation != pd.translation;

            auto ai = arr.intersect(*ac, pos, dir);
            auto pi = pseudo.intersect(*pc, pos, dir);
            if (!ai || !pi)
            {
                ++failures;
                continue;
            }
            failures += rel_diff(ai->distance, pi->distance) > 1e-12;
            failures += ai->sense != pi->sense;
            // Same plane on both sides
            auto const& as = arr.grid().surface_edge(ai->surface);
            auto const& ps = pseudo.surface(pi->surface);
            failures += plane_axis(ps) != as.first
                        || *plane_position(ps)
                               != arr.grid().edges(as.first)[as.second];
            ++checked;
        }
    }
    EXPECT_GE(checked, 1900);
    EXPECT_EQ(0, failures);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace nestmc
