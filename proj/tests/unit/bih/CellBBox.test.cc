//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tests/unit/bih/CellBBox.test.cc
//---------------------------------------------------------------------------//
#include "nestmc/bih/CellBBox.hh"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "nestmc/base/Assert.hh"

namespace nestmc
{
namespace test
{
namespace
{
CellDef cell_of(std::vector<std::pair<size_type, Sense>> faces)
{
    CellDef c;
    for (auto [s, sense] : faces)
    {
        c.faces.push_back({LocalSurfaceId(s), sense});
    }
    c.material = MaterialId(0);
    return c;
}

bool cell_contains(std::vector<Surface> const& surfaces,
                   CellDef const& cell,
                   Real3 const& pos)
{
    for (auto const& f : cell.faces)
    {
        if (sense_of(surfaces[f.surface.get()], pos) != f.sense)
        {
            return false;
        }
    }
    return true;
}

std::vector<Surface> hex_planes(real_type apothem)
{
    std::vector<Surface> result;
    for (int i = 0; i < 6; ++i)
    {
        real_type const theta = i * M_PI / 3;
        result.push_back(
            GeneralPlane{{std::cos(theta), std::sin(theta), 0}, apothem});
    }
    return result;
}

Aabb const world{{-2, -2, -2}, {2, 2, 2}};

}  // namespace

//---------------------------------------------------------------------------//
TEST(CellBBoxTest, planes)
{
    std::vector<Surface> s{PlaneX{-1}, PlaneX{0.5}, PlaneZ{1}};
    auto cell = cell_of(
        {{0, Sense::positive}, {1, Sense::negative}, {2, Sense::negative}});
    Aabb expected{{-1, -2, -2}, {0.5, 2, 1}};
    EXPECT_EQ(expected, compute_cell_bbox(world, s, cell));
}

TEST(CellBBoxTest, cylinder)
{
    std::vector<Surface> s{CylinderZ{0.5, 0, 0.4}};
    Aabb inside{{0.1, -0.4, -2}, {0.9, 0.4, 2}};
    auto bb = compute_cell_bbox(world, s, cell_of({{0, Sense::negative}}));
    for (int i = 0; i < 3; ++i)
    {
        EXPECT_DOUBLE_EQ(inside.lo[i], bb.lo[i]);
        EXPECT_DOUBLE_EQ(inside.hi[i], bb.hi[i]);
    }
    // Outside of a cylinder does not tighten
    EXPECT_EQ(world, compute_cell_bbox(world, s, cell_of({{0, Sense::positive}})));
}

TEST(CellBBoxTest, sphere)
{
    std::vector<Surface> s{Sphere{{0, 0, 1}, 0.5}};
    Aabb expected{{-0.5, -0.5, 0.5}, {0.5, 0.5, 1.5}};
    EXPECT_EQ(expected,
              compute_cell_bbox(world, s, cell_of({{0, Sense::negative}})));
}

TEST(CellBBoxTest, hexagon)
{
    auto s = hex_planes(1);
    std::vector<std::pair<size_type, Sense>> faces;
    for (size_type i = 0; i < 6; ++i)
    {
        faces.push_back({i, Sense::negative});
    }
    auto bb = compute_cell_bbox(world, s, cell_of(faces));
    // Flats normal to x, vertices on the y axis
    real_type const circum = 2 / std::sqrt(3.0);
    EXPECT_NEAR(-1, bb.lo[0], 1e-8);
    EXPECT_NEAR(1, bb.hi[0], 1e-8);
    EXPECT_NEAR(-circum, bb.lo[1], 1e-8);
    EXPECT_NEAR(circum, bb.hi[1], 1e-8);
    EXPECT_LE(bb.lo[1], -circum);
    EXPECT_GE(bb.hi[0], 1);
    EXPECT_EQ(-2, bb.lo[2]);
}

TEST(CellBBoxTest, contradiction)
{
    std::vector<Surface> s{PlaneX{1}, PlaneX{0}};
    auto cell = cell_of({{0, Sense::positive}, {1, Sense::negative}});
    EXPECT_THROW(compute_cell_bbox(world, s, cell), GeometryError);
}

TEST(CellBBoxTest, sampled_points_enclosed)
{
    // Pin cell moderator, fuel, and a hexagonal prism with a hole
    std::vector<Surface> s{PlaneX{-1}, PlaneX{1}, PlaneY{-1}, PlaneY{1},
                           CylinderZ{0.2, -0.1, 0.45}};
    for (auto const& h : hex_planes(1.5))
    {
        s.push_back(h);
    }
    std::vector<CellDef> cells{
        cell_of({{0, Sense::positive},
                 {1, Sense::negative},
                 {2, Sense::positive},
                 {3, Sense::negative},
                 {4, Sense::positive}}),
        cell_of({{4, Sense::negative}}),
        cell_of({{4, Sense::positive},
                 {5, Sense::negative},
                 {6, Sense::negative},
                 {7, Sense::negative},
                 {8, Sense::negative},
                 {9, Sense::negative},
                 {10, Sense::negative}}),
    };
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2, 2);
    int failures = 0;
    int hits = 0;
    for (auto const& cell : cells)
    {
        auto bb = compute_cell_bbox(world, s, cell);
        for (int i = 0; i < 20000; ++i)
        {
            Real3 pos{u(rng), u(rng), u(rng)};
            if (cell_contains(s, cell, pos))
            {
                ++hits;
                failures += !bb.contains(pos);
            }
        }
    }
    EXPECT_GT(hits, 10000);
    EXPECT_EQ(0, failures);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace nestmc
