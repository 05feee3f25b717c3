//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tests/unit/geom/Surface.test.cc
//---------------------------------------------------------------------------//
#include "nestmc/geom/Surface.hh"

#include <cmath>

#include "nestmc/base/Assert.hh"
#include "nestmc/geom/CsgUniverse.hh"
#include "nestmc/harness/RandomGeometry.hh"

#include "TestUtils.hh"

namespace nestmc
{
namespace test
{
//---------------------------------------------------------------------------//
TEST(SurfaceTest, sense)
{
    EXPECT_EQ(Sense::positive, sense_of(PlaneX{1.0}, {2, 0, 0}));
    EXPECT_EQ(Sense::negative, sense_of(PlaneX{1.0}, {0.5, 0, 0}));
    EXPECT_EQ(Sense::negative, sense_of(CylinderZ{0, 0, 1}, {0, 0, 5}));
    EXPECT_EQ(Sense::positive, sense_of(CylinderZ{0, 0, 1}, {1, 1, 0}));
    // Exactly on the surface
    EXPECT_EQ(Sense::positive, sense_of(PlaneZ{0}, {0, 0, 0}));
    EXPECT_EQ(Sense::positive, sense_of(Sphere{{0, 0, 0}, 2}, {0, 2, 0}));
    EXPECT_EQ(Sense::negative,
              sense_of(GeneralPlane{{0, 1, 0}, 3}, {100, 2.5, -100}));
}

TEST(SurfaceTest, distance)
{
    Real3 const origin{0, 0, 0};
    auto d = distance_to(PlaneX{1}, origin, {1, 0, 0}, 0);
    ASSERT_TRUE(d);
    EXPECT_DOUBLE_EQ(1.0, *d);

    d = distance_to(CylinderZ{0, 0, 1}, origin, {1, 0, 0}, 0);
    ASSERT_TRUE(d);
    EXPECT_DOUBLE_EQ(1.0, *d);

    EXPECT_FALSE(distance_to(PlaneX{1}, origin, {0, 1, 0}, 0));
    // Behind the ray
    EXPECT_FALSE(distance_to(PlaneX{-1}, origin, {1, 0, 0}, 0));
    // Cylinder parallel to the axis
    EXPECT_FALSE(distance_to(CylinderZ{0, 0, 1}, origin, {0, 0, 1}, 0));

    // From outside: nearer root
    d = distance_to(Sphere{{5, 0, 0}, 1}, origin, {1, 0, 0}, 0);
    ASSERT_TRUE(d);
    EXPECT_DOUBLE_EQ(4.0, *d);
    // Exclusion band skips the near root
    d = distance_to(Sphere{{5, 0, 0}, 1}, {4, 0, 0}, {1, 0, 0}, 1e-8);
    ASSERT_TRUE(d);
    EXPECT_DOUBLE_EQ(2.0, *d);

    // Tangent ray: no crossing
    EXPECT_FALSE(distance_to(CylinderZ{0, 0, 1}, {-5, 1, 0}, {1, 0, 0}, 0));

    // General plane at 45 degrees
    real_type const s = std::sqrt(0.5);
    d = distance_to(GeneralPlane{{s, s, 0}, s}, origin, {1, 0, 0}, 0);
    ASSERT_TRUE(d);
    EXPECT_NEAR(1.0, *d, 1e-15);
}

//---------------------------------------------------------------------------//
// Roots near the particle lose precision with the textbook formula
TEST(SurfaceTest, stable_roots)
{
    // Powers of two keep x^2 - 1 exact, isolating the root formula
    for (int k : {10, 20, 26})
    {
        double const eps = std::ldexp(1.0, -k);
        double const x = 1 - eps;
        auto d = distance_to(CylinderZ{0, 0, 1}, {x, 0, 0}, {1, 0, 0}, 0);
        ASSERT_TRUE(d);
        EXPECT_LT(rel_diff(*d, eps), 1e-14) << k;

        d = distance_to(Sphere{{0, 0, 0}, 1}, {0, 0, -x}, {0, 0, -1}, 0);
        ASSERT_TRUE(d);
        EXPECT_LT(rel_diff(*d, eps), 1e-14) << k;
    }

    // Far grazing ray: the chord is resolved despite |pos|^2 ~ 1e12
    double const y = 0.999;
    auto d = distance_to(CylinderZ{0, 0, 1}, {-1e6, y, 0}, {1, 0, 0}, 0);
    ASSERT_TRUE(d);
    long double const half_chord = std::sqrt(1.0L - (long double)y * y);
    EXPECT_LT(rel_diff(*d, static_cast<double>(1e6L - half_chord)), 1e-14);
    d = distance_to(Sphere{{0, 0, 0}, 1}, {0, y, -1e6}, {0, 0, 1}, 0);
    ASSERT_TRUE(d);
    EXPECT_LT(rel_diff(*d, static_cast<double>(1e6L - half_chord)), 1e-14);

    // t^2 - 2e8 t + 1 = 0 has a tiny root lost by the textbook formula
    auto t = solve_half_quadratic(1, -1e8, 1, 0);
    ASSERT_TRUE(t);
    EXPECT_LT(rel_diff(*t, 5e-9), 1e-12);
}

TEST(SurfaceTest, validation)
{
    EXPECT_THROW(validate_surface(CylinderZ{0, 0, 0}), ConfigError);
    EXPECT_THROW(validate_surface(Sphere{{0, 0, 0}, -1}), ConfigError);
    EXPECT_THROW(validate_surface(GeneralPlane{{1, 1, 0}, 0}), ConfigError);
    EXPECT_NO_THROW(validate_surface(GeneralPlane{{0.6, 0.8, 0}, 2}));
}

TEST(SurfaceTest, dedup)
{
    CsgUniverseBuilder b;
    auto a = b.add_surface(PlaneX{1});
    EXPECT_EQ(a, b.add_surface(PlaneX{1 + 1e-10}));
    EXPECT_NE(a, b.add_surface(PlaneX{1 + 1e-8}));
    EXPECT_NE(a, b.add_surface(PlaneY{1}));
    auto c = b.add_surface(CylinderZ{0, 0, 1});
    EXPECT_EQ(c, b.add_surface(CylinderZ{1e-10, 0, 1}));
    EXPECT_EQ(4, b.num_surfaces());
}

TEST(SurfaceTest, translated)
{
    RandomSource rng(12345);
    std::vector<Surface> surfaces{PlaneX{1},
                                  PlaneY{-2},
                                  PlaneZ{0.5},
                                  GeneralPlane{{0.6, 0, 0.8}, 1.5},
                                  CylinderZ{1, 2, 0.5},
                                  Sphere{{1, -1, 2}, 3}};
    for (auto const& s : surfaces)
    {
        for (int i = 0; i < 100; ++i)
        {
            Real3 const t{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
            Real3 const p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
            Surface const moved = translated(s, t);
            double const f_orig = std::visit([&](auto const& x) { return x.evaluate(p); }, s);
            double const f_moved = std::visit(
                [&](auto const& x) { return x.evaluate(p + t); }, moved);
            EXPECT_NEAR(f_orig, f_moved, 1e-10) << to_string(s);
        }
    }
}

//---------------------------------------------------------------------------//
// Crossing a returned distance flips the sense
TEST(SurfaceTest, sense_distance_property)
{
    RandomSource rng(2024);
    int checked = 0;
    int failures = 0;
    for (int i = 0; i < 4000; ++i)
    {
        Surface s;
        switch (i % 6)
        {
            case 0: s = PlaneX{rng.uniform(-5, 5)}; break;
            case 1: s = PlaneY{rng.uniform(-5, 5)}; break;
            case 2: s = PlaneZ{rng.uniform(-5, 5)}; break;
            case 3: s = GeneralPlane{rng.direction(), rng.uniform(-5, 5)}; break;
            case 4:
                s = CylinderZ{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 4)};
                break;
            default:
                s = Sphere{{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)},
                           rng.uniform(0.1, 4)};
        }
        Real3 const pos{rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6)};
        Real3 const dir = rng.direction();
        auto d = distance_to(s, pos, dir, 0);
        if (!d)
        {
            continue;
        }
        Real3 at = pos;
        axpy(*d, dir, &at);
        real_type const eps = bump_distance(at);
        if (*d <= 2 * eps)
        {
            continue;
        }
        // Skip grazing crossings whose second root lies within the band
        if (auto d2 = distance_to(s, pos, dir, *d); d2 && *d2 - *d < 4 * eps)
        {
            continue;
        }
        Real3 before = pos;
        Real3 after = pos;
        axpy(*d - eps, dir, &before);
        axpy(*d + eps, dir, &after);
        ++checked;
        failures += (sense_of(s, before) == sense_of(s, after));
        // The sense is constant between the start and the crossing
        Real3 mid = pos;
        axpy(*d / 2, dir, &mid);
        failures += (sense_of(s, mid) != sense_of(s, before));
    }
    EXPECT_GE(checked, 1000);
    EXPECT_EQ(0, failures);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace nestmc
