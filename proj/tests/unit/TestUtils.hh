//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tests/unit/TestUtils.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "nestmc/geom/CsgUniverse.hh"

namespace nestmc
{
namespace test
{
//---------------------------------------------------------------------------//
//! Six-plane box faces
inline std::vector<SurfaceSense>
add_box(CsgUniverseBuilder& b, Real3 const& lo, Real3 const& hi)
{
    return {{b.add_surface(PlaneX{lo[0]}), Sense::positive},
            {b.add_surface(PlaneX{hi[0]}), Sense::negative},
            {b.add_surface(PlaneY{lo[1]}), Sense::positive},
            {b.add_surface(PlaneY{hi[1]}), Sense::negative},
            {b.add_surface(PlaneZ{lo[2]}), Sense::positive},
            {b.add_surface(PlaneZ{hi[2]}), Sense::negative}};
}

inline CellDef material_cell(std::vector<SurfaceSense> faces, size_type mat)
{
    CellDef c;
    c.faces = std::move(faces);
    c.material = MaterialId{mat};
    return c;
}

//! Relative difference, symmetric
inline double rel_diff(double a, double b)
{
    double const scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0 ? 0 : std::fabs(a - b) / scale;
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace nestmc
