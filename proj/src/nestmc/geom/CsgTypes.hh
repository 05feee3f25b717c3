//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/geom/CsgTypes.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <vector>

#include "nestmc/base/Types.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! A surface and the side of it a cell occupies
struct SurfaceSense
{
    LocalSurfaceId surface;
    Sense sense{Sense::negative};
};

//! Universe placed inside a cell, with its local origin at \c translation
struct Daughter
{
    UniverseId universe;
    Real3 translation{0, 0, 0};
};

//---------------------------------------------------------------------------//
/*!
 * Cell defined as an intersection of surface half-spaces.
 *
 * Exactly one of \c material and \c daughter is set.
 */
struct CellDef
{
    std::vector<SurfaceSense> faces;
    std::optional<MaterialId> material;
    std::optional<Daughter> daughter;
};

//---------------------------------------------------------------------------//
//! Result of a distance-to-boundary query
struct Intersection
{
    real_type distance{};
    LocalSurfaceId surface;
    Sense sense{Sense::positive};  //!< Sense after crossing the surface
};

//! Surface the particle is known to sit on (just crossed)
struct OnSurface
{
    LocalSurfaceId surface;
    real_type bump{0};
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
