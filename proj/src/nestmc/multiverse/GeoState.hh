//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/GeoState.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <optional>

#include "nestmc/base/Assert.hh"
#include "nestmc/base/Types.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Maximum universe nesting depth of a validated model
inline constexpr size_type max_levels = 6;

//! One entry of the universe stack
struct LevelState
{
    UniverseId universe;
    LocalCellId cell;
    Real3 translation{0, 0, 0};  //!< Accumulated offset of the local origin

    friend bool operator==(LevelState const&, LevelState const&) = default;
};

//! Surface at a given stack level, with the sense on the far side
struct SurfaceRecord
{
    size_type level{};
    LocalSurfaceId surface;
    Sense sense{Sense::positive};

    friend bool operator==(SurfaceRecord const&, SurfaceRecord const&) = default;
};

//! Outcome of a tracking operation that may end the walk
enum class TrackStatus : unsigned char
{
    ok,
    leaked,  //!< Left the root through a vacuum boundary
    lost  //!< No cell contains the position
};

//---------------------------------------------------------------------------//
/*!
 * Per-particle geometry state.
 *
 * The stack runs from the root (level 0) to the most embedded universe,
 * whose cell has a material. \c next_surface is set by a distance query
 * and cleared by moves inside the cell or direction changes;
 * \c on_surface records the surface just crossed so the next distance
 * query can exclude it.
 */
struct GeoState
{
    Real3 pos{0, 0, 0};
    Real3 dir{0, 0, 1};
    std::array<LevelState, max_levels> levels{};
    size_type num_levels{0};

    std::optional<SurfaceRecord> next_surface;
    real_type next_distance{0};
    std::optional<SurfaceRecord> on_surface;
    bool outside{false};

    LevelState const& bottom() const
    {
        NMC_ASSERT(num_levels > 0);
        return levels[num_levels - 1];
    }

    //! Position in the frame of the given level
    Real3 local_pos(size_type level) const
    {
        NMC_ASSERT(level < num_levels);
        return pos - levels[level].translation;
    }
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
