//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/NavigatorBase.hh
//---------------------------------------------------------------------------//
#pragma once

#include "nestmc/geom/Surface.hh"

#include "GeoState.hh"
#include "GeometryParams.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Operations shared by every navigator: they do not depend on universe type.
 */
class NavigatorBase
{
  public:
    explicit NavigatorBase(GeometryParams const& params) : params_(&params)
    {
    }

    GeometryParams const& params() const { return *params_; }

    //! Advance within the current cell
    static void move_within_cell(GeoState& state, real_type distance)
    {
        NMC_ASSERT(distance >= 0);
        axpy(distance, state.dir, &state.pos);
        state.next_surface.reset();
        state.on_surface.reset();
    }

    //! Advance to the surface found by the last distance query
    static void move_to_surface(GeoState& state)
    {
        NMC_EXPECT(state.next_surface);
        axpy(state.next_distance, state.dir, &state.pos);
    }

    //! Replace the direction; the crossed surface may lie ahead again
    static void change_direction(GeoState& state, Real3 const& dir)
    {
        state.dir = dir;
        state.next_surface.reset();
        state.on_surface.reset();
    }

  protected:
    GeometryParams const* params_;

    //! Start a new walk: clear the stack and records
    static void reset(GeoState& state, Real3 const& pos, Real3 const& dir)
    {
        state.pos = pos;
        state.dir = dir;
        state.num_levels = 0;
        state.next_surface.reset();
        state.on_surface.reset();
        state.outside = false;
    }

    //! Push bumped position past the surface and return the surface point
    static Real3 bump_across(GeoState& state)
    {
        Real3 const surface_pos = state.pos;
        axpy(bump_distance(surface_pos), state.dir, &state.pos);
        return surface_pos;
    }

    /*!
     * Handle a crossing that found no cell at its level.
     *
     * At the root, a boundary surface applies its condition. Reflection
     * flips the normal direction component, bumps back inside from the
     * surface point, and relocates from the root with \c find.
     */
    template<class FindFromRoot>
    TrackStatus exit_level(GeoState& state,
                           SurfaceRecord const& rec,
                           Real3 const& surface_pos,
                           FindFromRoot&& find) const
    {
        if (rec.level != 0)
        {
            return TrackStatus::lost;
        }
        RootSurface const& rs = params_->root_surfaces[rec.surface.get()];
        if (!rs.boundary)
        {
            return TrackStatus::lost;
        }
        if (rs.bc == BoundaryCondition::vacuum)
        {
            state.outside = true;
            state.num_levels = 0;
            state.on_surface = rec;
            return TrackStatus::leaked;
        }
        Real3 dir = state.dir;
        dir[to_int(rs.axis)] = -dir[to_int(rs.axis)];
        change_direction(state, dir);
        state.pos = surface_pos;
        axpy(bump_distance(surface_pos), state.dir, &state.pos);
        TrackStatus status = find(state);
        state.on_surface
            = SurfaceRecord{0, rec.surface, flip_sense(rec.sense)};
        return status;
    }
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
