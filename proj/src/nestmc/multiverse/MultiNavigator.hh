//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/MultiNavigator.hh
//---------------------------------------------------------------------------//
#pragma once

#include "NavigatorBase.hh"
#include "Trackers.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Generic multi-universe tracking over a dispatch mechanism.
 *
 * \c Dispatch maps a universe ID and a functor to a call of that functor with
 * a tracker for the universe: a virtual interface, a type switch, or the CSG
 * tracker only.
 *
 * Distances are the minimum over every stack level in that level's frame;
 * coincident daughter faces are skipped by the trackers so that crossings
 * belong to the least embedded level. Equal distances resolve to the top-most
 * level.
 */
template<class Dispatch>
class MultiNavigator : public NavigatorBase
{
  public:
    explicit MultiNavigator(GeometryParams const& params)
        : NavigatorBase(params), dispatch_(params)
    {
    }

    Dispatch const& dispatch() const { return dispatch_; }

    //! Locate a point from the root; lost with no levels if outside the root
    TrackStatus
    initialize(GeoState& state, Real3 const& pos, Real3 const& dir) const
    {
        reset(state, pos, dir);
        return this->find_from_root(state);
    }

    //! Compute and store the nearest crossing over all levels
    bool find_next_step(GeoState& state) const
    {
        std::optional<Intersection> best;
        size_type best_level = 0;
        for (size_type level = 0; level < state.num_levels; ++level)
        {
            LevelState const& lev = state.levels[level];
            OnSurface on;
            if (state.on_surface && state.on_surface->level == level)
            {
                on = {state.on_surface->surface, bump_distance(state.pos)};
            }
            Real3 const local = state.pos - lev.translation;
            auto isect = dispatch_(lev.universe, [&](auto const& t) {
                return t.intersect(lev.cell, local, state.dir, on);
            });
            if (isect && (!best || isect->distance < best->distance))
            {
                best = isect;
                best_level = level;
            }
        }
        if (!best)
        {
            state.next_surface.reset();
            return false;
        }
        state.next_surface
            = SurfaceRecord{best_level, best->surface, best->sense};
        state.next_distance = best->distance;
        return true;
    }

    //! Cross the stored surface (after \c move_to_surface)
    TrackStatus cross_surface(GeoState& state) const
    {
        NMC_EXPECT(state.next_surface);
        SurfaceRecord const rec = *state.next_surface;
        Real3 const surface_pos = bump_across(state);
        state.next_surface.reset();
        state.num_levels = rec.level + 1;

        LevelState& lev = state.levels[rec.level];
        Real3 const local = state.pos - lev.translation;
        std::optional<LocalCellId> cell;
        Daughter const* daughter = nullptr;
        dispatch_(lev.universe, [&](auto const& t) {
            cell = t.cross_surface(local, lev.cell, rec.surface, rec.sense);
            if (cell)
            {
                daughter = t.daughter(*cell);
            }
        });
        if (!cell)
        {
            return this->exit_level(
                state, rec, surface_pos, [this](GeoState& s) {
                    return this->find_from_root(s);
                });
        }
        lev.cell = *cell;
        state.on_surface = rec;
        if (daughter)
        {
            return this->descend(state,
                                 rec.level + 1,
                                 daughter->universe,
                                 lev.translation + daughter->translation);
        }
        return TrackStatus::ok;
    }

    //! Material of the most embedded cell
    MaterialId material(GeoState const& state) const
    {
        LevelState const& lev = state.bottom();
        return dispatch_(lev.universe,
                         [&](auto const& t) { return t.material(lev.cell); });
    }

  private:
    Dispatch dispatch_;

    TrackStatus find_from_root(GeoState& state) const
    {
        return this->descend(state, 0, params_->root, Real3{0, 0, 0});
    }

    //! Find cells from a level downward until a material cell is reached
    TrackStatus descend(GeoState& state,
                        size_type level,
                        UniverseId universe,
                        Real3 translation) const
    {
        while (true)
        {
            Real3 const local = state.pos - translation;
            std::optional<LocalCellId> cell;
            Daughter const* daughter = nullptr;
            dispatch_(universe, [&](auto const& t) {
                cell = t.find_cell(local);
                if (cell)
                {
                    daughter = t.daughter(*cell);
                }
            });
            if (!cell)
            {
                state.num_levels = level;
                return TrackStatus::lost;
            }
            state.levels[level] = LevelState{universe, *cell, translation};
            ++level;
            if (!daughter)
            {
                break;
            }
            NMC_VALIDATE(level < max_levels,
                         GeometryError,
                         << "universe nesting exceeds " << max_levels
                         << " levels");
            translation = translation + daughter->translation;
            universe = daughter->universe;
        }
        state.num_levels = level;
        return TrackStatus::ok;
    }
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
