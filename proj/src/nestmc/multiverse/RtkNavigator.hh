//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/RtkNavigator.hh
//---------------------------------------------------------------------------//
#pragma once

#include "NavigatorBase.hh"
#include "Trackers.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Hard-wired core/assembly/pin navigator.
 *
 * The core and assembly levels are rectilinear arrays and the pin level is a
 * CSG universe; every loop over levels is unrolled and trackers are obtained
 * without any dispatch. The model shape is checked when the geometry is
 * built.
 */
class RtkNavigator : public NavigatorBase
{
  public:
    enum Level : size_type
    {
        core = 0,
        assembly = 1,
        pin = 2
    };

    explicit RtkNavigator(GeometryParams const& params)
        : NavigatorBase(params)
    {
    }

    TrackStatus
    initialize(GeoState& state, Real3 const& pos, Real3 const& dir) const
    {
        reset(state, pos, dir);
        return this->find_cell(state);
    }

    bool find_next_step(GeoState& state) const;
    TrackStatus cross_surface(GeoState& state) const;

    MaterialId material(GeoState const& state) const
    {
        return this->get_csg_tracker(state.levels[pin].universe)
            .material(state.levels[pin].cell);
    }

  private:
    RectTracker get_rect_tracker(UniverseId u) const
    {
        return RectTracker{u, *params_};
    }
    CsgTracker get_csg_tracker(UniverseId u) const
    {
        return CsgTracker{u, *params_};
    }

    TrackStatus find_cell(GeoState& state) const;
    TrackStatus find_assembly(GeoState& state, Daughter const& d) const;
    TrackStatus find_pin(GeoState& state, Daughter const& d) const;

    OnSurface on_surface(GeoState const& state, size_type level) const
    {
        if (state.on_surface && state.on_surface->level == level)
        {
            return {state.on_surface->surface, bump_distance(state.pos)};
        }
        return {};
    }
};

//---------------------------------------------------------------------------//
// INLINE DEFINITIONS
//---------------------------------------------------------------------------//
inline TrackStatus RtkNavigator::find_cell(GeoState& state) const
{
    Real3 const core_trans{0, 0, 0};
    UniverseId const root = params_->root;
    auto const core_tracker = this->get_rect_tracker(root);
    auto const core_cell = core_tracker.find_cell(state.pos - core_trans);
    if (!core_cell)
    {
        state.num_levels = 0;
        return TrackStatus::lost;
    }
    state.levels[core] = LevelState{root, *core_cell, core_trans};
    state.num_levels = 1;
    return this->find_assembly(state, *core_tracker.daughter(*core_cell));
}

inline TrackStatus
RtkNavigator::find_assembly(GeoState& state, Daughter const& d) const
{
    Real3 const assm_trans = state.levels[core].translation + d.translation;
    auto const assm_tracker = this->get_rect_tracker(d.universe);
    auto const assm_cell = assm_tracker.find_cell(state.pos - assm_trans);
    if (!assm_cell)
    {
        return TrackStatus::lost;
    }
    state.levels[assembly] = LevelState{d.universe, *assm_cell, assm_trans};
    state.num_levels = 2;
    return this->find_pin(state, *assm_tracker.daughter(*assm_cell));
}

inline TrackStatus
RtkNavigator::find_pin(GeoState& state, Daughter const& d) const
{
    Real3 const pin_trans = state.levels[assembly].translation + d.translation;
    auto const pin_cell
        = this->get_csg_tracker(d.universe).find_cell(state.pos - pin_trans);
    if (!pin_cell)
    {
        return TrackStatus::lost;
    }
    state.levels[pin] = LevelState{d.universe, *pin_cell, pin_trans};
    state.num_levels = 3;
    return TrackStatus::ok;
}

//---------------------------------------------------------------------------//
inline bool RtkNavigator::find_next_step(GeoState& state) const
{
    LevelState const& c = state.levels[core];
    LevelState const& a = state.levels[assembly];
    LevelState const& p = state.levels[pin];

    std::optional<Intersection> best
        = this->get_rect_tracker(c.universe)
              .intersect(c.cell,
                         state.pos - c.translation,
                         state.dir,
                         this->on_surface(state, core));
    size_type best_level = core;

    auto isect = this->get_rect_tracker(a.universe)
                     .intersect(a.cell,
                                state.pos - a.translation,
                                state.dir,
                                this->on_surface(state, assembly));
    if (isect && (!best || isect->distance < best->distance))
    {
        best = isect;
        best_level = assembly;
    }

    isect = this->get_csg_tracker(p.universe)
                .intersect(p.cell,
                           state.pos - p.translation,
                           state.dir,
                           this->on_surface(state, pin));
    if (isect && (!best || isect->distance < best->distance))
    {
        best = isect;
        best_level = pin;
    }

    if (!best)
    {
        state.next_surface.reset();
        return false;
    }
    state.next_surface = SurfaceRecord{best_level, best->surface, best->sense};
    state.next_distance = best->distance;
    return true;
}

//---------------------------------------------------------------------------//
inline TrackStatus RtkNavigator::cross_surface(GeoState& state) const
{
    NMC_EXPECT(state.next_surface);
    SurfaceRecord const rec = *state.next_surface;
    Real3 const surface_pos = bump_across(state);
    state.next_surface.reset();
    state.num_levels = rec.level + 1;

    switch (rec.level)
    {
        case core: {
            LevelState& lev = state.levels[core];
            auto const core_tracker = this->get_rect_tracker(lev.universe);
            auto const cell = core_tracker.cross_surface(
                state.pos - lev.translation, lev.cell, rec.surface, rec.sense);
            if (!cell)
            {
                return this->exit_level(
                    state, rec, surface_pos, [this](GeoState& s) {
                        return this->find_cell(s);
                    });
            }
            lev.cell = *cell;
            state.on_surface = rec;
            return this->find_assembly(state, *core_tracker.daughter(*cell));
        }
        case assembly: {
            LevelState& lev = state.levels[assembly];
            auto const assm_tracker = this->get_rect_tracker(lev.universe);
            auto const cell
                = assm_tracker.find_cell(state.pos - lev.translation);
            if (!cell || *cell == lev.cell)
            {
                return TrackStatus::lost;
            }
            lev.cell = *cell;
            state.on_surface = rec;
            return this->find_pin(state, *assm_tracker.daughter(*cell));
        }
        case pin: {
            LevelState& lev = state.levels[pin];
            auto const cell = this->get_csg_tracker(lev.universe)
                                  .find_cell(state.pos - lev.translation);
            if (!cell || *cell == lev.cell)
            {
                return TrackStatus::lost;
            }
            lev.cell = *cell;
            state.on_surface = rec;
            return TrackStatus::ok;
        }
    }
    NMC_ASSERT_UNREACHABLE();
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
