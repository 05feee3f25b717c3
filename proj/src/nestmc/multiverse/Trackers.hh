//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/Trackers.hh
//---------------------------------------------------------------------------//
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "GeometryParams.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Tracker view of a CSG universe.
 */
class CsgTracker
{
  public:
    CsgTracker(UniverseId u, GeometryParams const& params)
        : universe_(&params.csg_universe(u)), skip_(params.skip_mask(u))
    {
    }

    std::optional<LocalCellId> find_cell(Real3 const& pos) const
    {
        return universe_->find_cell(pos);
    }

    std::optional<Intersection> intersect(LocalCellId c,
                                          Real3 const& pos,
                                          Real3 const& dir,
                                          OnSurface on_surface) const
    {
        return universe_->intersect(c, pos, dir, on_surface, skip_);
    }

    std::optional<LocalCellId> cross_surface(Real3 const& pos,
                                             LocalCellId from,
                                             LocalSurfaceId s,
                                             Sense new_sense) const
    {
        return universe_->cross_surface(pos, from, s, new_sense);
    }

    Daughter const* daughter(LocalCellId c) const
    {
        auto const& d = universe_->cells()[c.get()].daughter;
        return d ? &*d : nullptr;
    }

    MaterialId material(LocalCellId c) const
    {
        auto const& m = universe_->cells()[c.get()].material;
        return m ? *m : MaterialId{};
    }

  private:
    CsgUniverse const* universe_;
    std::span<char const> skip_;
};

//---------------------------------------------------------------------------//
/*!
 * Tracker view of a rectilinear array universe.
 */
class RectTracker
{
  public:
    RectTracker(UniverseId u, GeometryParams const& params)
        : universe_(&params.rect_universe(u)), skip_(params.skip_mask(u))
    {
    }

    std::optional<LocalCellId> find_cell(Real3 const& pos) const
    {
        return universe_->find_cell(pos);
    }

    std::optional<Intersection> intersect(LocalCellId c,
                                          Real3 const& pos,
                                          Real3 const& dir,
                                          OnSurface on_surface) const
    {
        return universe_->intersect(c, pos, dir, on_surface, skip_);
    }

    std::optional<LocalCellId> cross_surface(Real3 const& pos,
                                             LocalCellId from,
                                             LocalSurfaceId s,
                                             Sense new_sense) const
    {
        return universe_->cross_surface(pos, from, s, new_sense);
    }

    Daughter const* daughter(LocalCellId c) const
    {
        return &universe_->daughter(c);
    }

    MaterialId material(LocalCellId) const { return {}; }

  private:
    RectArrayUniverse const* universe_;
    std::span<char const> skip_;
};

//---------------------------------------------------------------------------//
// DYNAMIC POLYMORPHISM
//---------------------------------------------------------------------------//
/*!
 * Abstract tracker interface with one virtual method per operation.
 */
class Tracker
{
  public:
    virtual ~Tracker() = default;

    virtual std::optional<LocalCellId> find_cell(Real3 const& pos) const = 0;
    virtual std::optional<Intersection> intersect(LocalCellId c,
                                                  Real3 const& pos,
                                                  Real3 const& dir,
                                                  OnSurface on_surface) const
        = 0;
    virtual std::optional<LocalCellId> cross_surface(Real3 const& pos,
                                                     LocalCellId from,
                                                     LocalSurfaceId s,
                                                     Sense new_sense) const
        = 0;
    virtual Daughter const* daughter(LocalCellId c) const = 0;
    virtual MaterialId material(LocalCellId c) const = 0;
};

template<class T>
class DynamicTracker final : public Tracker
{
  public:
    explicit DynamicTracker(T impl) : impl_(impl) {}

    std::optional<LocalCellId> find_cell(Real3 const& pos) const final
    {
        return impl_.find_cell(pos);
    }
    std::optional<Intersection> intersect(LocalCellId c,
                                          Real3 const& pos,
                                          Real3 const& dir,
                                          OnSurface on_surface) const final
    {
        return impl_.intersect(c, pos, dir, on_surface);
    }
    std::optional<LocalCellId> cross_surface(Real3 const& pos,
                                             LocalCellId from,
                                             LocalSurfaceId s,
                                             Sense new_sense) const final
    {
        return impl_.cross_surface(pos, from, s, new_sense);
    }
    Daughter const* daughter(LocalCellId c) const final
    {
        return impl_.daughter(c);
    }
    MaterialId material(LocalCellId c) const final
    {
        return impl_.material(c);
    }

  private:
    T impl_;
};

//! Runtime dispatch through a table of abstract trackers
class DynamicDispatch
{
  public:
    explicit DynamicDispatch(GeometryParams const& params);

    Tracker const& get_tracker(UniverseId u) const
    {
        return *trackers_[u.get()];
    }

    template<class F>
    decltype(auto) operator()(UniverseId u, F&& func) const
    {
        return func(this->get_tracker(u));
    }

  private:
    std::vector<std::shared_ptr<Tracker const>> trackers_;
};

//---------------------------------------------------------------------------//
// STATIC POLYMORPHISM
//---------------------------------------------------------------------------//
template<UType U>
struct Traits;

template<>
struct Traits<UType::csg>
{
    using tracker_type = CsgTracker;
};

template<>
struct Traits<UType::rect_array>
{
    using tracker_type = RectTracker;
};

//! Call a functor with the traits of a universe type
template<class F>
decltype(auto) visit_universe_type(F&& func, UType t)
{
    switch (t)
    {
        case UType::csg:
            return func(Traits<UType::csg>{});
        case UType::rect_array:
            return func(Traits<UType::rect_array>{});
        case UType::hex_array:
            break;
    }
    NMC_ASSERT_UNREACHABLE();
}

//! Call a functor with a concrete tracker for a universe
template<class F>
decltype(auto)
visit_tracker(F&& func, UniverseId u, GeometryParams const& params)
{
    return visit_universe_type(
        [&](auto traits) {
            using TrackerT = typename decltype(traits)::tracker_type;
            return func(TrackerT{u, params});
        },
        params.types[u.get()]);
}

//! Closed type switch over universe kinds
class StaticDispatch
{
  public:
    explicit StaticDispatch(GeometryParams const& params) : params_(&params)
    {
    }

    template<class F>
    decltype(auto) operator()(UniverseId u, F&& func) const
    {
        return visit_tracker(func, u, *params_);
    }

  private:
    GeometryParams const* params_;
};

//---------------------------------------------------------------------------//
// SINGLE TRACKER
//---------------------------------------------------------------------------//
//! Every universe is CSG: no dispatch at all
class SingleDispatch
{
  public:
    explicit SingleDispatch(GeometryParams const& params) : params_(&params)
    {
    }

    template<class F>
    decltype(auto) operator()(UniverseId u, F&& func) const
    {
        return func(CsgTracker{u, *params_});
    }

  private:
    GeometryParams const* params_;
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
