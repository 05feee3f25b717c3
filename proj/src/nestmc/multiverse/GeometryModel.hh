//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/GeometryModel.hh
//---------------------------------------------------------------------------//
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "GeoState.hh"
#include "GeometryParams.hh"
#include "MultiNavigator.hh"
#include "RtkNavigator.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Multi-universe dispatch strategy
enum class Strategy : unsigned char
{
    dp,  //!< Dynamic polymorphism (virtual trackers)
    sp,  //!< Static polymorphism (type switch)
    st,  //!< Single CSG tracker over converted arrays
    rtk  //!< Hard-wired three-level tracker
};

char const* to_cstring(Strategy s);
Strategy strategy_from_string(std::string_view s);

using DpNavigator = MultiNavigator<DynamicDispatch>;
using SpNavigator = MultiNavigator<StaticDispatch>;
using StNavigator = MultiNavigator<SingleDispatch>;
using Navigator
    = std::variant<DpNavigator, SpNavigator, StNavigator, RtkNavigator>;

//---------------------------------------------------------------------------//
// Build validated, strategy-specific universe data
GeometryParams build_geometry_params(GeometryInput const& input, Strategy s);

// Flag daughter boundary surfaces that coincide with every parent cell face
std::vector<std::vector<char>>
find_coincident_surfaces(GeometryParams const& params);

// Surfaces of any universe, in surface ID order
std::vector<Surface>
universe_surfaces(GeometryParams const& params, UniverseId u);

//---------------------------------------------------------------------------//
/*!
 * Nested-universe geometry bound to one dispatch strategy.
 *
 * Building checks the universe graph and strategy support; afterward the
 * model is immutable and may be shared between threads. Tracking goes
 * through \c visit, which passes the concrete navigator to a functor, or
 * through the type-erased convenience methods.
 */
class GeometryModel
{
  public:
    GeometryModel(GeometryInput const& input, Strategy strategy);

    Strategy strategy() const { return strategy_; }
    GeometryParams const& params() const { return *params_; }

    template<class F>
    decltype(auto) visit(F&& func) const
    {
        return std::visit(std::forward<F>(func), *navigator_);
    }

    //// CONVENIENCE OPERATIONS ////

    // Locate a point; throws GeometryError outside the root or if lost
    GeoState find_cell(Real3 const& pos, Real3 const& dir = {0, 0, 1}) const;
    TrackStatus
    initialize(GeoState& state, Real3 const& pos, Real3 const& dir) const;
    bool find_next_step(GeoState& state) const;
    void move_within_cell(GeoState& state, real_type distance) const;
    void move_to_surface(GeoState& state) const;
    TrackStatus cross_surface(GeoState& state) const;
    void change_direction(GeoState& state, Real3 const& dir) const;
    MaterialId material(GeoState const& state) const;

    // Flattened index of the most embedded cell
    size_type flat_cell(GeoState const& state) const;

    // Human-readable level stack
    std::string dump(GeoState const& state) const;

  private:
    Strategy strategy_;
    std::shared_ptr<GeometryParams const> params_;
    std::shared_ptr<Navigator const> navigator_;
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
