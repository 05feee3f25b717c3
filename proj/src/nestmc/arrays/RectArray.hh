//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/arrays/RectArray.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "nestmc/base/Assert.hh"
#include "nestmc/base/Types.hh"
#include "nestmc/bih/Aabb.hh"
#include "nestmc/geom/CsgTypes.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
using Ijk = std::array<size_type, 3>;

//---------------------------------------------------------------------------//
/*!
 * Nonuniform rectilinear grid.
 *
 * Cell (i,j,k) spans [x_i, x_{i+1}) x [y_j, y_{j+1}) x [z_k, z_{k+1}). A
 * point exactly on an interior edge belongs to the higher-index interval,
 * and a point on the last edge is outside: this matches the zero-is-positive
 * sense rule of the equivalent CSG planes.
 *
 * Grid edges double as surfaces: the x edges are numbered first, then y,
 * then z, which is the same numbering used by the pseudo-array conversion.
 */
class RectGrid
{
  public:
    using EdgeArray = std::array<std::vector<real_type>, 3>;

    RectGrid() = default;
    explicit RectGrid(EdgeArray edges);

    std::span<real_type const> edges(Axis ax) const
    {
        return edges_[to_int(ax)];
    }
    size_type num_edges(Axis ax) const { return edges_[to_int(ax)].size(); }
    size_type num_cells(Axis ax) const { return this->num_edges(ax) - 1; }
    Ijk dims() const
    {
        return {this->num_cells(Axis::x),
                this->num_cells(Axis::y),
                this->num_cells(Axis::z)};
    }
    size_type num_cells() const;
    size_type num_surfaces() const;
    Aabb bbox() const;

    // Interval index along one axis (binary search)
    std::optional<size_type> find(Axis ax, real_type x) const;

    // Flattened cell index (i fastest)
    size_type index(Ijk const& ijk) const
    {
        auto const d = this->dims();
        NMC_ASSERT(ijk[0] < d[0] && ijk[1] < d[1] && ijk[2] < d[2]);
        return ijk[0] + d[0] * (ijk[1] + d[1] * ijk[2]);
    }
    Ijk ijk(size_type index) const;

    // Surface ID of an edge, and its inverse
    LocalSurfaceId edge_surface(Axis ax, size_type edge) const;
    std::pair<Axis, size_type> surface_edge(LocalSurfaceId s) const;

  private:
    EdgeArray edges_;
};

//---------------------------------------------------------------------------//
//! Nearest slab crossing out of a grid cell
struct RectIntersection
{
    real_type distance{};
    Axis axis{Axis::x};
    Sense dir_sign{Sense::positive};  //!< Positive if moving toward +axis
};

//---------------------------------------------------------------------------//
// Cell containing a point, if inside the grid
std::optional<Ijk> rect_find_cell(RectGrid const& grid, Real3 const& pos);

// Neighboring cell across a face, absent if leaving the grid
std::optional<Ijk> rect_cross_surface(RectGrid const& grid,
                                      Ijk const& cell,
                                      Axis ax,
                                      Sense dir_sign);

// Nearest forward face crossing; ties go to the lowest axis
std::optional<RectIntersection> rect_distance_to_surface(RectGrid const& grid,
                                                         Ijk const& cell,
                                                         Real3 const& pos,
                                                         Real3 const& dir);

//---------------------------------------------------------------------------//
/*!
 * Rectilinear array universe: a grid whose every cell holds a daughter.
 */
class RectArrayUniverse
{
  public:
    RectArrayUniverse() = default;
    RectArrayUniverse(RectGrid grid, std::vector<Daughter> fill);

    RectGrid const& grid() const { return grid_; }
    std::span<Daughter const> fill() const { return fill_; }
    Daughter const& daughter(LocalCellId c) const;
    size_type num_cells() const { return grid_.num_cells(); }
    size_type num_surfaces() const { return grid_.num_surfaces(); }
    Aabb bbox() const { return grid_.bbox(); }

    //// TRACKING (surface-ID interface shared with CSG universes) ////

    std::optional<LocalCellId> find_cell(Real3 const& pos) const;

    std::optional<Intersection> intersect(LocalCellId c,
                                          Real3 const& pos,
                                          Real3 const& dir,
                                          OnSurface on_surface = {},
                                          std::span<char const> skip
                                          = {}) const;

    std::optional<LocalCellId> cross_surface(Real3 const& pos,
                                             LocalCellId from,
                                             LocalSurfaceId surface,
                                             Sense new_sense) const;
    // Whether a point lies in the half-open cell
    bool cell_contains(Ijk const& ijk, Real3 const& pos) const;

  private:
    RectGrid grid_;
    std::vector<Daughter> fill_;
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
