//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/geom/CsgUniverse.hh
//---------------------------------------------------------------------------//
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nestmc/bih/Aabb.hh"
#include "nestmc/bih/BihTree.hh"

#include "CsgTypes.hh"
#include "Surface.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Immutable CSG universe: surfaces, intersection cells, neighbor lists, and
 * an optional BIH over the cell bounding boxes.
 *
 * Neighbor lists are keyed by (surface, sense) and hold, in increasing ID
 * order, every cell whose definition requires that sense on that surface.
 * When a BIH is attached, \c find_cell and \c cross_surface traverse it;
 * otherwise they use the linear scan and neighbor scan respectively.
 */
class CsgUniverse
{
  public:
    struct Options
    {
        bool use_bih{true};
        BihParams bih;
    };

  public:
    CsgUniverse() = default;

    //// ACCESSORS ////

    size_type num_surfaces() const { return surfaces_.size(); }
    size_type num_cells() const { return cells_.size(); }
    std::span<Surface const> surfaces() const { return surfaces_; }
    std::span<CellDef const> cells() const { return cells_; }
    Surface const& surface(LocalSurfaceId s) const;
    CellDef const& cell(LocalCellId c) const;
    Aabb const& bbox() const { return bbox_; }
    Aabb const& cell_bbox(LocalCellId c) const;
    BihTree const* bih() const { return bih_ ? &*bih_ : nullptr; }
    bool is_boundary(LocalSurfaceId s) const;

    // Cells requiring the given sense on a surface
    std::span<LocalCellId const> neighbors(LocalSurfaceId s, Sense sense) const;

    // Every cell bounded by a surface, regardless of sense
    std::vector<LocalCellId> surface_neighbors(LocalSurfaceId s) const;

    //// TRACKING ////

    // Whether the position satisfies every face of the cell
    bool cell_contains(LocalCellId c, Real3 const& pos) const;

    // Find the cell containing a point (BIH if attached)
    std::optional<LocalCellId> find_cell(Real3 const& pos) const;

    // Find the cell containing a point by scanning every cell
    std::optional<LocalCellId> find_cell_linear(Real3 const& pos) const;

    // Nearest exiting crossing; faces flagged in skip are ignored
    std::optional<Intersection> intersect(LocalCellId c,
                                          Real3 const& pos,
                                          Real3 const& dir,
                                          OnSurface on_surface = {},
                                          std::span<char const> skip
                                          = {}) const;

    // Nearest exiting crossing; throws GeometryError if there is none
    Intersection distance_to_surface(LocalCellId c,
                                     Real3 const& pos,
                                     Real3 const& dir,
                                     OnSurface on_surface = {}) const;

    // Cell on the far side of a surface (BIH if attached)
    std::optional<LocalCellId> cross_surface(Real3 const& pos,
                                             LocalCellId from,
                                             LocalSurfaceId surface,
                                             Sense new_sense) const;

    // Cell on the far side of a surface using the neighbor list only
    std::optional<LocalCellId> cross_surface_neighbors(Real3 const& pos,
                                                       LocalCellId from,
                                                       LocalSurfaceId surface,
                                                       Sense new_sense) const;

    //! Mutable neighbor list for negative-control tests
    std::vector<LocalCellId>&
    mutable_neighbors_for_testing(LocalSurfaceId s, Sense sense)
    {
        return neighbors_[neighbor_index(s, sense)];
    }

  private:
    friend class CsgUniverseBuilder;

    std::vector<Surface> surfaces_;
    std::vector<CellDef> cells_;
    std::vector<std::vector<LocalCellId>> neighbors_;
    std::vector<char> boundary_;
    std::vector<Aabb> cell_bboxes_;
    Aabb bbox_;
    std::optional<BihTree> bih_;

    static std::size_t neighbor_index(LocalSurfaceId s, Sense sense)
    {
        return 2 * std::size_t(s.get()) + (sense == Sense::positive ? 1 : 0);
    }
};

//---------------------------------------------------------------------------//
/*!
 * Construct a CSG universe.
 *
 * Surfaces are deduplicated as they are added: a surface of the same type
 * with every parameter within 1e-9 of an existing one returns the existing
 * ID. Surfaces bounded by cells on only one side are flagged as universe
 * boundaries; \c mark_boundary flags additional ones.
 */
class CsgUniverseBuilder
{
  public:
    static constexpr real_type dedup_tolerance = 1e-9;

    LocalSurfaceId add_surface(Surface const& s);
    LocalCellId add_cell(CellDef cell);
    void mark_boundary(LocalSurfaceId s);

    size_type num_surfaces() const { return surfaces_.size(); }
    size_type num_cells() const { return cells_.size(); }

    CsgUniverse build(CsgUniverse::Options const& opts = {}) &&;

  private:
    std::vector<Surface> surfaces_;
    std::vector<CellDef> cells_;
    std::vector<char> boundary_;
};

//---------------------------------------------------------------------------//
// Neighbor lists for each (surface, sense), sorted by cell ID
std::vector<std::vector<LocalCellId>>
build_neighbor_lists(std::span<CellDef const> cells, size_type num_surfaces);

//---------------------------------------------------------------------------//
}  // namespace nestmc
