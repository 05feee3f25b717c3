//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/GeometryParams.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "nestmc/arrays/HexArray.hh"
#include "nestmc/arrays/RectArray.hh"
#include "nestmc/geom/CsgUniverse.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Universe kind
enum class UType : unsigned char
{
    csg,
    rect_array,
    hex_array
};

char const* to_cstring(UType t);

//! Root bounding-box faces, in the order x-, x+, y-, y+, z-, z+
using FaceConditions = std::array<BoundaryCondition, 6>;

using UniverseDef = std::variant<CsgUniverse, RectArrayUniverse, HexGridSpec>;

//---------------------------------------------------------------------------//
/*!
 * Description of a nested-universe model, before a strategy is chosen.
 */
struct GeometryInput
{
    std::vector<UniverseDef> universes;
    std::vector<std::string> labels;
    UniverseId root{0};
    FaceConditions boundary{};  //!< Default: all vacuum

    // Label of a universe, or a generated one
    std::string label(UniverseId u) const;
};

//! Correspondence between an input cell and its converted counterpart
struct CellMapping
{
    UniverseId orig_universe;
    LocalCellId orig_cell;
    UniverseId conv_universe;
    LocalCellId conv_cell;
};

//! Boundary treatment of one root surface
struct RootSurface
{
    bool boundary{false};
    BoundaryCondition bc{BoundaryCondition::vacuum};
    Axis axis{Axis::x};  //!< Normal axis, valid for reflecting surfaces
};

//---------------------------------------------------------------------------//
/*!
 * Built, immutable universe data shared by all navigators.
 *
 * Universes keep their input IDs; \c types and \c type_index map a universe
 * to the storage vector holding it (the "Params" of the static dispatch).
 * \c coincident flags daughter surfaces that coincide with the bounding
 * surfaces of every parent cell they are placed in.
 */
struct GeometryParams
{
    std::vector<UType> types;
    std::vector<size_type> type_index;
    std::vector<CsgUniverse> csg;
    std::vector<RectArrayUniverse> rect;
    std::vector<std::vector<char>> coincident;
    std::vector<std::string> labels;
    UniverseId root;
    std::vector<RootSurface> root_surfaces;
    std::vector<size_type> cell_offsets;  //!< Flattened cell index start
    size_type num_flat_cells{0};
    size_type depth{0};
    std::vector<CellMapping> mapping;
    Aabb root_bbox;

    size_type num_universes() const { return types.size(); }
    CsgUniverse const& csg_universe(UniverseId u) const
    {
        NMC_ASSERT(types[u.get()] == UType::csg);
        return csg[type_index[u.get()]];
    }
    RectArrayUniverse const& rect_universe(UniverseId u) const
    {
        NMC_ASSERT(types[u.get()] == UType::rect_array);
        return rect[type_index[u.get()]];
    }
    std::span<char const> skip_mask(UniverseId u) const
    {
        return coincident[u.get()];
    }
    size_type flat_cell(UniverseId u, LocalCellId c) const
    {
        return cell_offsets[u.get()] + c.get();
    }
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
