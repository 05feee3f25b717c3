//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/arrays/HexArray.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <vector>

#include "nestmc/base/Types.hh"
#include "nestmc/bih/Aabb.hh"
#include "nestmc/geom/CsgTypes.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
enum class HexOrientation : unsigned char
{
    flat_top,
    pointy_top
};

//! Axial hexagonal coordinate
struct AxialCoord
{
    int q{0};
    int r{0};

    friend bool operator==(AxialCoord const&, AxialCoord const&) = default;
};

//---------------------------------------------------------------------------//
/*!
 * Hexagonal array layout.
 *
 * Hexagons have flat-to-flat width \c pitch and are centered at
 * pitch * (q * n0 + r * n1), where n0 and n1 are the first two of the
 * three face-normal directions (60 degrees apart). The array is extruded
 * along z over \c edges_z. \c fill holds one daughter per (hex, z slab),
 * indexed by hex + num_hexes * k.
 */
struct HexGridSpec
{
    real_type pitch{1};
    HexOrientation orientation{HexOrientation::flat_top};
    std::vector<AxialCoord> cells;
    std::vector<real_type> edges_z;
    std::vector<Daughter> fill;

    // Layout of all hexagons within (rings - 1) steps of the center
    static std::vector<AxialCoord> ring_layout(int rings);

    // Unit normals of the three plane families
    std::array<Real3, 3> face_normals() const;

    // Center of a hexagon in the xy plane (z = 0)
    Real3 center(AxialCoord const& c) const;

    // Hexagon index from its axial coordinate, if present
    std::optional<size_type> find_hex(AxialCoord const& c) const;

    size_type num_z() const { return edges_z.size() - 1; }
    size_type num_cells() const { return cells.size() * this->num_z(); }

    // Throw ConfigError if inconsistent
    void validate() const;
};

//---------------------------------------------------------------------------//
// Neighbor across face (family, side) where side is -1 or +1
AxialCoord hex_neighbor(AxialCoord const& c, int family, int side);

// Number of hex steps between two coordinates
int hex_distance(AxialCoord const& a, AxialCoord const& b);

//---------------------------------------------------------------------------//
}  // namespace nestmc
