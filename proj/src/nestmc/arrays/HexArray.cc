//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/arrays/HexArray.cc
//---------------------------------------------------------------------------//
#include "HexArray.hh"

#include <cmath>
#include <cstdlib>

#include "nestmc/base/Assert.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
std::vector<AxialCoord> HexGridSpec::ring_layout(int rings)
{
    NMC_VALIDATE(rings >= 1, ConfigError, << "hex ring count must be >= 1");
    std::vector<AxialCoord> result;
    for (int r = -(rings - 1); r <= rings - 1; ++r)
    {
        for (int q = -(rings - 1); q <= rings - 1; ++q)
        {
            if (hex_distance({0, 0}, {q, r}) < rings)
            {
                result.push_back({q, r});
            }
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Face normals: n0, n1 = n0 rotated 60 degrees, n2 = n1 - n0.
 *
 * Flat-top hexagons have n1 along +y; pointy-top have n0 along +x.
 */
std::array<Real3, 3> HexGridSpec::face_normals() const
{
    real_type const half_sqrt3 = std::sqrt(real_type(3)) / 2;
    if (orientation == HexOrientation::flat_top)
    {
        return {Real3{half_sqrt3, 0.5, 0},
                Real3{0, 1, 0},
                Real3{-half_sqrt3, 0.5, 0}};
    }
    return {
        Real3{1, 0, 0}, Real3{0.5, half_sqrt3, 0}, Real3{-0.5, half_sqrt3, 0}};
}

//---------------------------------------------------------------------------//
Real3 HexGridSpec::center(AxialCoord const& c) const
{
    auto const n = this->face_normals();
    return {pitch * (c.q * n[0][0] + c.r * n[1][0]),
            pitch * (c.q * n[0][1] + c.r * n[1][1]),
            0};
}

//---------------------------------------------------------------------------//
std::optional<size_type> HexGridSpec::find_hex(AxialCoord const& c) const
{
    for (size_type i = 0; i < cells.size(); ++i)
    {
        if (cells[i] == c)
        {
            return i;
        }
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
void HexGridSpec::validate() const
{
    NMC_VALIDATE(pitch > 0 && std::isfinite(pitch),
                 ConfigError,
                 << "hex pitch must be positive");
    NMC_VALIDATE(!cells.empty(), ConfigError, << "hex array has no cells");
    NMC_VALIDATE(edges_z.size() >= 2,
                 ConfigError,
                 << "hex array needs at least two z edges");
    for (std::size_t i = 1; i < edges_z.size(); ++i)
    {
        NMC_VALIDATE(edges_z[i] - edges_z[i - 1] > 1e-9,
                     ConfigError,
                     << "hex z edges must be strictly increasing");
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
        for (std::size_t j = 0; j < i; ++j)
        {
            NMC_VALIDATE(!(cells[i] == cells[j]),
                         ConfigError,
                         << "duplicate hex coordinate (" << cells[i].q << ','
                         << cells[i].r << ')');
        }
    }
    NMC_VALIDATE(fill.size() == this->num_cells(),
                 ConfigError,
                 << "hex fill has " << fill.size() << " entries, expected "
                 << this->num_cells());
    for (auto const& d : fill)
    {
        NMC_VALIDATE(d.universe, ConfigError, << "hex cell has no daughter");
    }
}

//---------------------------------------------------------------------------//
AxialCoord hex_neighbor(AxialCoord const& c, int family, int side)
{
    // Center offsets pitch*n0, pitch*n1, pitch*(n1 - n0)
    static constexpr int dq[] = {1, 0, -1};
    static constexpr int dr[] = {0, 1, 1};
    NMC_EXPECT(family >= 0 && family < 3 && (side == 1 || side == -1));
    return {c.q + side * dq[family], c.r + side * dr[family]};
}

//---------------------------------------------------------------------------//
int hex_distance(AxialCoord const& a, AxialCoord const& b)
{
    int const dq = a.q - b.q;
    int const dr = a.r - b.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
