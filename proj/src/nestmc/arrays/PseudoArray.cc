//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/arrays/PseudoArray.cc
//---------------------------------------------------------------------------//
#include "PseudoArray.hh"

#include <map>

#include "nestmc/base/Assert.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Model every array cell explicitly as the intersection of six planes.
 *
 * One plane is created per grid edge (x edges, then y, then z), so surface
 * IDs coincide with the array's edge numbering and cell IDs with its
 * flattened (i fastest) indexing.
 */
CsgUniverse
to_pseudo_array_rect(RectArrayUniverse const& array, CsgUniverse::Options const& opts)
{
    RectGrid const& grid = array.grid();
    CsgUniverseBuilder builder;
    for (int ax = 0; ax < 3; ++ax)
    {
        auto const axis = static_cast<Axis>(ax);
        for (size_type e = 0; e < grid.num_edges(axis); ++e)
        {
            real_type const pos = grid.edges(axis)[e];
            Surface s = ax == 0   ? Surface{PlaneX{pos}}
                        : ax == 1 ? Surface{PlaneY{pos}}
                                  : Surface{PlaneZ{pos}};
            auto sid = builder.add_surface(s);
            NMC_ASSERT(sid == grid.edge_surface(axis, e));
            (void)sid;
        }
    }

    for (size_type c = 0; c < grid.num_cells(); ++c)
    {
        Ijk const ijk = grid.ijk(c);
        CellDef cell;
        for (int ax = 0; ax < 3; ++ax)
        {
            auto const axis = static_cast<Axis>(ax);
            cell.faces.push_back({grid.edge_surface(axis, ijk[ax]), Sense::positive});
            cell.faces.push_back(
                {grid.edge_surface(axis, ijk[ax] + 1), Sense::negative});
        }
        cell.daughter = array.daughter(LocalCellId{c});
        builder.add_cell(std::move(cell));
    }
    return std::move(builder).build(opts);
}

//---------------------------------------------------------------------------//
/*!
 * Model each hexagonal prism as six general planes and two z planes.
 *
 * Along face-normal family a the hexagon at (q, r) spans
 * (m - 1) * pitch/2 <= n_a . x < (m + 1) * pitch/2 with m = (2q + r, q + 2r,
 * r - q). Planes are keyed by (family, integer offset), so adjacent cells
 * share the identical surface. Faces with no hexagon across them are
 * flagged as universe boundaries.
 */
CsgUniverse
to_pseudo_array_hex(HexGridSpec const& spec, CsgUniverse::Options const& opts)
{
    spec.validate();
    auto const normals = spec.face_normals();
    real_type const half_pitch = spec.pitch / 2;

    CsgUniverseBuilder builder;
    std::map<std::pair<int, int>, LocalSurfaceId> planes;
    auto get_plane = [&](int family, int offset) {
        auto [iter, inserted] = planes.insert({{family, offset}, {}});
        if (inserted)
        {
            iter->second = builder.add_surface(
                GeneralPlane{normals[family], offset * half_pitch});
        }
        return iter->second;
    };
    std::vector<LocalSurfaceId> zplanes;
    for (real_type z : spec.edges_z)
    {
        zplanes.push_back(builder.add_surface(PlaneZ{z}));
    }

    auto const nhex = static_cast<size_type>(spec.cells.size());
    for (size_type k = 0; k < spec.num_z(); ++k)
    {
        for (size_type h = 0; h < nhex; ++h)
        {
            AxialCoord const& ac = spec.cells[h];
            int const m[3] = {2 * ac.q + ac.r, ac.q + 2 * ac.r, ac.r - ac.q};
            CellDef cell;
            for (int f = 0; f < 3; ++f)
            {
                auto lo = get_plane(f, m[f] - 1);
                auto hi = get_plane(f, m[f] + 1);
                cell.faces.push_back({lo, Sense::positive});
                cell.faces.push_back({hi, Sense::negative});
                if (!spec.find_hex(hex_neighbor(ac, f, -1)))
                {
                    builder.mark_boundary(lo);
                }
                if (!spec.find_hex(hex_neighbor(ac, f, +1)))
                {
                    builder.mark_boundary(hi);
                }
            }
            cell.faces.push_back({zplanes[k], Sense::positive});
            cell.faces.push_back({zplanes[k + 1], Sense::negative});
            cell.daughter = spec.fill[h + nhex * k];
            builder.add_cell(std::move(cell));
        }
    }
    return std::move(builder).build(opts);
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
