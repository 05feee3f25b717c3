//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/RandomGeometry.cc
//---------------------------------------------------------------------------//
#include "RandomGeometry.hh"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nestmc
{
//---------------------------------------------------------------------------//
Real3 RandomSource::point(Aabb const& box)
{
    Real3 p;
    for (int ax = 0; ax < 3; ++ax)
    {
        p[ax] = this->uniform(box.lo[ax], box.hi[ax]);
    }
    return p;
}

//---------------------------------------------------------------------------//
Real3 RandomSource::direction()
{
    real_type const mu = 2 * this->uniform() - 1;
    real_type const phi = 2 * std::numbers::pi_v<real_type> * this->uniform();
    real_type const s = std::sqrt(std::max<real_type>(0, 1 - mu * mu));
    return {s * std::cos(phi), s * std::sin(phi), mu};
}

//---------------------------------------------------------------------------//
std::vector<real_type>
random_edges(RandomSource& rng, size_type num_cells, real_type lo)
{
    std::vector<real_type> edges{lo};
    for (size_type i = 0; i < num_cells; ++i)
    {
        edges.push_back(edges.back() + rng.uniform(0.2, 2.0));
    }
    return edges;
}

//---------------------------------------------------------------------------//
/*!
 * Each grid box becomes one cell, or two when it holds an inscribed
 * cylinder or sphere (inside and outside cells). Grid planes are shared
 * between neighboring boxes through surface deduplication.
 */
CsgUniverse random_csg_universe(RandomSource& rng,
                                size_type max_cells,
                                CsgUniverse::Options const& opts)
{
    NMC_EXPECT(max_cells >= 2);
    size_type const max_boxes = max_cells / 2;
    Ijk dims{1, 1, 1};
    for (;;)
    {
        for (auto& d : dims)
        {
            d = rng.integer(1, 8);
        }
        if (dims[0] * dims[1] * dims[2] <= max_boxes)
        {
            break;
        }
    }
    std::array<std::vector<real_type>, 3> edges;
    for (int ax = 0; ax < 3; ++ax)
    {
        edges[ax] = random_edges(rng, dims[ax], rng.uniform(-5, 5));
    }

    CsgUniverseBuilder builder;
    auto axis_plane = [&builder](int ax, real_type v) {
        Surface s = ax == 0   ? Surface{PlaneX{v}}
                    : ax == 1 ? Surface{PlaneY{v}}
                              : Surface{PlaneZ{v}};
        return builder.add_surface(s);
    };
    MaterialId::value_type mat = 0;
    for (size_type k = 0; k < dims[2]; ++k)
    {
        for (size_type j = 0; j < dims[1]; ++j)
        {
            for (size_type i = 0; i < dims[0]; ++i)
            {
                Ijk const ijk{i, j, k};
                std::vector<SurfaceSense> box;
                Real3 lo, hi;
                for (int ax = 0; ax < 3; ++ax)
                {
                    lo[ax] = edges[ax][ijk[ax]];
                    hi[ax] = edges[ax][ijk[ax] + 1];
                    box.push_back({axis_plane(ax, lo[ax]), Sense::positive});
                    box.push_back({axis_plane(ax, hi[ax]), Sense::negative});
                }
                real_type const choice = rng.uniform();
                std::optional<LocalSurfaceId> inner;
                real_type const half_xy
                    = std::min(hi[0] - lo[0], hi[1] - lo[1]) / 2;
                real_type const half_xyz
                    = std::min(half_xy, (hi[2] - lo[2]) / 2);
                if (choice < 0.4)
                {
                    real_type const r = rng.uniform(0.2, 0.9) * half_xy;
                    real_type const x0 = rng.uniform(lo[0] + r, hi[0] - r);
                    real_type const y0 = rng.uniform(lo[1] + r, hi[1] - r);
                    inner = builder.add_surface(CylinderZ{x0, y0, r});
                }
                else if (choice < 0.6)
                {
                    real_type const r = rng.uniform(0.2, 0.9) * half_xyz;
                    Real3 c;
                    for (int ax = 0; ax < 3; ++ax)
                    {
                        c[ax] = rng.uniform(lo[ax] + r, hi[ax] - r);
                    }
                    inner = builder.add_surface(Sphere{c, r});
                }
                if (inner)
                {
                    CellDef in;
                    in.faces = box;
                    in.faces.push_back({*inner, Sense::negative});
                    in.material = MaterialId{mat++};
                    builder.add_cell(std::move(in));
                }
                CellDef out;
                out.faces = box;
                if (inner)
                {
                    out.faces.push_back({*inner, Sense::positive});
                }
                out.material = MaterialId{mat++};
                builder.add_cell(std::move(out));
            }
        }
    }
    return std::move(builder).build(opts);
}

//---------------------------------------------------------------------------//
RectArrayUniverse random_rect_array(RandomSource& rng, size_type max_dim)
{
    RectGrid::EdgeArray edges;
    for (int ax = 0; ax < 3; ++ax)
    {
        edges[ax] = random_edges(
            rng, rng.integer(1, max_dim), rng.uniform(-5, 5));
    }
    RectGrid grid{std::move(edges)};
    std::vector<Daughter> fill(grid.num_cells());
    for (auto& d : fill)
    {
        d.universe = UniverseId{rng.integer(0, 1000)};
        d.translation = {rng.uniform(-1, 1), rng.uniform(-1, 1), 0};
    }
    return RectArrayUniverse{std::move(grid), std::move(fill)};
}

//---------------------------------------------------------------------------//
HexGridSpec hex_layout_spec(int rings,
                            real_type pitch,
                            HexOrientation orientation,
                            Real3 const& offset)
{
    HexGridSpec spec;
    spec.pitch = pitch;
    spec.orientation = orientation;
    spec.cells = HexGridSpec::ring_layout(rings);
    spec.edges_z = {-1, 1};
    for (size_type i = 0; i < spec.cells.size(); ++i)
    {
        Daughter d;
        d.universe = UniverseId{i};
        d.translation = spec.center(spec.cells[i]) + offset;
        spec.fill.push_back(d);
    }
    return spec;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
