//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/arrays/RectArray.cc
//---------------------------------------------------------------------------//
#include "RectArray.hh"

#include <algorithm>
#include <cmath>

namespace nestmc
{
//---------------------------------------------------------------------------//
RectGrid::RectGrid(EdgeArray edges) : edges_{std::move(edges)}
{
    for (int ax = 0; ax < 3; ++ax)
    {
        auto const& e = edges_[ax];
        NMC_VALIDATE(e.size() >= 2,
                     ConfigError,
                     << "grid needs at least two " << "xyz"[ax] << " edges");
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            NMC_VALIDATE(std::isfinite(e[i]),
                         ConfigError,
                         << "grid edges must be finite");
            NMC_VALIDATE(i == 0 || e[i] - e[i - 1] > 1e-9,
                         ConfigError,
                         << "grid " << "xyz"[ax]
                         << " edges must be strictly increasing");
        }
    }
}

//---------------------------------------------------------------------------//
size_type RectGrid::num_cells() const
{
    auto const d = this->dims();
    return d[0] * d[1] * d[2];
}

//---------------------------------------------------------------------------//
size_type RectGrid::num_surfaces() const
{
    return edges_[0].size() + edges_[1].size() + edges_[2].size();
}

//---------------------------------------------------------------------------//
Aabb RectGrid::bbox() const
{
    Aabb result;
    for (int ax = 0; ax < 3; ++ax)
    {
        result.lo[ax] = edges_[ax].front();
        result.hi[ax] = edges_[ax].back();
    }
    return result;
}

//---------------------------------------------------------------------------//
std::optional<size_type> RectGrid::find(Axis ax, real_type x) const
{
    auto const& e = edges_[to_int(ax)];
    if (!(x >= e.front() && x < e.back()))
    {
        return std::nullopt;
    }
    auto iter = std::upper_bound(e.begin(), e.end(), x);
    return static_cast<size_type>(iter - e.begin()) - 1;
}

//---------------------------------------------------------------------------//
Ijk RectGrid::ijk(size_type index) const
{
    auto const d = this->dims();
    NMC_ASSERT(index < d[0] * d[1] * d[2]);
    return {index % d[0], (index / d[0]) % d[1], index / (d[0] * d[1])};
}

//---------------------------------------------------------------------------//
LocalSurfaceId RectGrid::edge_surface(Axis ax, size_type edge) const
{
    NMC_ASSERT(edge < this->num_edges(ax));
    size_type offset = 0;
    for (int i = 0; i < to_int(ax); ++i)
    {
        offset += edges_[i].size();
    }
    return LocalSurfaceId{offset + edge};
}

//---------------------------------------------------------------------------//
std::pair<Axis, size_type> RectGrid::surface_edge(LocalSurfaceId s) const
{
    NMC_EXPECT(s);
    size_type idx = s.get();
    for (int ax = 0; ax < 3; ++ax)
    {
        if (idx < edges_[ax].size())
        {
            return {static_cast<Axis>(ax), idx};
        }
        idx -= edges_[ax].size();
    }
    NMC_EXPECT(false && "surface ID out of range");
    return {};
}

//---------------------------------------------------------------------------//
std::optional<Ijk> rect_find_cell(RectGrid const& grid, Real3 const& pos)
{
    Ijk result;
    for (int ax = 0; ax < 3; ++ax)
    {
        auto idx = grid.find(static_cast<Axis>(ax), pos[ax]);
        if (!idx)
        {
            return std::nullopt;
        }
        result[ax] = *idx;
    }
    return result;
}

//---------------------------------------------------------------------------//
std::optional<Ijk> rect_cross_surface(RectGrid const& grid,
                                      Ijk const& cell,
                                      Axis ax,
                                      Sense dir_sign)
{
    Ijk result = cell;
    size_type& i = result[to_int(ax)];
    if (dir_sign == Sense::positive)
    {
        if (i + 1 >= grid.num_cells(ax))
        {
            return std::nullopt;
        }
        ++i;
    }
    else
    {
        if (i == 0)
        {
            return std::nullopt;
        }
        --i;
    }
    return result;
}

//---------------------------------------------------------------------------//
std::optional<RectIntersection> rect_distance_to_surface(RectGrid const& grid,
                                                         Ijk const& cell,
                                                         Real3 const& pos,
                                                         Real3 const& dir)
{
    std::optional<RectIntersection> result;
    for (int ax = 0; ax < 3; ++ax)
    {
        real_type const u = dir[ax];
        if (u == 0)
        {
            continue;
        }
        auto const edges = grid.edges(static_cast<Axis>(ax));
        real_type const edge = u > 0 ? edges[cell[ax] + 1] : edges[cell[ax]];
        real_type const dist = (edge - pos[ax]) / u;
        if (dist > 0 && (!result || dist < result->distance))
        {
            result = RectIntersection{dist,
                                      static_cast<Axis>(ax),
                                      u > 0 ? Sense::positive : Sense::negative};
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
// RECT ARRAY UNIVERSE
//---------------------------------------------------------------------------//
RectArrayUniverse::RectArrayUniverse(RectGrid grid, std::vector<Daughter> fill)
    : grid_{std::move(grid)}, fill_{std::move(fill)}
{
    NMC_VALIDATE(fill_.size() == grid_.num_cells(),
                 ConfigError,
                 << "array fill has " << fill_.size() << " entries but grid has "
                 << grid_.num_cells() << " cells");
    for (auto const& d : fill_)
    {
        NMC_VALIDATE(d.universe,
                     ConfigError,
                     << "array cell has no daughter universe");
    }
}

//---------------------------------------------------------------------------//
Daughter const& RectArrayUniverse::daughter(LocalCellId c) const
{
    NMC_EXPECT(c && c.get() < fill_.size());
    return fill_[c.get()];
}

//---------------------------------------------------------------------------//
std::optional<LocalCellId> RectArrayUniverse::find_cell(Real3 const& pos) const
{
    if (auto ijk = rect_find_cell(grid_, pos))
    {
        return LocalCellId{grid_.index(*ijk)};
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
/*!
 * Nearest forward face crossing, as a surface ID.
 *
 * The arithmetic matches the CSG plane intersection exactly so that an array
 * and its pseudo-array report bit-identical distances.
 */
std::optional<Intersection>
RectArrayUniverse::intersect(LocalCellId c,
                             Real3 const& pos,
                             Real3 const& dir,
                             OnSurface on_surface,
                             std::span<char const> skip) const
{
    Ijk const ijk = grid_.ijk(c.get());
    std::optional<Intersection> result;
    for (int ax = 0; ax < 3; ++ax)
    {
        real_type const u = dir[ax];
        if (u == 0)
        {
            continue;
        }
        size_type const edge = u > 0 ? ijk[ax] + 1 : ijk[ax];
        auto const sid = grid_.edge_surface(static_cast<Axis>(ax), edge);
        if (!skip.empty() && skip[sid.get()])
        {
            continue;
        }
        real_type const min_dist
            = (sid == on_surface.surface) ? on_surface.bump : 0;
        real_type const dist = (grid_.edges(static_cast<Axis>(ax))[edge] - pos[ax])
                               / u;
        if (dist > min_dist && (!result || dist < result->distance))
        {
            result = Intersection{
                dist, sid, u > 0 ? Sense::positive : Sense::negative};
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Cell on the far side of a face.
 *
 * The O(1) index step is accepted when the (bumped) position lies in the
 * stepped cell. Otherwise, as at grid corners, the containing cell other
 * than the original is located by search, which is the result a CSG
 * tracker gives for the same crossing.
 */
std::optional<LocalCellId> RectArrayUniverse::cross_surface(
    Real3 const& pos,
    LocalCellId from,
    LocalSurfaceId surface,
    Sense new_sense) const
{
    auto const [ax, edge] = grid_.surface_edge(surface);
    if (auto next = rect_cross_surface(grid_, grid_.ijk(from.get()), ax, new_sense))
    {
        if (this->cell_contains(*next, pos))
        {
            return LocalCellId{grid_.index(*next)};
        }
    }
    auto found = this->find_cell(pos);
    if (found && *found == from)
    {
        return std::nullopt;
    }
    return found;
}

//---------------------------------------------------------------------------//
bool RectArrayUniverse::cell_contains(Ijk const& ijk, Real3 const& pos) const
{
    for (int ax = 0; ax < 3; ++ax)
    {
        auto const e = grid_.edges(static_cast<Axis>(ax));
        if (!(pos[ax] >= e[ijk[ax]] && pos[ax] < e[ijk[ax] + 1]))
        {
            return false;
        }
    }
    return true;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
