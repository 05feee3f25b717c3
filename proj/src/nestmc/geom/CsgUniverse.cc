//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/geom/CsgUniverse.cc
//---------------------------------------------------------------------------//
#include "CsgUniverse.hh"

#include <algorithm>

#include "nestmc/base/Assert.hh"
#include "nestmc/bih/CellBBox.hh"

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
// Finite stand-in used when a universe is not bounded along some axis
constexpr real_type max_extent = 1e10;

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
Surface const& CsgUniverse::surface(LocalSurfaceId s) const
{
    NMC_EXPECT(s && s.get() < surfaces_.size());
    return surfaces_[s.get()];
}

//---------------------------------------------------------------------------//
CellDef const& CsgUniverse::cell(LocalCellId c) const
{
    NMC_EXPECT(c && c.get() < cells_.size());
    return cells_[c.get()];
}

//---------------------------------------------------------------------------//
Aabb const& CsgUniverse::cell_bbox(LocalCellId c) const
{
    NMC_EXPECT(c && c.get() < cells_.size());
    return cell_bboxes_[c.get()];
}

//---------------------------------------------------------------------------//
bool CsgUniverse::is_boundary(LocalSurfaceId s) const
{
    NMC_EXPECT(s && s.get() < surfaces_.size());
    return boundary_[s.get()];
}

//---------------------------------------------------------------------------//
std::span<LocalCellId const>
CsgUniverse::neighbors(LocalSurfaceId s, Sense sense) const
{
    NMC_EXPECT(s && s.get() < surfaces_.size());
    return neighbors_[neighbor_index(s, sense)];
}

//---------------------------------------------------------------------------//
std::vector<LocalCellId> CsgUniverse::surface_neighbors(LocalSurfaceId s) const
{
    auto neg = this->neighbors(s, Sense::negative);
    auto pos = this->neighbors(s, Sense::positive);
    std::vector<LocalCellId> result;
    result.reserve(neg.size() + pos.size());
    std::merge(neg.begin(), neg.end(), pos.begin(), pos.end(),
               std::back_inserter(result));
    return result;
}

//---------------------------------------------------------------------------//
bool CsgUniverse::cell_contains(LocalCellId c, Real3 const& pos) const
{
    NMC_EXPECT(c && c.get() < cells_.size());
    for (auto const& [sid, sense] : cells_[c.get()].faces)
    {
        if (sense_of(surfaces_[sid.get()], pos) != sense)
        {
            return false;
        }
    }
    return true;
}

//---------------------------------------------------------------------------//
std::optional<LocalCellId> CsgUniverse::find_cell(Real3 const& pos) const
{
    if (bih_)
    {
        return bih_->find(pos, [this, &pos](LocalCellId c) {
            return this->cell_contains(c, pos);
        });
    }
    return this->find_cell_linear(pos);
}

//---------------------------------------------------------------------------//
std::optional<LocalCellId> CsgUniverse::find_cell_linear(Real3 const& pos) const
{
    for (size_type i = 0; i < cells_.size(); ++i)
    {
        if (this->cell_contains(LocalCellId{i}, pos))
        {
            return LocalCellId{i};
        }
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
/*!
 * Find the nearest surface crossing out of a cell.
 *
 * Only the surface the particle sits on (if any) gets the bump-distance
 * exclusion band; all others accept any strictly positive distance. Equal
 * distances resolve to the lowest surface ID.
 */
std::optional<Intersection> CsgUniverse::intersect(LocalCellId c,
                                                   Real3 const& pos,
                                                   Real3 const& dir,
                                                   OnSurface on_surface,
                                                   std::span<char const> skip) const
{
    NMC_ASSERT(c && c.get() < cells_.size());
    std::optional<Intersection> result;
    for (auto const& [sid, sense] : cells_[c.get()].faces)
    {
        if (!skip.empty() && skip[sid.get()])
        {
            continue;
        }
        real_type const min_dist
            = (sid == on_surface.surface) ? on_surface.bump : 0;
        auto dist = distance_to(surfaces_[sid.get()], pos, dir, min_dist);
        if (!dist)
        {
            continue;
        }
        if (!result || *dist < result->distance
            || (*dist == result->distance && sid < result->surface))
        {
            result = Intersection{*dist, sid, flip_sense(sense)};
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
Intersection CsgUniverse::distance_to_surface(LocalCellId c,
                                              Real3 const& pos,
                                              Real3 const& dir,
                                              OnSurface on_surface) const
{
    NMC_EXPECT(c && c.get() < cells_.size());
    auto result = this->intersect(c, pos, dir, on_surface);
    NMC_VALIDATE(result,
                 GeometryError,
                 << "no forward crossing out of cell " << c.get()
                 << ": cell is not closed");
    return *result;
}

//---------------------------------------------------------------------------//
std::optional<LocalCellId> CsgUniverse::cross_surface(Real3 const& pos,
                                                      LocalCellId from,
                                                      LocalSurfaceId surface,
                                                      Sense new_sense) const
{
    if (bih_)
    {
        return bih_->find(pos, [this, &pos, from](LocalCellId c) {
            return c != from && this->cell_contains(c, pos);
        });
    }
    return this->cross_surface_neighbors(pos, from, surface, new_sense);
}

//---------------------------------------------------------------------------//
std::optional<LocalCellId>
CsgUniverse::cross_surface_neighbors(Real3 const& pos,
                                     LocalCellId from,
                                     LocalSurfaceId surface,
                                     Sense new_sense) const
{
    for (LocalCellId c : this->neighbors(surface, new_sense))
    {
        if (c != from && this->cell_contains(c, pos))
        {
            return c;
        }
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
// BUILDER
//---------------------------------------------------------------------------//
LocalSurfaceId CsgUniverseBuilder::add_surface(Surface const& s)
{
    validate_surface(s);
    for (size_type i = 0; i < surfaces_.size(); ++i)
    {
        if (soft_equal(surfaces_[i], s, dedup_tolerance))
        {
            return LocalSurfaceId{i};
        }
    }
    surfaces_.push_back(s);
    boundary_.push_back(false);
    return LocalSurfaceId{static_cast<size_type>(surfaces_.size() - 1)};
}

//---------------------------------------------------------------------------//
LocalCellId CsgUniverseBuilder::add_cell(CellDef cell)
{
    NMC_VALIDATE(!cell.faces.empty(),
                 ConfigError,
                 << "cell " << cells_.size() << " has no faces");
    NMC_VALIDATE(cell.material.has_value() != cell.daughter.has_value(),
                 ConfigError,
                 << "cell " << cells_.size()
                 << " must have exactly one of a material or a daughter");
    for (auto const& f : cell.faces)
    {
        NMC_VALIDATE(f.surface && f.surface.get() < surfaces_.size(),
                     ConfigError,
                     << "cell " << cells_.size()
                     << " references an undefined surface");
    }
    cells_.push_back(std::move(cell));
    return LocalCellId{static_cast<size_type>(cells_.size() - 1)};
}

//---------------------------------------------------------------------------//
void CsgUniverseBuilder::mark_boundary(LocalSurfaceId s)
{
    NMC_EXPECT(s && s.get() < surfaces_.size());
    boundary_[s.get()] = true;
}

//---------------------------------------------------------------------------//
CsgUniverse CsgUniverseBuilder::build(CsgUniverse::Options const& opts) &&
{
    NMC_VALIDATE(!cells_.empty(), ConfigError, << "universe has no cells");

    CsgUniverse u;
    u.surfaces_ = std::move(surfaces_);
    u.cells_ = std::move(cells_);
    u.boundary_ = std::move(boundary_);
    u.neighbors_ = build_neighbor_lists(u.cells_, u.surfaces_.size());

    // One-sided surfaces are universe boundaries
    for (size_type s = 0; s < u.surfaces_.size(); ++s)
    {
        bool const neg = !u.neighbors_[2 * s].empty();
        bool const pos = !u.neighbors_[2 * s + 1].empty();
        if (neg != pos)
        {
            u.boundary_[s] = true;
        }
    }

    // Universe box is the union of cells truncated from infinity
    Aabb bbox = Aabb::null();
    for (auto const& cell : u.cells_)
    {
        bbox = calc_union(
            bbox, compute_cell_bbox(Aabb::infinite(), u.surfaces_, cell));
    }
    for (int i = 0; i < 3; ++i)
    {
        bbox.lo[i] = std::max(bbox.lo[i], -max_extent);
        bbox.hi[i] = std::min(bbox.hi[i], max_extent);
    }
    u.bbox_ = bbox;

    u.cell_bboxes_.reserve(u.cells_.size());
    for (auto const& cell : u.cells_)
    {
        u.cell_bboxes_.push_back(compute_cell_bbox(bbox, u.surfaces_, cell));
    }

    if (opts.use_bih)
    {
        std::vector<BihBox> boxes;
        boxes.reserve(u.cells_.size());
        for (size_type i = 0; i < u.cells_.size(); ++i)
        {
            boxes.push_back({LocalCellId{i}, u.cell_bboxes_[i]});
        }
        u.bih_ = build_bih(boxes, opts.bih);
    }
    return u;
}

//---------------------------------------------------------------------------//
std::vector<std::vector<LocalCellId>>
build_neighbor_lists(std::span<CellDef const> cells, size_type num_surfaces)
{
    std::vector<std::vector<LocalCellId>> result(2 * std::size_t(num_surfaces));
    for (size_type c = 0; c < cells.size(); ++c)
    {
        for (auto const& [sid, sense] : cells[c].faces)
        {
            auto& list
                = result[2 * std::size_t(sid.get())
                         + (sense == Sense::positive ? 1 : 0)];
            if (list.empty() || list.back() != LocalCellId{c})
            {
                list.push_back(LocalCellId{c});
            }
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
