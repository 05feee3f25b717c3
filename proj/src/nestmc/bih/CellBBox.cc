//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/bih/CellBBox.cc
//---------------------------------------------------------------------------//
#include "CellBBox.hh"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nestmc/base/Assert.hh"

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
// Stand-in for infinity when a polygon must be clipped
constexpr real_type huge_extent = 1e10;

using Point2 = std::array<real_type, 2>;

// Clip a convex polygon by the half plane a*x + b*y - d (>= 0 or < 0)
std::vector<Point2> clip_polygon(std::vector<Point2> const& poly,
                                 real_type a,
                                 real_type b,
                                 real_type d,
                                 Sense keep)
{
    real_type const sign = keep == Sense::positive ? 1 : -1;
    auto eval = [&](Point2 const& p) { return sign * (a * p[0] + b * p[1] - d); };

    std::vector<Point2> result;
    auto const n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        Point2 const& cur = poly[i];
        Point2 const& next = poly[(i + 1) % n];
        real_type const fc = eval(cur);
        real_type const fn = eval(next);
        if (fc >= 0)
        {
            result.push_back(cur);
        }
        if ((fc >= 0) != (fn >= 0))
        {
            real_type const t = fc / (fc - fn);
            result.push_back({cur[0] + t * (next[0] - cur[0]),
                              cur[1] + t * (next[1] - cur[1])});
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Truncate the universe bounding box with each of a cell's constraints.
 *
 * Axis-aligned planes clip the corresponding face; the inside of a z
 * cylinder clips x/y to its circumscribing square and the inside of a sphere
 * clips all axes. General planes whose normal lies in the xy plane clip the
 * xy footprint as a convex polygon (exact for prisms such as hexagons);
 * other constraints do not tighten the box, so the result is conservative.
 */
Aabb compute_cell_bbox(Aabb const& universe_bbox,
                       std::span<Surface const> surfaces,
                       CellDef const& cell)
{
    Aabb box = universe_bbox;
    std::vector<SurfaceSense> polygon_planes;

    for (auto const& [sid, sense] : cell.faces)
    {
        NMC_EXPECT(sid && sid.get() < surfaces.size());
        Surface const& s = surfaces[sid.get()];
        if (auto ax = plane_axis(s))
        {
            int const i = to_int(*ax);
            real_type const pos = *plane_position(s);
            if (sense == Sense::positive)
            {
                box.lo[i] = std::max(box.lo[i], pos);
            }
            else
            {
                box.hi[i] = std::min(box.hi[i], pos);
            }
        }
        else if (auto const* cyl = std::get_if<CylinderZ>(&s))
        {
            if (sense == Sense::negative)
            {
                box.lo[0] = std::max(box.lo[0], cyl->x0 - cyl->radius);
                box.hi[0] = std::min(box.hi[0], cyl->x0 + cyl->radius);
                box.lo[1] = std::max(box.lo[1], cyl->y0 - cyl->radius);
                box.hi[1] = std::min(box.hi[1], cyl->y0 + cyl->radius);
            }
        }
        else if (auto const* sph = std::get_if<Sphere>(&s))
        {
            if (sense == Sense::negative)
            {
                for (int i = 0; i < 3; ++i)
                {
                    box.lo[i] = std::max(box.lo[i], sph->center[i] - sph->radius);
                    box.hi[i] = std::min(box.hi[i], sph->center[i] + sph->radius);
                }
            }
        }
        else if (auto const* gp = std::get_if<GeneralPlane>(&s))
        {
            if (gp->normal[2] == 0)
            {
                polygon_planes.push_back({sid, sense});
            }
        }
    }

    if (!polygon_planes.empty() && !box.empty())
    {
        auto clamp = [](real_type v) {
            return std::clamp(v, -huge_extent, huge_extent);
        };
        real_type const x0 = clamp(box.lo[0]), x1 = clamp(box.hi[0]);
        real_type const y0 = clamp(box.lo[1]), y1 = clamp(box.hi[1]);
        std::vector<Point2> poly{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
        for (auto const& [sid, sense] : polygon_planes)
        {
            auto const& gp = std::get<GeneralPlane>(surfaces[sid.get()]);
            poly = clip_polygon(
                poly, gp.normal[0], gp.normal[1], gp.displacement, sense);
            if (poly.empty())
            {
                break;
            }
        }
        if (poly.empty())
        {
            box.lo[0] = 1;
            box.hi[0] = 0;
        }
        else
        {
            real_type xlo = poly[0][0], xhi = poly[0][0];
            real_type ylo = poly[0][1], yhi = poly[0][1];
            for (auto const& p : poly)
            {
                xlo = std::min(xlo, p[0]);
                xhi = std::max(xhi, p[0]);
                ylo = std::min(ylo, p[1]);
                yhi = std::max(yhi, p[1]);
            }
            // Vertices carry roundoff: pad so boundary points stay inside
            auto pad = [](real_type v) {
                return 1e-9 * std::max(real_type(1), std::fabs(v));
            };
            box.lo[0] = std::max(box.lo[0], xlo - pad(xlo));
            box.hi[0] = std::min(box.hi[0], xhi + pad(xhi));
            box.lo[1] = std::max(box.lo[1], ylo - pad(ylo));
            box.hi[1] = std::min(box.hi[1], yhi + pad(yhi));
        }
    }

    NMC_VALIDATE(!box.empty(),
                 GeometryError,
                 << "cell bounding box is empty (contradictory senses)");
    return box;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
