//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/geom/Surface.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "nestmc/base/Types.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Plane perpendicular to an axis: f(r) = r[axis] - position.
 */
template<Axis A>
struct PlaneAligned
{
    real_type position{};

    static constexpr Axis axis() { return A; }

    real_type evaluate(Real3 const& pos) const
    {
        return pos[to_int(A)] - position;
    }

    std::optional<real_type>
    intersect(Real3 const& pos, Real3 const& dir, real_type min_dist) const
    {
        real_type const u = dir[to_int(A)];
        if (u == 0)
        {
            return std::nullopt;
        }
        real_type const dist = (position - pos[to_int(A)]) / u;
        if (dist > min_dist)
        {
            return dist;
        }
        return std::nullopt;
    }
};

using PlaneX = PlaneAligned<Axis::x>;
using PlaneY = PlaneAligned<Axis::y>;
using PlaneZ = PlaneAligned<Axis::z>;

//---------------------------------------------------------------------------//
/*!
 * Arbitrary plane n.r = d with unit normal: f(r) = n.r - d.
 */
struct GeneralPlane
{
    Real3 normal{0, 0, 1};
    real_type displacement{};

    real_type evaluate(Real3 const& pos) const
    {
        return dot(normal, pos) - displacement;
    }

    std::optional<real_type>
    intersect(Real3 const& pos, Real3 const& dir, real_type min_dist) const
    {
        real_type const n_dot_u = dot(normal, dir);
        if (n_dot_u == 0)
        {
            return std::nullopt;
        }
        real_type const dist = (displacement - dot(normal, pos)) / n_dot_u;
        if (dist > min_dist)
        {
            return dist;
        }
        return std::nullopt;
    }
};

//---------------------------------------------------------------------------//
/*!
 * Infinite cylinder parallel to z: f(r) = (x-x0)^2 + (y-y0)^2 - r^2.
 */
struct CylinderZ
{
    real_type x0{};
    real_type y0{};
    real_type radius{1};

    real_type evaluate(Real3 const& pos) const
    {
        real_type const dx = pos[0] - x0;
        real_type const dy = pos[1] - y0;
        return dx * dx + dy * dy - radius * radius;
    }

    std::optional<real_type>
    intersect(Real3 const& pos, Real3 const& dir, real_type min_dist) const;
};

//---------------------------------------------------------------------------//
/*!
 * Sphere: f(r) = |r - c|^2 - r^2.
 */
struct Sphere
{
    Real3 center{0, 0, 0};
    real_type radius{1};

    real_type evaluate(Real3 const& pos) const
    {
        Real3 const d = pos - center;
        return dot(d, d) - radius * radius;
    }

    std::optional<real_type>
    intersect(Real3 const& pos, Real3 const& dir, real_type min_dist) const;
};

//---------------------------------------------------------------------------//
using Surface
    = std::variant<PlaneX, PlaneY, PlaneZ, GeneralPlane, CylinderZ, Sphere>;

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//
// Sense of a point with respect to a surface (zero maps to positive)
Sense sense_of(Surface const& s, Real3 const& pos);

// Smallest crossing distance strictly greater than min_dist
std::optional<real_type> distance_to(Surface const& s,
                                     Real3 const& pos,
                                     Real3 const& dir,
                                     real_type min_dist);

// Throw ConfigError if the surface parameters are invalid
void validate_surface(Surface const& s);

// Whether two surfaces are the same variant with parameters within tol
bool soft_equal(Surface const& a, Surface const& b, real_type tol = 1e-9);

// Surface moved by a translation vector
Surface translated(Surface const& s, Real3 const& translation);

// Axis of an axis-aligned plane
std::optional<Axis> plane_axis(Surface const& s);

// Position of an axis-aligned plane
std::optional<real_type> plane_position(Surface const& s);

// Short type name ("px", "py", "pz", "plane", "cz", "sph")
char const* type_name(Surface const& s);

// Human-readable description
std::string to_string(Surface const& s);

//---------------------------------------------------------------------------//
/*!
 * Numerically stable smaller/larger roots of a*t^2 + 2*b*t + c = 0.
 *
 * Returns the smallest root strictly greater than \c min_dist, if any.
 * Tangent and missing rays (discriminant <= 0) return no crossing.
 */
std::optional<real_type> solve_half_quadratic(real_type a,
                                              real_type b,
                                              real_type c,
                                              real_type min_dist);

// Same, with a discriminant b^2 - ac computed by the caller
std::optional<real_type> solve_half_quadratic(real_type a,
                                              real_type b,
                                              real_type c,
                                              real_type disc,
                                              real_type min_dist);

//---------------------------------------------------------------------------//
//! Distance a particle is nudged past a surface when crossing it
inline real_type bump_distance(Real3 const& pos)
{
    return std::fmax(1e-8, 1e-11 * norm(pos));
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
