//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/geom/Surface.cc
//---------------------------------------------------------------------------//
#include "Surface.hh"

#include <cmath>
#include <sstream>

#include "nestmc/base/Assert.hh"

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
bool soft_eq(real_type a, real_type b, real_type tol)
{
    return std::fabs(a - b) <= tol;
}

bool soft_eq(Real3 const& a, Real3 const& b, real_type tol)
{
    return soft_eq(a[0], b[0], tol) && soft_eq(a[1], b[1], tol)
           && soft_eq(a[2], b[2], tol);
}

template<class... Ts>
struct Overload : Ts...
{
    using Ts::operator()...;
};
template<class... Ts>
Overload(Ts...) -> Overload<Ts...>;

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::optional<real_type> solve_half_quadratic(real_type a,
                                              real_type b,
                                              real_type c,
                                              real_type min_dist)
{
    return solve_half_quadratic(a, b, c, b * b - a * c, min_dist);
}

//---------------------------------------------------------------------------//
std::optional<real_type> solve_half_quadratic(real_type a,
                                              real_type b,
                                              real_type c,
                                              real_type disc,
                                              real_type min_dist)
{
    if (a == 0)
    {
        // Ray parallel to the quadric axis: never crosses
        return std::nullopt;
    }
    if (!(disc > 0))
    {
        return std::nullopt;
    }
    // q = -(b + sign(b) sqrt(disc)) avoids cancellation; roots are q/a, c/q
    real_type const sqrt_disc = std::sqrt(disc);
    real_type const q = -(b + std::copysign(sqrt_disc, b));
    real_type t1 = q / a;
    real_type t2 = (q != 0) ? c / q : t1;
    if (t2 < t1)
    {
        std::swap(t1, t2);
    }
    if (t1 > min_dist)
    {
        return t1;
    }
    if (t2 > min_dist)
    {
        return t2;
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
std::optional<real_type> CylinderZ::intersect(Real3 const& pos,
                                              Real3 const& dir,
                                              real_type min_dist) const
{
    real_type const dx = pos[0] - x0;
    real_type const dy = pos[1] - y0;
    real_type const a = dir[0] * dir[0] + dir[1] * dir[1];
    real_type const b = dx * dir[0] + dy * dir[1];
    real_type const c = dx * dx + dy * dy - radius * radius;
    // b^2 - ac without cancelling large terms for distant particles
    real_type const perp = dx * dir[1] - dy * dir[0];
    real_type const disc = a * radius * radius - perp * perp;
    return solve_half_quadratic(a, b, c, disc, min_dist);
}

//---------------------------------------------------------------------------//
std::optional<real_type>
Sphere::intersect(Real3 const& pos, Real3 const& dir, real_type min_dist) const
{
    Real3 const d = pos - center;
    real_type const a = dot(dir, dir);
    Real3 const cross{d[1] * dir[2] - d[2] * dir[1],
                      d[2] * dir[0] - d[0] * dir[2],
                      d[0] * dir[1] - d[1] * dir[0]};
    real_type const disc = a * radius * radius - dot(cross, cross);
    return solve_half_quadratic(
        a, dot(d, dir), dot(d, d) - radius * radius, disc, min_dist);
}

//---------------------------------------------------------------------------//
Sense sense_of(Surface const& s, Real3 const& pos)
{
    return std::visit([&pos](auto const& surf) { return to_sense(surf.evaluate(pos)); },
                      s);
}

//---------------------------------------------------------------------------//
std::optional<real_type> distance_to(Surface const& s,
                                     Real3 const& pos,
                                     Real3 const& dir,
                                     real_type min_dist)
{
    return std::visit(
        [&](auto const& surf) { return surf.intersect(pos, dir, min_dist); }, s);
}

//---------------------------------------------------------------------------//
void validate_surface(Surface const& s)
{
    std::visit(
        Overload{
            [](GeneralPlane const& p) {
                NMC_VALIDATE(is_finite(p.normal) && std::isfinite(p.displacement),
                             ConfigError,
                             << "plane parameters must be finite");
                NMC_VALIDATE(is_soft_unit_vector(p.normal),
                             ConfigError,
                             << "plane normal must be unit length");
            },
            [](CylinderZ const& c) {
                NMC_VALIDATE(std::isfinite(c.x0) && std::isfinite(c.y0),
                             ConfigError,
                             << "cylinder center must be finite");
                NMC_VALIDATE(c.radius > 0 && std::isfinite(c.radius),
                             ConfigError,
                             << "cylinder radius must be positive: "
                             << c.radius);
            },
            [](Sphere const& sph) {
                NMC_VALIDATE(is_finite(sph.center),
                             ConfigError,
                             << "sphere center must be finite");
                NMC_VALIDATE(sph.radius > 0 && std::isfinite(sph.radius),
                             ConfigError,
                             << "sphere radius must be positive: "
                             << sph.radius);
            },
            [](auto const& p) {
                NMC_VALIDATE(std::isfinite(p.position),
                             ConfigError,
                             << "plane position must be finite");
            }},
        s);
}

//---------------------------------------------------------------------------//
bool soft_equal(Surface const& a, Surface const& b, real_type tol)
{
    if (a.index() != b.index())
    {
        return false;
    }
    return std::visit(
        Overload{
            [&](GeneralPlane const& p) {
                auto const& q = std::get<GeneralPlane>(b);
                return soft_eq(p.normal, q.normal, tol)
                       && soft_eq(p.displacement, q.displacement, tol);
            },
            [&](CylinderZ const& c) {
                auto const& d = std::get<CylinderZ>(b);
                return soft_eq(c.x0, d.x0, tol) && soft_eq(c.y0, d.y0, tol)
                       && soft_eq(c.radius, d.radius, tol);
            },
            [&](Sphere const& s) {
                auto const& t = std::get<Sphere>(b);
                return soft_eq(s.center, t.center, tol)
                       && soft_eq(s.radius, t.radius, tol);
            },
            [&](auto const& p) {
                using T = std::decay_t<decltype(p)>;
                return soft_eq(p.position, std::get<T>(b).position, tol);
            }},
        a);
}

//---------------------------------------------------------------------------//
Surface translated(Surface const& s, Real3 const& t)
{
    return std::visit(
        Overload{[&](GeneralPlane const& p) -> Surface {
                     return GeneralPlane{p.normal,
                                         p.displacement + dot(p.normal, t)};
                 },
                 [&](CylinderZ const& c) -> Surface {
                     return CylinderZ{c.x0 + t[0], c.y0 + t[1], c.radius};
                 },
                 [&](Sphere const& sph) -> Surface {
                     return Sphere{sph.center + t, sph.radius};
                 },
                 [&](auto const& p) -> Surface {
                     auto result = p;
                     result.position += t[to_int(p.axis())];
                     return result;
                 }},
        s);
}

//---------------------------------------------------------------------------//
std::optional<Axis> plane_axis(Surface const& s)
{
    switch (s.index())
    {
        case 0:
            return Axis::x;
        case 1:
            return Axis::y;
        case 2:
            return Axis::z;
        default:
            return std::nullopt;
    }
}

//---------------------------------------------------------------------------//
std::optional<real_type> plane_position(Surface const& s)
{
    return std::visit(
        [](auto const& p) -> std::optional<real_type> {
            if constexpr (requires { p.position; })
            {
                return p.position;
            }
            return std::nullopt;
        },
        s);
}

//---------------------------------------------------------------------------//
char const* type_name(Surface const& s)
{
    static char const* const names[] = {"px", "py", "pz", "plane", "cz", "sph"};
    return names[s.index()];
}

//---------------------------------------------------------------------------//
std::string to_string(Surface const& s)
{
    std::ostringstream os;
    os.precision(17);
    os << type_name(s) << '(';
    std::visit(Overload{[&](GeneralPlane const& p) {
                            os << p.normal[0] << ',' << p.normal[1] << ','
                               << p.normal[2] << "; " << p.displacement;
                        },
                        [&](CylinderZ const& c) {
                            os << c.x0 << ',' << c.y0 << "; " << c.radius;
                        },
                        [&](Sphere const& sph) {
                            os << sph.center[0] << ',' << sph.center[1] << ','
                               << sph.center[2] << "; " << sph.radius;
                        },
                        [&](auto const& p) { os << p.position; }},
               s);
    os << ')';
    return os.str();
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
