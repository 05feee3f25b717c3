//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/bih/Aabb.hh
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <limits>

#include "nestmc/base/Types.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Axis-aligned bounding box.
 *
 * An "infinite" box spans the whole space; a box is empty if any lower
 * bound exceeds its upper bound. Zero-thickness boxes are valid.
 */
struct Aabb
{
    Real3 lo{0, 0, 0};
    Real3 hi{0, 0, 0};

    static Aabb infinite()
    {
        constexpr real_type inf = std::numeric_limits<real_type>::infinity();
        return {{-inf, -inf, -inf}, {inf, inf, inf}};
    }

    //! Reversed box that is the identity for union
    static Aabb null()
    {
        constexpr real_type inf = std::numeric_limits<real_type>::infinity();
        return {{inf, inf, inf}, {-inf, -inf, -inf}};
    }

    bool empty() const
    {
        return lo[0] > hi[0] || lo[1] > hi[1] || lo[2] > hi[2];
    }

    bool finite() const { return is_finite(lo) && is_finite(hi); }

    //! Closed-interval containment
    bool contains(Real3 const& p) const
    {
        return lo[0] <= p[0] && p[0] <= hi[0] && lo[1] <= p[1]
               && p[1] <= hi[1] && lo[2] <= p[2] && p[2] <= hi[2];
    }

    bool contains(Aabb const& other) const
    {
        return contains(other.lo) && contains(other.hi);
    }

    Real3 center() const
    {
        return {(lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2, (lo[2] + hi[2]) / 2};
    }

    //! Total surface area, floored at a tiny value for planar boxes
    real_type surface_area() const
    {
        real_type const dx = hi[0] - lo[0];
        real_type const dy = hi[1] - lo[1];
        real_type const dz = hi[2] - lo[2];
        return std::max(2 * (dx * dy + dy * dz + dz * dx), real_type(1e-30));
    }

    friend bool operator==(Aabb const&, Aabb const&) = default;
};

//---------------------------------------------------------------------------//
inline Aabb calc_union(Aabb const& a, Aabb const& b)
{
    Aabb r;
    for (int i = 0; i < 3; ++i)
    {
        r.lo[i] = std::min(a.lo[i], b.lo[i]);
        r.hi[i] = std::max(a.hi[i], b.hi[i]);
    }
    return r;
}

inline Aabb calc_intersection(Aabb const& a, Aabb const& b)
{
    Aabb r;
    for (int i = 0; i < 3; ++i)
    {
        r.lo[i] = std::max(a.lo[i], b.lo[i]);
        r.hi[i] = std::min(a.hi[i], b.hi[i]);
    }
    return r;
}

inline Aabb translated(Aabb const& b, Real3 const& t)
{
    return {b.lo + t, b.hi + t};
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
