//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/base/Types.hh
//! Fundamental types shared by every module.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

namespace nestmc
{
//---------------------------------------------------------------------------//
// TYPE ALIASES
//---------------------------------------------------------------------------//
using real_type = double;
using size_type = std::uint32_t;
using Real3 = std::array<real_type, 3>;

//---------------------------------------------------------------------------//
/*!
 * Type-safe index into a container.
 *
 * The tag type distinguishes otherwise-identical integer IDs (a universe
 * index cannot be passed where a surface index is expected). A
 * default-constructed ID is invalid.
 */
template<class Tag, class T = size_type>
class OpaqueId
{
  public:
    using value_type = T;

    constexpr OpaqueId() = default;
    explicit constexpr OpaqueId(value_type v) : value_{v} {}

    //! Whether the ID refers to something
    explicit constexpr operator bool() const { return value_ != invalid(); }

    //! Raw index; only meaningful if valid
    constexpr value_type get() const { return value_; }

    //! Raw index or the sentinel
    constexpr value_type unchecked_get() const { return value_; }

    friend constexpr bool operator==(OpaqueId, OpaqueId) = default;
    friend constexpr auto operator<=>(OpaqueId, OpaqueId) = default;

  private:
    static constexpr value_type invalid()
    {
        return std::numeric_limits<value_type>::max();
    }

    value_type value_{invalid()};
};

using UniverseId = OpaqueId<struct Universe_>;
using LocalCellId = OpaqueId<struct LocalCell_>;
using LocalSurfaceId = OpaqueId<struct LocalSurface_>;
using MaterialId = OpaqueId<struct Material_>;

//---------------------------------------------------------------------------//
// ENUMERATIONS
//---------------------------------------------------------------------------//
//! Side of a surface; zero of the implicit function is positive
enum class Sense : unsigned char
{
    negative,
    positive
};

//! Cartesian axis
enum class Axis : unsigned char
{
    x,
    y,
    z,
    size_
};

//! Boundary condition applied when a particle leaves the root universe
enum class BoundaryCondition : unsigned char
{
    vacuum,
    reflecting
};

//---------------------------------------------------------------------------//
// INLINE HELPERS
//---------------------------------------------------------------------------//
constexpr Sense flip_sense(Sense s)
{
    return s == Sense::positive ? Sense::negative : Sense::positive;
}

//! Map an implicit-function value to a sense (zero is positive)
constexpr Sense to_sense(real_type f)
{
    return f >= 0 ? Sense::positive : Sense::negative;
}

constexpr char to_char(Sense s)
{
    return s == Sense::positive ? '+' : '-';
}

constexpr int to_int(Axis a)
{
    return static_cast<int>(a);
}

constexpr char to_char(Axis a)
{
    return "xyz"[to_int(a)];
}

inline real_type dot(Real3 const& a, Real3 const& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline real_type norm(Real3 const& a)
{
    return std::sqrt(dot(a, a));
}

inline Real3 operator+(Real3 const& a, Real3 const& b)
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Real3 operator-(Real3 const& a, Real3 const& b)
{
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Real3 operator*(real_type s, Real3 const& a)
{
    return {s * a[0], s * a[1], s * a[2]};
}

//! Add a scaled vector in place: y <- a * x + y
inline void axpy(real_type a, Real3 const& x, Real3* y)
{
    for (int i = 0; i < 3; ++i)
    {
        (*y)[i] = a * x[i] + (*y)[i];
    }
}

//! Return a unit-length copy
inline Real3 make_unit_vector(Real3 const& v)
{
    real_type const inv = 1 / norm(v);
    return {v[0] * inv, v[1] * inv, v[2] * inv};
}

inline bool is_soft_unit_vector(Real3 const& v, real_type tol = 1e-12)
{
    return std::fabs(dot(v, v) - 1) < 2 * tol;
}

inline bool is_finite(Real3 const& v)
{
    return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

//---------------------------------------------------------------------------//
}  // namespace nestmc

//---------------------------------------------------------------------------//
//! Hash support so IDs can key unordered containers
template<class Tag, class T>
struct std::hash<nestmc::OpaqueId<Tag, T>>
{
    std::size_t operator()(nestmc::OpaqueId<Tag, T> id) const noexcept
    {
        return std::hash<T>{}(id.unchecked_get());
    }
};
