//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/TransportTypes.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nestmc/bih/Aabb.hh"
#include "nestmc/multiverse/GeoState.hh"

#include "Rng.hh"
#include "Tally.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
enum class Driver : unsigned char
{
    history,
    event
};

char const* to_cstring(Driver d);
Driver driver_from_string(std::string_view s);

//---------------------------------------------------------------------------//
//! Transport run parameters
struct TransportConfig
{
    size_type histories{1000};
    size_type inactive{0};
    size_type active{1};
    std::uint64_t seed{20240611};
    Driver driver{Driver::history};
    size_type workers{1};
    std::optional<Aabb> source_box;  //!< Default: root bounding box
    std::optional<MeshSpec> mesh;
    bool time_ops{false};
    size_type max_events{1000000};  //!< Per history, before it counts lost
    real_type lost_tolerance{1e-6};
};

//---------------------------------------------------------------------------//
struct FissionSite
{
    Real3 pos{0, 0, 0};
    size_type parent{0};  //!< History that produced the site

    friend bool operator==(FissionSite const&, FissionSite const&) = default;
};

using FissionBank = std::vector<FissionSite>;

//---------------------------------------------------------------------------//
//! How histories ended, plus event counts
struct Accounting
{
    std::uint64_t histories{0};
    std::uint64_t absorbed{0};
    std::uint64_t fission{0};
    std::uint64_t leaked{0};
    std::uint64_t lost{0};
    std::uint64_t collisions{0};
    std::uint64_t crossings{0};

    std::uint64_t terminated() const
    {
        return absorbed + fission + leaked + lost;
    }
    Accounting& operator+=(Accounting const& o);
    friend bool operator==(Accounting const&, Accounting const&) = default;
};

//---------------------------------------------------------------------------//
//! Timed operation categories
enum class Op : unsigned char
{
    find_cell,
    distance_to_surface,
    move_within_cell,
    cross_surface,
    change_direction,
    collide,
    size_
};

char const* to_cstring(Op op);

struct OpStats
{
    static constexpr std::size_t size = static_cast<std::size_t>(Op::size_);
    std::array<std::uint64_t, size> calls{};
    std::array<double, size> seconds{};
    double total_seconds{0};  //!< Driver time these operations belong to

    OpStats& operator+=(OpStats const& o);
};

//---------------------------------------------------------------------------//
//! One trace record of a history (for replay comparisons)
struct TraceEvent
{
    enum class Kind : unsigned char
    {
        birth,
        cross,
        collide,
        leak,
        lost
    };
    Kind kind{Kind::birth};
    size_type level{0};
    size_type surface{0};
    size_type flat_cell{0};
    real_type distance{0};
    Real3 pos{0, 0, 0};

    friend bool operator==(TraceEvent const&, TraceEvent const&) = default;
};

//---------------------------------------------------------------------------//
//! Output of one cycle
struct CycleResult
{
    real_type k{0};
    FissionBank bank;
    TallyCounts counts;
    Accounting accounting;
    OpStats ops;
    std::vector<real_type> yields;  //!< Expected fission yield per history
    double seconds{0};
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
