//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/TransportTypes.cc
//---------------------------------------------------------------------------//
#include "TransportTypes.hh"

#include "nestmc/base/Assert.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
char const* to_cstring(Driver d)
{
    return d == Driver::history ? "history" : "event";
}

Driver driver_from_string(std::string_view s)
{
    if (s == "history")
    {
        return Driver::history;
    }
    NMC_VALIDATE(s == "event",
                 ConfigError,
                 << "unknown driver '" << s << "' (expected history or event)");
    return Driver::event;
}

char const* to_cstring(Op op)
{
    static char const* const names[] = {"find_cell",
                                        "distance_to_surface",
                                        "move_within_cell",
                                        "cross_surface",
                                        "change_direction",
                                        "collide"};
    return names[static_cast<int>(op)];
}

//---------------------------------------------------------------------------//
Accounting& Accounting::operator+=(Accounting const& o)
{
    histories += o.histories;
    absorbed += o.absorbed;
    fission += o.fission;
    leaked += o.leaked;
    lost += o.lost;
    collisions += o.collisions;
    crossings += o.crossings;
    return *this;
}

OpStats& OpStats::operator+=(OpStats const& o)
{
    for (std::size_t i = 0; i < size; ++i)
    {
        calls[i] += o.calls[i];
        seconds[i] += o.seconds[i];
    }
    total_seconds += o.total_seconds;
    return *this;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
