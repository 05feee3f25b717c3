//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/multiverse/GeometryParams.cc
//---------------------------------------------------------------------------//
#include "GeometryParams.hh"

#include "Trackers.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
char const* to_cstring(UType t)
{
    switch (t)
    {
        case UType::csg:
            return "csg";
        case UType::rect_array:
            return "rect_array";
        case UType::hex_array:
            return "hex_array";
    }
    return "?";
}

//---------------------------------------------------------------------------//
std::string GeometryInput::label(UniverseId u) const
{
    if (u && u.get() < labels.size() && !labels[u.get()].empty())
    {
        return labels[u.get()];
    }
    return "u" + std::to_string(u ? u.get() : 0);
}

//---------------------------------------------------------------------------//
DynamicDispatch::DynamicDispatch(GeometryParams const& params)
{
    for (size_type u = 0; u < params.num_universes(); ++u)
    {
        UniverseId const uid(u);
        switch (params.types[u])
        {
            case UType::csg:
                trackers_.push_back(
                    std::make_shared<DynamicTracker<CsgTracker>>(
                        CsgTracker{uid, params}));
                break;
            case UType::rect_array:
                trackers_.push_back(
                    std::make_shared<DynamicTracker<RectTracker>>(
                        RectTracker{uid, params}));
                break;
            case UType::hex_array:
                NMC_ASSERT_UNREACHABLE();
        }
    }
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
