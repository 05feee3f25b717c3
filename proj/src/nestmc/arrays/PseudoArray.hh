//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/arrays/PseudoArray.hh
//! Conversion of array universes into equivalent CSG universes.
//---------------------------------------------------------------------------//
#pragma once

#include "nestmc/geom/CsgUniverse.hh"

#include "HexArray.hh"
#include "RectArray.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
// CSG universe with one cell per array cell (same cell and surface IDs)
CsgUniverse to_pseudo_array_rect(RectArrayUniverse const& array,
                                 CsgUniverse::Options const& opts = {});

// CSG universe of hexagonal prisms, cell index = hex + num_hexes * k
CsgUniverse to_pseudo_array_hex(HexGridSpec const& spec,
                                CsgUniverse::Options const& opts = {});

//---------------------------------------------------------------------------//
}  // namespace nestmc
