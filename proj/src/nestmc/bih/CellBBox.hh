//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/bih/CellBBox.hh
//---------------------------------------------------------------------------//
#pragma once

#include <span>

#include "nestmc/geom/CsgTypes.hh"
#include "nestmc/geom/Surface.hh"

#include "Aabb.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
// Bounding box of a cell obtained by truncating the universe box
Aabb compute_cell_bbox(Aabb const& universe_bbox,
                       std::span<Surface const> surfaces,
                       CellDef const& cell);

//---------------------------------------------------------------------------//
}  // namespace nestmc
