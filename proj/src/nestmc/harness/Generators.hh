//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/Generators.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nestmc/base/Types.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Small rectilinear core: N x N assemblies of M x M pins.
 *
 * Pins are concentric cylinders in a cuboid, split into axial slabs. With a
 * nonzero gap the core grid alternates gap and assembly intervals, and gap
 * cells hold single-cell gap assemblies of moderator so every core cell is
 * an assembly-level array. Fuel zones follow square rings of assemblies
 * from the center outward.
 */
struct RectCoreParams
{
    size_type assemblies{3};
    size_type pins{5};
    real_type pitch{1.26};
    std::vector<real_type> radii{0.41, 0.475};
    size_type slabs{5};
    real_type height{20};
    real_type gap{0.2};
    std::vector<real_type> zoning{1.0, 0.85};  //!< Fission scaling per zone
};

//! Hexagonal core of hex pins, tracked only through the single tracker
struct HexCoreParams
{
    int rings{3};
    real_type pitch{1.5};
    real_type fuel_radius{0.6};
    size_type slabs{1};
    real_type height{20};
    std::vector<std::string> kinds{"fuel", "fuel", "structure"};  //!< By ring
    bool pointy_top{false};
};

// Model documents with a "manifest" of closed-form counts
nlohmann::json generate_minicore_rect(RectCoreParams const& p);
nlohmann::json generate_minicore_hex(HexCoreParams const& p);

// Reflecting-box infinite media with analytic k
nlohmann::json generate_infinite_medium_1g();
nlohmann::json generate_infinite_medium_2g();

// Analytic infinite-medium k of a model's single material
real_type infinite_medium_k(nlohmann::json const& model);

// Dispatch by name: minicore-rect, minicore-hex, infinite-1g, infinite-2g
nlohmann::json generate_model(std::string const& name,
                              nlohmann::json const& params = {});

//---------------------------------------------------------------------------//
}  // namespace nestmc
