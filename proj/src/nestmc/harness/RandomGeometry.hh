//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/RandomGeometry.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <random>

#include "nestmc/arrays/HexArray.hh"
#include "nestmc/arrays/RectArray.hh"
#include "nestmc/base/Types.hh"
#include "nestmc/geom/CsgUniverse.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Platform-independent sampling on top of a 64-bit Mersenne twister.
 */
class RandomSource
{
  public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    //! Uniform on [0, 1)
    real_type uniform()
    {
        return static_cast<real_type>(engine_() >> 11) * 0x1.0p-53;
    }
    real_type uniform(real_type lo, real_type hi)
    {
        return lo + (hi - lo) * this->uniform();
    }
    //! Integer on [lo, hi]
    size_type integer(size_type lo, size_type hi)
    {
        return lo + static_cast<size_type>(engine_() % (hi - lo + 1));
    }
    bool bernoulli(real_type p) { return this->uniform() < p; }

    Real3 point(Aabb const& box);
    Real3 direction();

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

//---------------------------------------------------------------------------//
// Sorted edges with random nonuniform spacing
std::vector<real_type>
random_edges(RandomSource& rng, size_type num_cells, real_type lo);

// CSG partition of a random grid whose boxes may hold a cylinder or sphere
CsgUniverse random_csg_universe(RandomSource& rng,
                                size_type max_cells,
                                CsgUniverse::Options const& opts = {});

// Rect array with random edges and random daughter universe IDs
RectArrayUniverse random_rect_array(RandomSource& rng, size_type max_dim);

// Hex layout of the given ring count with one z slab
HexGridSpec hex_layout_spec(int rings,
                            real_type pitch,
                            HexOrientation orientation,
                            Real3 const& offset = {0, 0, 0});

}  // namespace nestmc
