//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Rng.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>

#include "nestmc/base/Types.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
/*!
 * Philox4x32-10 counter-based bijection.
 */
struct Philox4x32
{
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter ctr, Key key)
    {
        constexpr std::uint32_t m0 = 0xD2511F53u;
        constexpr std::uint32_t m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u;
        constexpr std::uint32_t w1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round)
        {
            std::uint64_t const p0 = std::uint64_t(m0) * ctr[0];
            std::uint64_t const p1 = std::uint64_t(m1) * ctr[2];
            ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0],
                   std::uint32_t(p1),
                   std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
                   std::uint32_t(p0)};
            key[0] += w0;
            key[1] += w1;
        }
        return ctr;
    }
};

//---------------------------------------------------------------------------//
/*!
 * Reproducible uniform stream for one history in one cycle.
 *
 * The value of the n-th draw depends only on (seed, cycle, history, n), so
 * any scheduling of histories reproduces the same sequence.
 */
class RngStream
{
  public:
    RngStream() = default;
    RngStream(std::uint64_t seed, std::uint32_t cycle, std::uint32_t history)
        : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}
        , cycle_(cycle)
        , history_(history)
    {
    }

    //! Uniform deviate in the open interval (0, 1)
    real_type operator()()
    {
        auto const r = Philox4x32::generate(
            {std::uint32_t(count_), std::uint32_t(count_ >> 32), history_, cycle_},
            key_);
        ++count_;
        std::uint64_t const bits
            = ((std::uint64_t(r[0]) << 32) | r[1]) >> 11;
        return (real_type(bits) + real_type(0.5)) * 0x1p-53;
    }

    std::uint64_t num_draws() const { return count_; }

  private:
    Philox4x32::Key key_{};
    std::uint32_t cycle_{0};
    std::uint32_t history_{0};
    std::uint64_t count_{0};
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
