//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Material.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

#include "nestmc/base/Types.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Multigroup cross sections as read from input
struct MaterialInput
{
    std::string name;
    std::vector<real_type> sigma_t;
    std::vector<std::vector<real_type>> sigma_s;  //!< [from][to]
    std::vector<real_type> nu_sigma_f;
    std::vector<real_type> chi;
    real_type nu{2.5};
};

//---------------------------------------------------------------------------//
/*!
 * Validated multigroup material with derived reaction data.
 *
 * Fission cross section is nu_sigma_f / nu; capture is the remainder of the
 * total after scattering and fission.
 */
class MaterialData
{
  public:
    enum class Reaction : unsigned char
    {
        scatter,
        fission,
        capture
    };

    MaterialData() = default;
    explicit MaterialData(MaterialInput input);

    MaterialInput const& input() const { return input_; }
    std::string const& name() const { return input_.name; }
    size_type num_groups() const { return input_.sigma_t.size(); }
    real_type sigma_t(size_type g) const { return input_.sigma_t[g]; }
    real_type sigma_s(size_type g) const { return scatter_[g]; }
    real_type sigma_f(size_type g) const { return fission_[g]; }
    real_type sigma_c(size_type g) const { return capture_[g]; }
    real_type nu_sigma_f(size_type g) const { return input_.nu_sigma_f[g]; }
    real_type nu() const { return input_.nu; }
    bool fissile() const { return fissile_; }

    // Expected neutrons per fission event in a group
    real_type fission_yield(size_type g) const;

    // Reaction from a uniform deviate
    Reaction sample_reaction(size_type g, real_type xi) const;
    // Outgoing group of a scatter from a uniform deviate
    size_type sample_scatter_group(size_type g, real_type xi) const;
    // Fission birth group from a uniform deviate
    size_type sample_chi(real_type xi) const;

  private:
    MaterialInput input_;
    std::vector<real_type> scatter_;
    std::vector<real_type> fission_;
    std::vector<real_type> capture_;
    bool fissile_{false};
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
