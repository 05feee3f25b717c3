//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Material.cc
//---------------------------------------------------------------------------//
#include "Material.hh"

#include <cmath>

#include "nestmc/base/Assert.hh"

namespace nestmc
{
namespace
{
bool valid_xs(real_type v)
{
    return std::isfinite(v) && v >= 0;
}
}  // namespace

//---------------------------------------------------------------------------//
MaterialData::MaterialData(MaterialInput input) : input_(std::move(input))
{
    auto const& in = input_;
    auto const ng = in.sigma_t.size();
    auto const& name = in.name;
    NMC_VALIDATE(ng > 0, ConfigError, << "material '" << name << "' has no groups");
    NMC_VALIDATE(in.sigma_s.size() == ng && in.nu_sigma_f.size() == ng
                     && in.chi.size() == ng,
                 ConfigError,
                 << "material '" << name
                 << "' has inconsistent group counts");
    NMC_VALIDATE(std::isfinite(in.nu) && in.nu > 0,
                 ConfigError,
                 << "material '" << name << "' must have nu > 0");

    real_type chi_sum = 0;
    for (std::size_t g = 0; g < ng; ++g)
    {
        NMC_VALIDATE(in.sigma_s[g].size() == ng,
                     ConfigError,
                     << "material '" << name << "' scattering row " << g
                     << " has " << in.sigma_s[g].size() << " entries");
        NMC_VALIDATE(valid_xs(in.sigma_t[g]) && valid_xs(in.nu_sigma_f[g])
                         && valid_xs(in.chi[g]),
                     ConfigError,
                     << "material '" << name
                     << "' has a negative or non-finite entry in group "
                     << g);
        real_type scat = 0;
        for (real_type s : in.sigma_s[g])
        {
            NMC_VALIDATE(valid_xs(s),
                         ConfigError,
                         << "material '" << name
                         << "' has a negative scattering entry");
            scat += s;
        }
        real_type const fis = in.nu_sigma_f[g] / in.nu;
        real_type const tol = 1e-12 * std::max<real_type>(1, in.sigma_t[g]);
        NMC_VALIDATE(scat <= in.sigma_t[g] + tol,
                     ConfigError,
                     << "material '" << name << "' group " << g
                     << ": scattering " << scat << " exceeds total "
                     << in.sigma_t[g]);
        NMC_VALIDATE(scat + fis <= in.sigma_t[g] + tol,
                     ConfigError,
                     << "material '" << name << "' group " << g
                     << ": fission " << fis << " exceeds absorption "
                     << in.sigma_t[g] - scat);
        scatter_.push_back(scat);
        fission_.push_back(fis);
        capture_.push_back(std::max<real_type>(0, in.sigma_t[g] - scat - fis));
        chi_sum += in.chi[g];
        fissile_ = fissile_ || in.nu_sigma_f[g] > 0;
    }
    NMC_VALIDATE(std::fabs(chi_sum - 1) <= 1e-12,
                 ConfigError,
                 << "material '" << name << "' fission spectrum sums to "
                 << chi_sum);
}

//---------------------------------------------------------------------------//
real_type MaterialData::fission_yield(size_type g) const
{
    return fission_[g] > 0 ? input_.nu_sigma_f[g] / fission_[g] : 0;
}

//---------------------------------------------------------------------------//
auto MaterialData::sample_reaction(size_type g, real_type xi) const -> Reaction
{
    real_type const target = xi * input_.sigma_t[g];
    if (target < scatter_[g])
    {
        return Reaction::scatter;
    }
    if (target < scatter_[g] + fission_[g])
    {
        return Reaction::fission;
    }
    return Reaction::capture;
}

//---------------------------------------------------------------------------//
size_type MaterialData::sample_scatter_group(size_type g, real_type xi) const
{
    auto const& row = input_.sigma_s[g];
    real_type const target = xi * scatter_[g];
    real_type accum = 0;
    size_type last = 0;
    for (size_type gp = 0; gp < row.size(); ++gp)
    {
        if (row[gp] <= 0)
        {
            continue;
        }
        accum += row[gp];
        last = gp;
        if (target < accum)
        {
            return gp;
        }
    }
    return last;
}

//---------------------------------------------------------------------------//
size_type MaterialData::sample_chi(real_type xi) const
{
    real_type accum = 0;
    size_type last = 0;
    for (size_type g = 0; g < input_.chi.size(); ++g)
    {
        if (input_.chi[g] <= 0)
        {
            continue;
        }
        accum += input_.chi[g];
        last = g;
        if (xi < accum)
        {
            return g;
        }
    }
    return last;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
