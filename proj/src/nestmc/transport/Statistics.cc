//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Statistics.cc
//---------------------------------------------------------------------------//
#include "Statistics.hh"

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "nestmc/base/Assert.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
MeanStdErr mean_std_err(std::span<real_type const> x)
{
    MeanStdErr result;
    if (x.empty())
    {
        return result;
    }
    real_type sum = 0;
    for (real_type v : x)
    {
        sum += v;
    }
    real_type const n = x.size();
    result.mean = sum / n;
    if (x.size() > 1)
    {
        real_type ss = 0;
        for (real_type v : x)
        {
            ss += (v - result.mean) * (v - result.mean);
        }
        result.std_err = std::sqrt(ss / (n - 1) / n);
    }
    return result;
}

//---------------------------------------------------------------------------//
SlopeTest slope_t_test(std::span<real_type const> y)
{
    NMC_EXPECT(y.size() >= 3);
    real_type const n = y.size();
    real_type const xbar = (n - 1) / 2;
    real_type ybar = 0;
    for (real_type v : y)
    {
        ybar += v;
    }
    ybar /= n;
    real_type sxx = 0;
    real_type sxy = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
    {
        sxx += (i - xbar) * (i - xbar);
        sxy += (i - xbar) * (y[i] - ybar);
    }
    SlopeTest result;
    result.slope = sxy / sxx;
    result.dof = y.size() - 2;
    real_type sse = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
    {
        real_type const r = y[i] - ybar - result.slope * (i - xbar);
        sse += r * r;
    }
    real_type const se = std::sqrt(sse / result.dof / sxx);
    result.t = se > 0 ? result.slope / se : 0;
    return result;
}

//---------------------------------------------------------------------------//
real_type normal_quantile(real_type p)
{
    NMC_EXPECT(p > 0 && p < 1);
    return boost::math::quantile(boost::math::normal_distribution<real_type>(), p);
}

real_type student_t_quantile(real_type p, size_type dof)
{
    NMC_EXPECT(dof > 0 && p > 0 && p < 1);
    return boost::math::quantile(
        boost::math::students_t_distribution<real_type>(dof), p);
}

real_type chi2_quantile(real_type p, size_type dof)
{
    NMC_EXPECT(dof > 0 && p > 0 && p < 1);
    return boost::math::quantile(
        boost::math::chi_squared_distribution<real_type>(dof), p);
}

//---------------------------------------------------------------------------//
real_type shannon_entropy(std::span<size_type const> counts)
{
    real_type total = 0;
    for (auto c : counts)
    {
        total += c;
    }
    if (total == 0)
    {
        return 0;
    }
    real_type h = 0;
    for (auto c : counts)
    {
        if (c > 0)
        {
            real_type const p = c / total;
            h -= p * std::log2(p);
        }
    }
    return h;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
