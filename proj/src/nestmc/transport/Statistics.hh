//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Statistics.hh
//---------------------------------------------------------------------------//
#pragma once

#include <span>

#include "nestmc/base/Types.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
struct MeanStdErr
{
    real_type mean{0};
    real_type std_err{0};  //!< Sample standard deviation / sqrt(n)
};

// Mean and standard error of the mean
MeanStdErr mean_std_err(std::span<real_type const> x);

// Least-squares slope over index and its t statistic
struct SlopeTest
{
    real_type slope{0};
    real_type t{0};
    size_type dof{0};
};
SlopeTest slope_t_test(std::span<real_type const> y);

// Standard normal quantile
real_type normal_quantile(real_type p);
// Student t quantile
real_type student_t_quantile(real_type p, size_type dof);
// Chi-squared quantile
real_type chi2_quantile(real_type p, size_type dof);

// Shannon entropy (bits) of binned counts
real_type shannon_entropy(std::span<size_type const> counts);

//---------------------------------------------------------------------------//
}  // namespace nestmc
