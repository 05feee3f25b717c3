//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/base/Assert.cc
//---------------------------------------------------------------------------//
#include "Assert.hh"

namespace nestmc
{
namespace detail
{
//---------------------------------------------------------------------------//
void throw_contract(char const* kind, char const* cond, char const* file, int line)
{
    std::ostringstream os;
    os << file << ':' << line << ": " << kind << " failed: " << cond;
    throw ContractViolation(os.str());
}

//---------------------------------------------------------------------------//
}  // namespace detail
}  // namespace nestmc
