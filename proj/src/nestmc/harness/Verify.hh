//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/Verify.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nestmc/base/Types.hh"

namespace nestmc
{
struct VerifyOptions
{
    std::vector<std::string> suites;  //!< Empty: every suite
    std::uint64_t seed{20240611};
    size_type replay_seeds{10};
    real_type scale{1.0};  //!< Multiplier on instance counts
    bool corrupt_neighbors{false};  //!< Negative control for cross_surface
};

struct SuiteResult
{
    std::string name;
    std::uint64_t instances{0};
    std::uint64_t failures{0};
    std::uint64_t skipped{0};
    std::vector<std::string> messages;  //!< First few failure descriptions
    double seconds{0};

    bool passed() const { return failures == 0 && instances > 0; }
};

// Names of the available suites in default order
std::vector<std::string> const& verify_suite_names();

SuiteResult verify_bih(VerifyOptions const& opts);
SuiteResult verify_cross_surface(VerifyOptions const& opts);
SuiteResult verify_arrays(VerifyOptions const& opts);
SuiteResult verify_hex(VerifyOptions const& opts);
SuiteResult verify_replay(VerifyOptions const& opts);
SuiteResult verify_drivers(VerifyOptions const& opts);
SuiteResult verify_analytic(VerifyOptions const& opts);

// Run the selected suites, printing one line per suite
std::vector<SuiteResult>
run_verify(VerifyOptions const& opts, std::ostream* log);

}  // namespace nestmc
