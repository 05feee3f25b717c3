//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/Runner.hh
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>

#include "nestmc/transport/Transporter.hh"

#include "ModelIO.hh"

namespace nestmc
{
struct RunOutputFiles
{
    std::string k_series;
    std::string entropy;
    std::string summary;
    std::string mesh_tally;
    std::string cell_tally;
};

// Output directory from NESTMC_OUTPUT_DIR, else "nestmc-output"
std::string default_output_dir();

// Format a real so that it reads back exactly
std::string repr(real_type v);

// Build the transporter described by a model
Transporter make_transporter(ModelInput const& model);

// Power iteration with one log line per cycle
PowerIterationResult run_model(ModelInput const& model, std::ostream* log);

// Write k series, entropy, summary, and tally files into a directory
RunOutputFiles write_run_outputs(std::string const& dir,
                                 ModelInput const& model,
                                 PowerIterationResult const& result);

}  // namespace nestmc
