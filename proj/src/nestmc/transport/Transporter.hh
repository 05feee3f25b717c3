//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Transporter.hh
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <vector>

#include "nestmc/multiverse/GeometryModel.hh"

#include "Material.hh"
#include "Statistics.hh"
#include "Tally.hh"
#include "TransportTypes.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Output of a power iteration
struct PowerIterationResult
{
    size_type inactive{0};
    size_type active{0};
    size_type histories{0};
    std::vector<real_type> k;  //!< Every cycle, inactive first
    std::vector<real_type> entropy;  //!< Fission source entropy per cycle
    MeanStdErr k_eff;  //!< Over active cycles
    TallyResult tallies;
    Accounting accounting;
    OpStats ops_inactive;
    OpStats ops_active;
    double seconds_inactive{0};
    double seconds_active{0};
    FissionBank final_bank;
};

//---------------------------------------------------------------------------//
/*!
 * Multigroup power iteration over a geometry model.
 *
 * Each cycle's k is the summed expected fission yield of its histories
 * divided by the number of histories. Fission sites are banked with the
 * yield divided by the previous cycle's k, and the next cycle samples the
 * bank with replacement.
 */
class Transporter
{
  public:
    using CycleCallback = std::function<void(size_type, CycleResult const&)>;

    Transporter(GeometryModel geometry,
                std::vector<MaterialData> materials,
                TransportConfig config);

    GeometryModel const& geometry() const { return geometry_; }
    std::vector<MaterialData> const& materials() const { return materials_; }
    TransportConfig const& config() const { return config_; }
    Aabb const& source_box() const { return source_box_; }

    // Run one cycle; a null bank samples the initial source guess
    CycleResult run_cycle(FissionBank const* bank_in,
                          std::uint32_t cycle,
                          real_type k_prev,
                          Tally const& tally) const;

    // Record the events of a single history
    std::vector<TraceEvent> trace_history(FissionBank const* bank_in,
                                          std::uint32_t cycle,
                                          real_type k_prev,
                                          size_type history) const;

    // Inactive and active cycles
    PowerIterationResult run(CycleCallback const& on_cycle = {}) const;

    // Empty tally for this problem
    Tally make_tally() const;

    // Shannon entropy of a bank over an 8x8x8 mesh on the source box
    real_type entropy(FissionBank const& bank) const;

  private:
    GeometryModel geometry_;
    std::vector<MaterialData> materials_;
    TransportConfig config_;
    Aabb source_box_;
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
