//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/Bench.hh
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nestmc/multiverse/GeometryModel.hh"
#include "nestmc/transport/TransportTypes.hh"

#include "ModelIO.hh"

namespace nestmc
{
struct BenchConfig
{
    std::vector<Strategy> strategies{
        Strategy::dp, Strategy::sp, Strategy::st, Strategy::rtk};
    std::vector<size_type> workloads{2000, 10000};  //!< Histories per cycle
    size_type inactive{2};
    size_type active{3};
    size_type workers{1};
    Driver driver{Driver::event};
};

struct BenchPhase
{
    std::string phase;  //!< "inactive" or "active"
    size_type cycles{0};
    double seconds{0};
    double histories_per_s{0};
    OpStats ops;
};

struct BenchRow
{
    Strategy strategy{Strategy::dp};
    size_type histories{0};
    double warmup_seconds{0};
    std::vector<BenchPhase> phases;
    std::vector<real_type> k;
};

struct BenchReport
{
    std::string model;
    BenchConfig config;
    std::vector<BenchRow> rows;
    std::vector<std::string> ordering;  //!< One line per workload
    bool k_identical{true};
};

// Time every (strategy, workload) pair on a model
BenchReport run_bench(ModelInput const& model,
                      BenchConfig const& config,
                      std::ostream* log);

// Flat per-operation table
void write_bench_csv(std::ostream& os, BenchReport const& report);

// Structured report with machine metadata and config echo
nlohmann::json to_json(BenchReport const& report);

// Operations counted as geometry tracking
bool is_tracking_op(Op op);

}  // namespace nestmc
