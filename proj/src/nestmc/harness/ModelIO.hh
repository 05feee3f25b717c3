//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/ModelIO.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nestmc/multiverse/GeometryModel.hh"
#include "nestmc/transport/Material.hh"
#include "nestmc/transport/TransportTypes.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Run parameters from the \c run section
struct RunSettings
{
    TransportConfig transport;
    Strategy strategy{Strategy::dp};
};

//! A parsed model document
struct ModelInput
{
    std::string name;
    GeometryInput geometry;
    std::vector<MaterialInput> materials;
    RunSettings run;
    nlohmann::json manifest;  //!< Generator counts, if present
};

//! Universe, cell, and surface totals of a model
struct ModelCounts
{
    size_type universes{0};
    size_type cells{0};
    size_type surfaces{0};

    friend bool operator==(ModelCounts const&, ModelCounts const&) = default;
};

//---------------------------------------------------------------------------//
// Parse a model document; throws ConfigError on schema problems
ModelInput parse_model(nlohmann::json const& doc);

// Read a JSON file; throws ConfigError naming the path if unreadable
nlohmann::json read_json_file(std::string const& path);

// Write pretty-printed JSON
void write_json_file(std::string const& path, nlohmann::json const& doc);

// Read and parse a model file
ModelInput load_model(std::string const& path);

// Validated materials
std::vector<MaterialData> build_materials(ModelInput const& model);

// Count universes, cells, and surfaces of the input (before conversion)
ModelCounts count_model(GeometryInput const& geo);

// Transport configuration to JSON and back
nlohmann::json to_json(RunSettings const& run);
RunSettings parse_run(nlohmann::json const& run);

//---------------------------------------------------------------------------//
}  // namespace nestmc
