//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/Runner.cc
//---------------------------------------------------------------------------//
#include "Runner.hh"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "nestmc/base/Assert.hh"

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
std::ofstream open_output(std::filesystem::path const& path)
{
    std::ofstream out(path);
    NMC_VALIDATE(out, ConfigError, << "cannot write output file '" << path.string() << "'");
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::string default_output_dir()
{
    if (char const* env = std::getenv("NESTMC_OUTPUT_DIR"); env && *env)
    {
        return env;
    }
    return "nestmc-output";
}

//---------------------------------------------------------------------------//
std::string repr(real_type v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

//---------------------------------------------------------------------------//
Transporter make_transporter(ModelInput const& model)
{
    GeometryModel geo(model.geometry, model.run.strategy);
    return Transporter(std::move(geo), build_materials(model), model.run.transport);
}

//---------------------------------------------------------------------------//
PowerIterationResult run_model(ModelInput const& model, std::ostream* log)
{
    Transporter const tr = make_transporter(model);
    auto const& cfg = tr.config();
    if (log)
    {
        *log << "model '" << model.name << "': strategy "
             << to_cstring(model.run.strategy) << ", driver "
             << to_cstring(cfg.driver) << ", " << cfg.histories
             << " histories, " << cfg.inactive << " inactive + " << cfg.active
             << " active cycles, seed " << cfg.seed << '\n';
    }
    auto on_cycle = [&](size_type c, CycleResult const& cr) {
        if (!log)
        {
            return;
        }
        char buf[128];
        std::snprintf(buf,
                      sizeof(buf),
                      "cycle %4u %-8s k = %.6f  (%.2f s)\n",
                      static_cast<unsigned>(c),
                      c < cfg.inactive ? "inactive" : "active",
                      cr.k,
                      cr.seconds);
        *log << buf;
    };
    auto result = tr.run(on_cycle);
    if (log)
    {
        char buf[128];
        std::snprintf(buf,
                      sizeof(buf),
                      "k_eff = %.6f +/- %.6f over %u active cycles\n",
                      result.k_eff.mean,
                      result.k_eff.std_err,
                      static_cast<unsigned>(result.active));
        *log << buf;
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Everything except summary.json is a pure function of the model and seed.
 */
RunOutputFiles write_run_outputs(std::string const& dir,
                                 ModelInput const& model,
                                 PowerIterationResult const& result)
{
    namespace fs = std::filesystem;
    fs::path const root(dir);
    std::error_code ec;
    fs::create_directories(root, ec);
    NMC_VALIDATE(!ec,
                 ConfigError,
                 << "cannot create output directory '" << dir
                 << "': " << ec.message());

    RunOutputFiles files;
    files.k_series = (root / "k_series.csv").string();
    files.entropy = (root / "entropy.csv").string();
    files.summary = (root / "summary.json").string();
    files.mesh_tally = (root / "mesh_tally.csv").string();
    files.cell_tally = (root / "cell_tally.csv").string();

    {
        auto out = open_output(files.k_series);
        out << "cycle,phase,k\n";
        for (size_type c = 0; c < result.k.size(); ++c)
        {
            out << c << ',' << (c < result.inactive ? "inactive" : "active")
                << ',' << repr(result.k[c]) << '\n';
        }
    }
    {
        auto out = open_output(files.entropy);
        out << "cycle,entropy\n";
        for (size_type c = 0; c < result.entropy.size(); ++c)
        {
            out << c << ',' << repr(result.entropy[c]) << '\n';
        }
    }

    auto const& t = result.tallies;
    size_type const ng = t.num_groups;
    {
        auto out = open_output(files.mesh_tally);
        out << "i,j,k,group,flux,rel_err\n";
        size_type const ne = t.mesh_dims[0] * t.mesh_dims[1] * t.mesh_dims[2];
        for (size_type e = 0; e < ne && !t.mesh_flux.empty(); ++e)
        {
            size_type const i = e % t.mesh_dims[0];
            size_type const j = (e / t.mesh_dims[0]) % t.mesh_dims[1];
            size_type const k = e / (t.mesh_dims[0] * t.mesh_dims[1]);
            for (size_type g = 0; g < ng; ++g)
            {
                out << i << ',' << j << ',' << k << ',' << g << ','
                    << repr(t.mesh_flux[e * ng + g]) << ','
                    << repr(t.mesh_rel_err[e * ng + g]) << '\n';
            }
        }
    }
    {
        auto out = open_output(files.cell_tally);
        out << "flat_cell,group,flux,rel_err\n";
        size_type const nc = ng ? t.cell_flux.size() / ng : 0;
        for (size_type c = 0; c < nc; ++c)
        {
            if (!t.cell_is_material[c])
            {
                continue;
            }
            for (size_type g = 0; g < ng; ++g)
            {
                out << c << ',' << g << ',' << repr(t.cell_flux[c * ng + g])
                    << ',' << repr(t.cell_rel_err[c * ng + g]) << '\n';
            }
        }
    }
    {
        nlohmann::json s;
        s["model"] = model.name;
        s["run"] = to_json(model.run);
        s["k_eff"] = {{"mean", result.k_eff.mean},
                      {"std_err", result.k_eff.std_err},
                      {"active_cycles", result.active}};
        s["k"] = result.k;
        s["entropy"] = result.entropy;
        auto const& a = result.accounting;
        s["accounting"] = {{"histories", a.histories},
                           {"absorbed", a.absorbed},
                           {"fission", a.fission},
                           {"leaked", a.leaked},
                           {"lost", a.lost},
                           {"collisions", a.collisions},
                           {"crossings", a.crossings}};
        s["timing"] = {{"inactive_seconds", result.seconds_inactive},
                       {"active_seconds", result.seconds_active}};
        auto out = open_output(files.summary);
        out << s.dump(1) << '\n';
    }
    return files;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
