//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tools/nestmc.cc
//! \brief Command-line driver: run, bench, verify, generate.
//---------------------------------------------------------------------------//
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nestmc/base/Assert.hh"
#include "nestmc/harness/Bench.hh"
#include "nestmc/harness/Generators.hh"
#include "nestmc/harness/ModelIO.hh"
#include "nestmc/harness/Runner.hh"
#include "nestmc/harness/Verify.hh"

using namespace nestmc;
using nlohmann::json;

namespace
{
//---------------------------------------------------------------------------//
enum ExitCode
{
    exit_success = 0,
    exit_failure = 1,
    exit_config = 2,
};

struct ModelSource
{
    std::string file;
    std::string generator;
    std::vector<std::string> params;  //!< key=value, value parsed as JSON
};

void add_model_options(CLI::App* cmd, ModelSource& src)
{
    cmd->add_option("model", src.file, "Model file (JSON)");
    cmd->add_option("-g,--generate", src.generator, "Generator name instead of a file")
        ->check(CLI::IsMember(
            {"minicore-rect", "minicore-hex", "infinite-1g", "infinite-2g"}));
    cmd->add_option("-p,--param", src.params, "Generator parameter key=value");
}

json parse_params(std::vector<std::string> const& params)
{
    json result = json::object();
    for (auto const& kv : params)
    {
        auto const eq = kv.find('=');
        NMC_VALIDATE(eq != std::string::npos,
                     ConfigError,
                     << "generator parameter '" << kv << "' is not key=value");
        auto const key = kv.substr(0, eq);
        auto const value = kv.substr(eq + 1);
        try
        {
            result[key] = json::parse(value);
        }
        catch (json::exception const&)
        {
            result[key] = value;
        }
    }
    return result;
}

ModelInput load_source(ModelSource const& src)
{
    NMC_VALIDATE(src.file.empty() != src.generator.empty(),
                 ConfigError,
                 << "give either a model file or --generate NAME");
    if (!src.file.empty())
    {
        return load_model(src.file);
    }
    return parse_model(generate_model(src.generator, parse_params(src.params)));
}

struct RunOverrides
{
    std::optional<std::uint64_t> seed;
    std::optional<std::string> strategy;
    std::optional<std::string> driver;
    std::optional<size_type> workers;
    std::optional<size_type> histories;
    std::optional<size_type> inactive;
    std::optional<size_type> active;
    std::string output_dir;
};

void apply(RunOverrides const& o, RunSettings& run)
{
    auto& t = run.transport;
    if (o.seed) t.seed = *o.seed;
    if (o.strategy) run.strategy = strategy_from_string(*o.strategy);
    if (o.driver) t.driver = driver_from_string(*o.driver);
    if (o.workers) t.workers = *o.workers;
    if (o.histories) t.histories = *o.histories;
    if (o.inactive) t.inactive = *o.inactive;
    if (o.active) t.active = *o.active;
}

std::string output_dir(std::string const& flag)
{
    return flag.empty() ? default_output_dir() : flag;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
int main(int argc, char* argv[])
{
    CLI::App app{"Nested-universe Monte Carlo geometry and criticality driver"};
    app.require_subcommand(1);

    // run
    ModelSource run_src;
    RunOverrides run_opts;
    auto* run = app.add_subcommand("run", "Power iteration on a model");
    add_model_options(run, run_src);
    run->add_option("--seed", run_opts.seed, "Random seed");
    run->add_option("-s,--strategy", run_opts.strategy, "dp, sp, st, or rtk");
    run->add_option("-d,--driver", run_opts.driver, "history or event");
    run->add_option("-w,--workers", run_opts.workers, "Worker threads");
    run->add_option("-n,--histories", run_opts.histories, "Histories per cycle");
    run->add_option("--inactive", run_opts.inactive, "Inactive cycles");
    run->add_option("--active", run_opts.active, "Active cycles");
    run->add_option("-o,--output-dir",
                    run_opts.output_dir,
                    "Output directory (default: $NESTMC_OUTPUT_DIR or "
                    "nestmc-output)");

    // bench
    ModelSource bench_src;
    BenchConfig bench_cfg;
    std::vector<std::string> bench_strategies;
    std::string bench_driver = "event";
    std::string bench_out;
    std::optional<std::uint64_t> bench_seed;
    auto* bench = app.add_subcommand("bench", "Time strategies over workloads");
    add_model_options(bench, bench_src);
    bench->add_option("-s,--strategies", bench_strategies, "Strategies to time");
    bench->add_option("-n,--workloads", bench_cfg.workloads, "Histories per cycle");
    bench->add_option("--inactive", bench_cfg.inactive, "Inactive cycles");
    bench->add_option("--active", bench_cfg.active, "Active cycles");
    bench->add_option("-w,--workers", bench_cfg.workers, "Worker threads");
    bench->add_option("-d,--driver", bench_driver, "history or event");
    bench->add_option("--seed", bench_seed, "Random seed");
    bench->add_option("-o,--output-dir", bench_out, "Output directory");

    // verify
    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run the oracle suites");
    verify->add_option("suites", verify_opts.suites, "Suites (default: all)");
    verify->add_option("--seed", verify_opts.seed, "Base seed");
    verify->add_option("--seeds", verify_opts.replay_seeds, "Replay seed count");
    verify->add_option("--scale", verify_opts.scale, "Instance count multiplier")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--corrupt-neighbors",
                     verify_opts.corrupt_neighbors,
                     "Corrupt CSG neighbor lists (negative control)");

    // generate
    std::string gen_name;
    std::vector<std::string> gen_params;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Write a generated model");
    generate->add_option("name", gen_name, "Generator name")
        ->required()
        ->check(CLI::IsMember(
            {"minicore-rect", "minicore-hex", "infinite-1g", "infinite-2g"}));
    generate->add_option("-p,--param", gen_params, "Parameter key=value");
    generate->add_option("-o,--output", gen_out, "Output file (default: stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        if (*run)
        {
            ModelInput model = load_source(run_src);
            apply(run_opts, model.run);
            auto const result = run_model(model, &std::cout);
            auto const files
                = write_run_outputs(output_dir(run_opts.output_dir), model, result);
            std::cout << "wrote " << files.k_series << ", " << files.summary
                      << '\n';
            return exit_success;
        }
        if (*bench)
        {
            if (bench_src.file.empty() && bench_src.generator.empty())
            {
                bench_src.generator = "minicore-rect";
            }
            ModelInput model = load_source(bench_src);
            if (bench_seed)
            {
                model.run.transport.seed = *bench_seed;
            }
            if (!bench_strategies.empty())
            {
                bench_cfg.strategies.clear();
                for (auto const& s : bench_strategies)
                {
                    bench_cfg.strategies.push_back(strategy_from_string(s));
                }
            }
            bench_cfg.driver = driver_from_string(bench_driver);
            auto const report = run_bench(model, bench_cfg, &std::cout);

            namespace fs = std::filesystem;
            fs::path const dir(output_dir(bench_out));
            fs::create_directories(dir);
            std::ofstream csv(dir / "bench.csv");
            NMC_VALIDATE(csv, ConfigError, << "cannot write '" << (dir / "bench.csv").string() << "'");
            write_bench_csv(csv, report);
            write_json_file((dir / "bench.json").string(), to_json(report));
            std::cout << "wrote " << (dir / "bench.csv").string() << ", "
                      << (dir / "bench.json").string() << '\n';
            return exit_success;
        }
        if (*verify)
        {
            auto const results = run_verify(verify_opts, &std::cout);
            std::size_t passed = 0;
            for (auto const& r : results)
            {
                passed += r.passed();
            }
            std::cout << passed << "/" << results.size() << " suites passed\n";
            return passed == results.size() ? exit_success : exit_failure;
        }
        if (*generate)
        {
            auto const doc = generate_model(gen_name, parse_params(gen_params));
            if (gen_out.empty())
            {
                std::cout << doc.dump(1) << '\n';
            }
            else
            {
                auto const parent = std::filesystem::path(gen_out).parent_path();
                if (!parent.empty())
                {
                    std::filesystem::create_directories(parent);
                }
                write_json_file(gen_out, doc);
            }
            return exit_success;
        }
    }
    catch (ConfigError const& e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return exit_config;
    }
    catch (UnsupportedError const& e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return exit_config;
    }
    catch (std::filesystem::filesystem_error const& e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return exit_config;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_success;
}
