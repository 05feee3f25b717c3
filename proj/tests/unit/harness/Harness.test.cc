//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tests/unit/harness/Harness.test.cc
//---------------------------------------------------------------------------//
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "nestmc/base/Assert.hh"
#include "nestmc/harness/Bench.hh"
#include "nestmc/harness/Generators.hh"
#include "nestmc/harness/ModelIO.hh"
#include "nestmc/harness/Runner.hh"
#include "nestmc/harness/Verify.hh"

#include "TestUtils.hh"

namespace nestmc
{
namespace test
{
namespace
{
using nlohmann::json;
namespace fs = std::filesystem;

//! Count universes, cells, and surfaces directly from a JSON document
ModelCounts json_recount(json const& doc)
{
    ModelCounts c;
    for (auto const& u : doc.at("universes"))
    {
        ++c.universes;
        std::set<std::string> names;
        for (auto const& cell : u.at("cells"))
        {
            ++c.cells;
            for (auto const& tok : cell.at("region"))
            {
                names.insert(tok.get<std::string>().substr(1));
            }
        }
        c.surfaces += names.size();
    }
    for (auto const& a : doc.at("arrays"))
    {
        ++c.universes;
        size_type n = 1;
        for (char const* ax : {"x", "y", "z"})
        {
            auto const sz = a.at("edges").at(ax).size();
            n *= sz - 1;
            c.surfaces += sz;
        }
        c.cells += n;
    }
    return c;
}

ModelCounts manifest_counts(json const& doc)
{
    auto const& m = doc.at("manifest");
    return {m.at("universes").get<size_type>(),
            m.at("cells").get<size_type>(),
            m.at("surfaces").get<size_type>()};
}

std::string slurp(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch_dir(std::string const& name)
{
    auto p = fs::temp_directory_path() / ("nestmc-harness-" + name);
    fs::remove_all(p);
    return p;
}

size_type depth(GeometryModel const& geo, Real3 const& pos)
{
    return geo.find_cell(pos).num_levels;
}

} // namespace

//---------------------------------------------------------------------------//
TEST(RectGenerator, trivial_core)
{
    RectCoreParams p;
    p.assemblies = 1;
    p.pins = 1;
    p.radii = {0.4};
    p.slabs = 1;
    p.gap = 0;
    json const doc = generate_minicore_rect(p);
    ModelInput const model = parse_model(doc);

    // Pin universe: fuel plus moderator
    auto const& pin = doc.at("universes").at(0);
    size_type material_cells = 0;
    for (auto const& c : pin.at("cells"))
    {
        material_cells += c.contains("material");
    }
    EXPECT_EQ(2, material_cells);

    for (auto s : {Strategy::dp, Strategy::sp, Strategy::st, Strategy::rtk})
    {
        GeometryModel geo(model.geometry, s);
        EXPECT_EQ(3, depth(geo, {0.3, 0.3, 10})) << to_cstring(s);
        EXPECT_EQ(3, depth(geo, {0.62, 0.1, 1})) << to_cstring(s);
    }
    EXPECT_EQ(manifest_counts(doc), json_recount(doc));
    EXPECT_EQ(manifest_counts(doc), count_model(model.geometry));
}

TEST(RectGenerator, manifest_matches_recount)
{
    json const doc = generate_model("minicore-rect");
    EXPECT_EQ(3, doc.at("manifest").at("params").at("assemblies"));
    EXPECT_EQ(5, doc.at("manifest").at("params").at("pins"));
    ModelInput const model = parse_model(doc);
    auto const expected = manifest_counts(doc);
    EXPECT_EQ(expected, json_recount(doc));
    EXPECT_EQ(expected, count_model(model.geometry));

    // Parameter sweep, with and without gaps
    for (size_type n : {1, 2, 4})
    {
        for (size_type m : {1, 3})
        {
            for (real_type gap : {0.0, 0.1})
            {
                RectCoreParams p;
                p.assemblies = n;
                p.pins = m;
                p.slabs = n;
                p.gap = gap;
                p.radii = {0.2, 0.3, 0.45};
                json const d = generate_minicore_rect(p);
                ModelInput const mi = parse_model(d);
                SCOPED_TRACE(::testing::Message()
                             << "n=" << n << " m=" << m << " gap=" << gap);
                EXPECT_EQ(manifest_counts(d), json_recount(d));
                EXPECT_EQ(manifest_counts(d), count_model(mi.geometry));
            }
        }
    }
}

TEST(RectGenerator, rtk_compatible)
{
    for (real_type gap : {0.0, 0.2})
    {
        RectCoreParams p;
        p.gap = gap;
        ModelInput const model = parse_model(generate_minicore_rect(p));
        EXPECT_NO_THROW(GeometryModel(model.geometry, Strategy::rtk));
    }
}

TEST(RectGenerator, invalid_radii)
{
    auto expect_bad = [](std::vector<real_type> radii)
    {
        RectCoreParams p;
        p.radii = std::move(radii);
        EXPECT_THROW(generate_minicore_rect(p), ConfigError);
    };
    expect_bad({});
    expect_bad({0.5, 0.4});
    expect_bad({0.4, 0.4});
    expect_bad({-0.1});
    expect_bad({0.63});
    expect_bad({0.2, 0.7});
    EXPECT_THROW(generate_model("minicore-rect", {{"radii", {0.1, 0.9}}}),
                 ConfigError);
    EXPECT_THROW(generate_model("minicore-rect", {{"assemblies", 0}}),
                 ConfigError);
}

//---------------------------------------------------------------------------//
TEST(HexGenerator, single_ring_runs_under_st)
{
    json doc = generate_model("minicore-hex", {{"rings", 1}});
    doc["run"]["histories"] = 2000;
    doc["run"]["inactive"] = 1;
    doc["run"]["active"] = 2;
    ModelInput const model = parse_model(doc);
    EXPECT_EQ(model.run.strategy, Strategy::st);
    EXPECT_EQ(manifest_counts(doc), count_model(model.geometry));
    EXPECT_EQ(1, doc.at("manifest").at("hexes"));
    auto const result = run_model(model, nullptr);
    EXPECT_EQ(3, result.k.size());
    EXPECT_GT(result.k_eff.mean, 0);
}

TEST(HexGenerator, other_strategies_rejected)
{
    for (int rings : {1, 2, 3})
    {
        json const doc = generate_model("minicore-hex", {{"rings", rings}});
        ModelInput const model = parse_model(doc);
        EXPECT_EQ(manifest_counts(doc), count_model(model.geometry));
        EXPECT_NO_THROW(GeometryModel(model.geometry, Strategy::st));
        for (auto s : {Strategy::dp, Strategy::sp, Strategy::rtk})
        {
            try
            {
                GeometryModel geo(model.geometry, s);
                ADD_FAILURE() << to_cstring(s) << " accepted a hex array";
            }
            catch (UnsupportedError const& e)
            {
                EXPECT_NE(std::string(e.what()).find("hexcore"),
                          std::string::npos)
                    << e.what();
            }
        }
    }
}

//---------------------------------------------------------------------------//
TEST(ModelIO, round_trip)
{
    for (auto const* name :
         {"minicore-rect", "minicore-hex", "infinite-1g", "infinite-2g"})
    {
        json const doc = generate_model(name);
        auto const path = scratch_dir(name).string() + ".json";
        write_json_file(path, doc);
        json const back = read_json_file(path);
        EXPECT_EQ(doc, back) << name;
        ModelInput const a = parse_model(doc);
        ModelInput const b = load_model(path);
        EXPECT_EQ(a.name, b.name);
        EXPECT_EQ(count_model(a.geometry), count_model(b.geometry));
        EXPECT_EQ(to_json(a.run), to_json(b.run));
        EXPECT_EQ(to_json(a.run), to_json(parse_run(to_json(a.run))));
        fs::remove(path);
    }
}

TEST(ModelIO, worked_pincell)
{
    ModelInput const model =
        load_model(std::string(NESTMC_SOURCE_DIR) + "/models/pincell.json");
    EXPECT_EQ("pincell-2x2", model.name);
    EXPECT_EQ(2, model.materials.size());
    // pin (2 cells, 7 surfaces) + lattice (4 cells, 3+3+2 surfaces)
    EXPECT_EQ((ModelCounts{2, 6, 15}), count_model(model.geometry));
    EXPECT_EQ(BoundaryCondition::reflecting, model.geometry.boundary[0]);
    EXPECT_EQ(BoundaryCondition::vacuum, model.geometry.boundary[5]);

    GeometryModel geo(model.geometry, model.run.strategy);
    // Centered pins: fuel at each lattice cell center
    for (real_type x : {0.63, 1.89})
    {
        for (real_type y : {0.63, 1.89})
        {
            auto state = geo.find_cell({x + 0.1, y - 0.2, 5});
            EXPECT_EQ(2, state.num_levels);
            EXPECT_EQ(0, geo.material(state).get());
        }
    }
    auto corner = geo.find_cell({0.05, 2.47, 5});
    EXPECT_EQ(1, geo.material(corner).get());
}

TEST(ModelIO, errors)
{
    EXPECT_THROW(load_model("/nonexistent/model.json"), ConfigError);
    try
    {
        load_model("/nonexistent/model.json");
    }
    catch (ConfigError const& e)
    {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/model.json"),
                  std::string::npos);
    }

    json doc = generate_model("infinite-1g");
    auto bad = [&](auto mutate)
    {
        json d = doc;
        mutate(d);
        EXPECT_THROW(parse_model(d), ConfigError) << d.dump();
    };
    bad(
        [](json& d)
        {
            d["root"] = "nope";
        });
    bad(
        [](json& d)
        {
            d["surfaces"][0]["type"] = "torus";
        });
    bad(
        [](json& d)
        {
            d["universes"][0]["cells"][0]["region"][0] = "xlo";
        });
    bad(
        [](json& d)
        {
            d["universes"][0]["cells"][0]["region"][0] = "+zzz";
        });
    bad(
        [](json& d)
        {
            d["universes"][0]["cells"][0]["material"] = "zzz";
        });
    bad(
        [](json& d)
        {
            d["universes"][0]["cells"][0]["fill"] = "box";
        });
    bad(
        [](json& d)
        {
            d["boundary"] = {{"w+", "vacuum"}};
        });
    bad(
        [](json& d)
        {
            d["run"]["histories"] = 0;
        });
    bad(
        [](json& d)
        {
            d["run"]["strategy"] = "fast";
        });
    bad(
        [](json& d)
        {
            d["materials"].push_back(d["materials"][0]);
        });
    bad(
        [](json& d)
        {
            d["surfaces"][0]["x"] = "left";
        });
}

//---------------------------------------------------------------------------//
TEST(Runner, rerun_is_byte_identical)
{
    json doc = generate_model("infinite-2g");
    doc["run"]["histories"] = 500;
    doc["run"]["inactive"] = 2;
    doc["run"]["active"] = 3;
    ModelInput const model = parse_model(doc);

    auto const d1 = scratch_dir("run1");
    auto const d2 = scratch_dir("run2");
    auto const f1 =
        write_run_outputs(d1.string(), model, run_model(model, nullptr));
    auto const f2 =
        write_run_outputs(d2.string(), model, run_model(model, nullptr));
    for (auto [a, b] : {std::pair{f1.k_series, f2.k_series},
                        std::pair{f1.entropy, f2.entropy},
                        std::pair{f1.mesh_tally, f2.mesh_tally},
                        std::pair{f1.cell_tally, f2.cell_tally}})
    {
        auto const sa = slurp(a);
        EXPECT_FALSE(sa.empty()) << a;
        EXPECT_EQ(sa, slurp(b)) << a;
    }
    std::string const ks = slurp(f1.k_series);
    EXPECT_EQ(0, ks.rfind("cycle,phase,k\n", 0));
    EXPECT_EQ(6, std::count(ks.begin(), ks.end(), '\n'));
    auto const summary = read_json_file(f1.summary);
    EXPECT_TRUE(summary.is_object());

    // Different seed changes the series
    json doc2 = doc;
    doc2["run"]["seed"] = 7;
    auto const d3 = scratch_dir("run3");
    auto const f3 = write_run_outputs(
        d3.string(), model, run_model(parse_model(doc2), nullptr));
    EXPECT_NE(ks, slurp(f3.k_series));
    for (auto const& d : {d1, d2, d3})
    {
        fs::remove_all(d);
    }
}

TEST(Runner, infinite_medium_k)
{
    for (auto const* name : {"infinite-1g", "infinite-2g"})
    {
        json doc = generate_model(name);
        doc["run"]["histories"] = 5000;
        doc["run"]["inactive"] = 5;
        doc["run"]["active"] = 20;
        real_type const expected = infinite_medium_k(doc);
        auto const result = run_model(parse_model(doc), nullptr);
        EXPECT_LT(std::fabs(result.k_eff.mean - expected),
                  3 * result.k_eff.std_err)
            << name << ": " << result.k_eff.mean << " +/- "
            << result.k_eff.std_err << " vs " << expected;
        EXPECT_GT(result.k_eff.std_err, 0);
    }
}

TEST(Runner, analytic_balance)
{
    // One group: nu sigma_f / sigma_a = 2.5 * 0.2 / 0.5
    json const g1 = generate_model("infinite-1g");
    EXPECT_DOUBLE_EQ(1.0, infinite_medium_k(g1));

    // Two groups, downscatter only: fast yield nsf1/r1 + s12/r1 * nsf2/a2
    json const g2 = generate_model("infinite-2g");
    auto const& m = g2.at("materials").at(0);
    real_type const st1 = m["sigma_t"][0], st2 = m["sigma_t"][1];
    real_type const s11 = m["sigma_s"][0][0], s12 = m["sigma_s"][0][1];
    real_type const s22 = m["sigma_s"][1][1];
    real_type const f1 = m["nu_sigma_f"][0], f2 = m["nu_sigma_f"][1];
    real_type const r1 = st1 - s11;
    real_type const a2 = st2 - s22;
    real_type const k = f1 / r1 + (s12 / r1) * (f2 / a2);
    EXPECT_NEAR(1.266667, k, 1e-6);
    EXPECT_NEAR(k, infinite_medium_k(g2), 1e-12);
}

//---------------------------------------------------------------------------//
TEST(Bench, matrix_report)
{
    RectCoreParams p;
    p.assemblies = 1;
    p.pins = 3;
    p.slabs = 2;
    ModelInput const model = parse_model(generate_minicore_rect(p));

    BenchConfig cfg;
    cfg.workloads = {100, 300};
    cfg.inactive = 1;
    cfg.active = 2;
    std::ostringstream log;
    BenchReport const report = run_bench(model, cfg, &log);
    ASSERT_EQ(8, report.rows.size());
    EXPECT_TRUE(report.k_identical);
    EXPECT_EQ(2, report.ordering.size());

    for (auto const& row : report.rows)
    {
        ASSERT_EQ(2, row.phases.size());
        EXPECT_EQ(3, row.k.size());
        for (auto const& other : report.rows)
        {
            if (other.histories == row.histories)
            {
                EXPECT_EQ(row.k, other.k);
            }
        }
        for (auto const& ph : row.phases)
        {
            EXPECT_GT(ph.histories_per_s, 0);
            double sum = 0;
            for (std::size_t i = 0; i < OpStats::size; ++i)
            {
                if (is_tracking_op(static_cast<Op>(i)))
                {
                    sum += ph.ops.seconds[i];
                }
            }
            EXPECT_LE(sum, ph.ops.total_seconds * (1 + 1e-12));
        }
    }

    std::ostringstream csv;
    write_bench_csv(csv, report);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(
        "strategy,phase,n,histories_per_s,op,op_calls,op_seconds,op_share",
        line);
    std::set<std::string> combos;
    size_type lines = 0;
    while (std::getline(in, line))
    {
        ++lines;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        for (std::string f; std::getline(ls, f, ',');)
        {
            fields.push_back(f);
        }
        ASSERT_EQ(8, fields.size()) << line;
        double const share = std::stod(fields[7]);
        EXPECT_GE(share, 0) << line;
        EXPECT_LE(share, 1) << line;
        combos.insert(fields[0] + "/" + fields[2]);
    }
    EXPECT_EQ(8, combos.size());
    // 8 rows x 2 phases x (operations + tracking total)
    EXPECT_EQ(8 * 2 * (OpStats::size + 1), lines);

    auto const j = to_json(report);
    EXPECT_EQ(8, j.at("rows").size());
}

TEST(Bench, rejects_hex_matrix)
{
    ModelInput const model =
        parse_model(generate_model("minicore-hex", {{"rings", 1}}));
    BenchConfig cfg;
    cfg.workloads = {50};
    cfg.inactive = 0;
    cfg.active = 1;
    EXPECT_THROW(run_bench(model, cfg, nullptr), UnsupportedError);
    cfg.strategies = {Strategy::st};
    EXPECT_EQ(1, run_bench(model, cfg, nullptr).rows.size());
}

//---------------------------------------------------------------------------//
TEST(Verify, cross_surface_negative_control)
{
    VerifyOptions opts;
    opts.scale = 0.05;
    auto good = verify_cross_surface(opts);
    EXPECT_TRUE(good.passed()) << good.failures;
    opts.corrupt_neighbors = true;
    auto bad = verify_cross_surface(opts);
    EXPECT_GT(bad.instances, 0);
    EXPECT_GT(bad.failures, 0);
    EXPECT_FALSE(bad.passed());
    EXPECT_FALSE(bad.messages.empty());
}

TEST(Verify, replay_seed_sweep)
{
    VerifyOptions opts;
    opts.suites = {"replay"};
    opts.replay_seeds = 10;
    auto const results = run_verify(opts, nullptr);
    ASSERT_EQ(1, results.size());
    EXPECT_EQ("replay", results[0].name);
    // Three strategies compared against dp per seed
    EXPECT_EQ(30, results[0].instances);
    EXPECT_EQ(0, results[0].failures);
}

TEST(Verify, unknown_suite)
{
    VerifyOptions opts;
    opts.suites = {"nope"};
    EXPECT_THROW(run_verify(opts, nullptr), ConfigError);
    auto const& names = verify_suite_names();
    EXPECT_NE(std::find(names.begin(), names.end(), "cross_surface"),
              names.end());
}

//---------------------------------------------------------------------------//
} // namespace test
} // namespace nestmc
