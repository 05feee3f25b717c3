//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tests/unit/transport/Transporter.test.cc
//---------------------------------------------------------------------------//
#include "nestmc/transport/Transporter.hh"

#include <cmath>

#include <gtest/gtest.h>

#include "nestmc/harness/Generators.hh"
#include "nestmc/harness/ModelIO.hh"
#include "nestmc/harness/RandomGeometry.hh"
#include "nestmc/harness/Runner.hh"

#include "TestUtils.hh"

namespace nestmc
{
namespace test
{
namespace
{
MaterialData one_group(real_type sigma_t,
                       real_type sigma_s,
                       real_type sigma_f,
                       real_type nu = 2.5)
{
    MaterialInput m;
    m.name = "m";
    m.sigma_t = {sigma_t};
    m.sigma_s = {{sigma_s}};
    m.nu_sigma_f = {nu * sigma_f};
    m.chi = {1};
    m.nu = nu;
    return MaterialData(m);
}

GeometryInput box_geometry(real_type half, BoundaryCondition bc)
{
    CsgUniverseBuilder b;
    b.add_cell(material_cell(
        add_box(b, {-half, -half, -half}, {half, half, half}), 0));
    GeometryInput input;
    input.universes.push_back(std::move(b).build());
    input.boundary.fill(bc);
    return input;
}

Transporter make_box(real_type half,
                     BoundaryCondition bc,
                     MaterialData mat,
                     TransportConfig config)
{
    return Transporter(GeometryModel(box_geometry(half, bc), Strategy::sp),
                       {std::move(mat)},
                       std::move(config));
}

ModelInput small_minicore()
{
    auto model = parse_model(generate_model(
        "minicore-rect", {{"assemblies", 2}, {"pins", 3}, {"slabs", 2}}));
    model.run.transport.histories = 500;
    model.run.transport.inactive = 2;
    model.run.transport.active = 3;
    return model;
}

}  // namespace

//---------------------------------------------------------------------------//
TEST(TransporterTest, pure_absorber_k)
{
    // Sigma_f / Sigma_t = 0.4 with nu = 2.5: one collision, mean yield 1
    TransportConfig cfg;
    cfg.histories = 10000;
    cfg.active = 1;
    auto t = make_box(10, BoundaryCondition::reflecting, one_group(1, 0, 0.4), cfg);
    auto result = t.run();
    ASSERT_EQ(1, result.k.size());
    real_type const se = 2.5 * std::sqrt(0.4 * 0.6 / cfg.histories);
    EXPECT_NEAR(1.0, result.k[0], 5 * se);
    auto const& a = result.accounting;
    EXPECT_EQ(cfg.histories, a.histories);
    EXPECT_EQ(cfg.histories, a.collisions);
    EXPECT_EQ(cfg.histories, a.fission + a.absorbed);
    EXPECT_EQ(0, a.leaked);
    EXPECT_EQ(0, a.lost);
}

TEST(TransporterTest, first_collision_distance)
{
    TransportConfig cfg;
    cfg.histories = 1;
    cfg.source_box = Aabb{{-1, -1, -1}, {1, 1, 1}};
    auto t = make_box(1000, BoundaryCondition::vacuum, one_group(1, 0, 0.1), cfg);
    constexpr int n = 1000000;
    double sum = 0;
    for (int h = 0; h < n; ++h)
    {
        auto events = t.trace_history(nullptr, 0, 1, h);
        ASSERT_EQ(2, events.size());
        ASSERT_EQ(TraceEvent::Kind::collide, events[1].kind);
        sum += norm(events[1].pos - events[0].pos);
    }
    // Exponential with unit mean and unit variance
    EXPECT_NEAR(1, sum / n, 5 / std::sqrt(double(n)));
}

TEST(TransporterTest, no_capture_ends_in_leak_or_fission)
{
    TransportConfig cfg;
    cfg.histories = 5000;
    cfg.active = 1;
    auto t = make_box(1, BoundaryCondition::vacuum, one_group(1, 0.99, 0.01), cfg);
    auto result = t.run();
    auto const& a = result.accounting;
    EXPECT_EQ(0, a.absorbed);
    EXPECT_EQ(a.histories, a.leaked + a.fission);
    EXPECT_GT(a.leaked, a.fission);
    EXPECT_GT(a.crossings, 0);
}

TEST(TransporterTest, no_fissile_material)
{
    TransportConfig cfg;
    cfg.histories = 10;
    auto t = make_box(1, BoundaryCondition::vacuum, one_group(1, 0.5, 0), cfg);
    EXPECT_THROW(t.run(), ConfigError);
}

TEST(TransporterTest, source_collapse)
{
    // Nearly transparent fuel: every neutron leaks
    TransportConfig cfg;
    cfg.histories = 4;
    cfg.inactive = 1;
    cfg.active = 1;
    auto t = make_box(
        0.5, BoundaryCondition::vacuum, one_group(1e-9, 0, 1e-9), cfg);
    try
    {
        t.run();
        ADD_FAILURE() << "expected TransportError";
    }
    catch (TransportError const& e)
    {
        EXPECT_NE(std::string(e.what()).find("collapsed"), std::string::npos);
    }
    FissionBank empty;
    EXPECT_THROW(t.run_cycle(&empty, 1, 1, t.make_tally()), TransportError);
}

TEST(TransporterTest, single_site_bank)
{
    TransportConfig cfg;
    cfg.histories = 4;
    auto t = make_box(10, BoundaryCondition::reflecting, one_group(1, 0.5, 0.2), cfg);
    FissionBank bank{{{1.5, -2.5, 3.25}, 0}};
    for (size_type h = 0; h < cfg.histories; ++h)
    {
        auto events = t.trace_history(&bank, 1, 1, h);
        ASSERT_FALSE(events.empty());
        EXPECT_EQ(TraceEvent::Kind::birth, events[0].kind);
        EXPECT_EQ(bank[0].pos, events[0].pos);
    }
    auto cr = t.run_cycle(&bank, 1, 1, t.make_tally());
    EXPECT_EQ(4, cr.accounting.histories);
    EXPECT_EQ(4, cr.yields.size());
}

TEST(TransporterTest, population_control)
{
    // Every history fissions with yield 2.5: sites per history are 2 or 3
    // at k_prev = 1, and halve at k_prev = 2
    TransportConfig cfg;
    cfg.histories = 4000;
    auto t = make_box(10, BoundaryCondition::reflecting, one_group(1, 0, 1), cfg);
    auto tally = t.make_tally();
    auto c1 = t.run_cycle(nullptr, 0, 1, tally);
    EXPECT_EQ(2.5, c1.k);
    real_type const mean1 = real_type(c1.bank.size()) / cfg.histories;
    EXPECT_NEAR(2.5, mean1, 5 * 0.5 / std::sqrt(4000.0));
    auto c2 = t.run_cycle(nullptr, 0, 2, tally);
    real_type const mean2 = real_type(c2.bank.size()) / cfg.histories;
    EXPECT_NEAR(1.25, mean2, 5 * 0.5 / std::sqrt(4000.0));
    for (auto const& s : c1.bank)
    {
        EXPECT_LT(s.parent, cfg.histories);
    }
    EXPECT_TRUE(std::is_sorted(
        c1.bank.begin(), c1.bank.end(), [](auto const& a, auto const& b) {
            return a.parent < b.parent;
        }));
}

TEST(TransporterTest, determinism_and_seed)
{
    auto model = small_minicore();
    auto a = make_transporter(model).run();
    auto b = make_transporter(model).run();
    EXPECT_EQ(a.k, b.k);
    EXPECT_EQ(a.tallies, b.tallies);
    EXPECT_EQ(a.final_bank, b.final_bank);
    model.run.transport.seed += 1;
    auto c = make_transporter(model).run();
    EXPECT_NE(a.k, c.k);
}

TEST(TransporterTest, drivers_and_workers_identical)
{
    auto model = small_minicore();
    model.run.transport.driver = Driver::history;
    auto ref = make_transporter(model).run();
    for (auto driver : {Driver::history, Driver::event})
    {
        for (size_type workers : {1, 3})
        {
            model.run.transport.driver = driver;
            model.run.transport.workers = workers;
            auto r = make_transporter(model).run();
            EXPECT_EQ(ref.k, r.k) << to_cstring(driver) << workers;
            EXPECT_EQ(ref.entropy, r.entropy);
            EXPECT_EQ(ref.tallies, r.tallies);
            EXPECT_EQ(ref.accounting, r.accounting);
            EXPECT_EQ(ref.final_bank, r.final_bank);
        }
    }
}

TEST(TransporterTest, single_active_cycle)
{
    auto model = small_minicore();
    model.run.transport.inactive = 0;
    model.run.transport.active = 1;
    auto r = make_transporter(model).run();
    ASSERT_EQ(1, r.k.size());
    EXPECT_EQ(r.k[0], r.k_eff.mean);
    EXPECT_EQ(0, r.k_eff.std_err);
    for (real_type e : r.tallies.cell_rel_err)
    {
        EXPECT_EQ(0, e);
    }
}

TEST(TransporterTest, config_validation)
{
    TransportConfig cfg;
    cfg.histories = 0;
    EXPECT_THROW(make_box(1, BoundaryCondition::vacuum, one_group(1, 0, 0.1), cfg),
                 ConfigError);
    cfg = {};
    cfg.active = 0;
    EXPECT_THROW(make_box(1, BoundaryCondition::vacuum, one_group(1, 0, 0.1), cfg),
                 ConfigError);
    cfg = {};
    EXPECT_THROW(Transporter(GeometryModel(box_geometry(1, BoundaryCondition::vacuum),
                                           Strategy::dp),
                             {},
                             cfg),
                 ConfigError);
}

//---------------------------------------------------------------------------//
// TALLIES
//---------------------------------------------------------------------------//
TEST(TallyTest, single_collision)
{
    GeometryModel geo(box_geometry(2, BoundaryCondition::vacuum), Strategy::dp);
    std::vector<MaterialData> mats{one_group(0.5, 0.2, 0.1), one_group(2, 1, 0.1)};
    MeshSpec mesh{{{-2, -2, -2}, {2, 2, 2}}, {2, 2, 1}};
    Tally tally(geo.params(), mats, mesh);
    EXPECT_EQ(4, tally.num_elements());
    auto counts = tally.make_counts();
    tally.score(counts, {1, -1, 0}, 0, 0, MaterialId(1));
    tally.score(counts, {5, 0, 0}, 0, 0, MaterialId(1));  // Outside the mesh
    tally.accumulate(counts);
    auto result = tally.finalize(1);
    real_type const vol = 2 * 2 * 4;
    EXPECT_EQ(vol, result.element_volume);
    ASSERT_EQ(4, result.mesh_flux.size());
    EXPECT_EQ(0, result.mesh_flux[0]);
    EXPECT_DOUBLE_EQ(0.5 / vol, result.mesh_flux[1]);
    EXPECT_EQ(0, result.mesh_flux[2]);
    // Cell tally uses the cell's own material and sees both collisions
    EXPECT_DOUBLE_EQ(2 / 0.5, result.cell_flux[0]);
}

// Independent first-generation runs from the uniform source: per-element
// mean and standard error over seeds
struct ElementStats
{
    std::vector<real_type> mean;
    std::vector<real_type> std_err;
};

ElementStats independent_mesh_flux(real_type half,
                                   BoundaryCondition bc,
                                   MaterialData const& mat,
                                   Ijk dims,
                                   int runs)
{
    std::vector<std::vector<real_type>> samples;
    for (int r = 0; r < runs; ++r)
    {
        TransportConfig cfg;
        cfg.histories = 2000;
        cfg.inactive = 0;
        cfg.active = 1;
        cfg.seed = 1000 + r;
        cfg.mesh = MeshSpec{{{-half, -half, -half}, {half, half, half}}, dims};
        auto t = make_box(half, bc, mat, cfg);
        auto result = t.run();
        for (std::size_t e = 0; e < result.tallies.mesh_flux.size(); ++e)
        {
            samples.resize(result.tallies.mesh_flux.size());
            samples[e].push_back(result.tallies.mesh_flux[e]);
        }
    }
    ElementStats stats;
    for (auto const& x : samples)
    {
        auto ms = mean_std_err(x);
        stats.mean.push_back(ms.mean);
        stats.std_err.push_back(ms.std_err);
    }
    return stats;
}

TEST(TallyTest, mirror_symmetry)
{
    auto s = independent_mesh_flux(
        5, BoundaryCondition::vacuum, one_group(1, 0.6, 0.15), {4, 1, 1}, 30);
    for (auto [i, j] : {std::pair{0, 3}, std::pair{1, 2}})
    {
        real_type const sigma = std::hypot(s.std_err[i], s.std_err[j]);
        EXPECT_GT(sigma, 0);
        EXPECT_LE(std::fabs(s.mean[i] - s.mean[j]), 4 * sigma)
            << s.mean[i] << " vs " << s.mean[j];
    }
    // Leakage depresses the outer elements
    EXPECT_GT(s.mean[1], s.mean[0] + 4 * std::hypot(s.std_err[0], s.std_err[1]));
}

TEST(TallyTest, infinite_medium_flatness)
{
    auto s = independent_mesh_flux(
        10, BoundaryCondition::reflecting, one_group(1, 0.5, 0.2), {4, 4, 1}, 30);
    real_type wsum = 0, w = 0;
    for (std::size_t i = 0; i < s.mean.size(); ++i)
    {
        real_type const var = s.std_err[i] * s.std_err[i];
        wsum += s.mean[i] / var;
        w += 1 / var;
    }
    real_type const mean = wsum / w;
    real_type chi2 = 0;
    for (std::size_t i = 0; i < s.mean.size(); ++i)
    {
        chi2 += std::pow(s.mean[i] - mean, 2) / std::pow(s.std_err[i], 2);
    }
    EXPECT_LT(chi2, chi2_quantile(0.999, s.mean.size() - 1)) << "mean " << mean;
}

//---------------------------------------------------------------------------//
TEST(EntropyTest, stabilizes)
{
    for (char const* name : {"minicore-rect", "infinite-2g"})
    {
        auto model = parse_model(generate_model(name));
        model.run.transport.histories = 2000;
        model.run.transport.inactive = 30;
        model.run.transport.active = 1;
        auto r = make_transporter(model).run();
        std::vector<real_type> tail(r.entropy.begin() + 20, r.entropy.begin() + 30);
        auto st = slope_t_test(tail);
        EXPECT_LT(std::fabs(st.t), student_t_quantile(0.9995, st.dof))
            << name << " slope " << st.slope;
    }
}

//---------------------------------------------------------------------------//
// Every history ends exactly once over random geometries and materials
TEST(AccountingTest, property)
{
    RandomSource rng(77);
    int failures = 0;
    int instances = 0;
    for (; instances < 1000; ++instances)
    {
        auto csg = random_csg_universe(rng, 16);
        std::vector<MaterialData> mats;
        for (size_type m = 0; m < csg.num_cells(); ++m)
        {
            real_type const st = rng.uniform(0.1, 3);
            real_type const ss = st * rng.uniform(0, 0.9);
            real_type const sf = (st - ss) * rng.uniform(0.05, 1);
            mats.push_back(one_group(st, ss, sf, rng.uniform(1, 3)));
        }
        GeometryInput input;
        input.universes.push_back(std::move(csg));
        if (rng.bernoulli(0.3))
        {
            input.boundary.fill(BoundaryCondition::reflecting);
        }
        TransportConfig cfg;
        cfg.histories = 20;
        cfg.seed = instances;
        cfg.driver = rng.bernoulli(0.5) ? Driver::event : Driver::history;
        Transporter t(GeometryModel(input, Strategy::dp), mats, cfg);
        auto cr = t.run_cycle(nullptr, 0, 1, t.make_tally());
        auto const& a = cr.accounting;
        failures += a.histories != cfg.histories;
        failures += a.terminated() != a.histories;
        failures += a.lost != 0;
        failures += a.collisions < a.fission + a.absorbed;
        std::uint64_t scored = 0;
        for (auto c : cr.counts.cell)
        {
            scored += c;
        }
        failures += scored != a.collisions;
        failures += cr.yields.size() != cfg.histories;
    }
    EXPECT_GE(instances, 1000);
    EXPECT_EQ(0, failures);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace nestmc
