//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/Verify.cc
//---------------------------------------------------------------------------//
#include "Verify.hh"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "nestmc/arrays/PseudoArray.hh"
#include "nestmc/base/Assert.hh"
#include "nestmc/transport/Transporter.hh"

#include "Generators.hh"
#include "ModelIO.hh"
#include "RandomGeometry.hh"
#include "Runner.hh"

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
constexpr std::size_t max_messages = 5;

size_type scaled(real_type base, real_type scale)
{
    return std::max<size_type>(1, static_cast<size_type>(base * scale));
}

size_type scaled_histories(real_type base, real_type scale)
{
    return std::max<size_type>(100, scaled(base, scale));
}

void fail(SuiteResult& r, std::string msg)
{
    ++r.failures;
    if (r.messages.size() < max_messages)
    {
        r.messages.push_back(std::move(msg));
    }
}

std::string cell_str(std::optional<LocalCellId> c)
{
    return c ? std::to_string(c->get()) : std::string("none");
}

template<class F>
SuiteResult timed(std::string name, F&& body)
{
    SuiteResult r;
    r.name = std::move(name);
    auto const start = std::chrono::steady_clock::now();
    try
    {
        body(r);
    }
    catch (std::exception const& e)
    {
        fail(r, std::string("aborted: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                              - start)
                    .count();
    return r;
}

//---------------------------------------------------------------------------//
ModelInput small_rect_model(size_type histories, size_type inactive, size_type active)
{
    RectCoreParams p;
    p.assemblies = 2;
    p.pins = 3;
    p.slabs = 2;
    auto model = parse_model(generate_minicore_rect(p));
    model.run.transport.histories = histories;
    model.run.transport.inactive = inactive;
    model.run.transport.active = active;
    return model;
}

struct RunSignature
{
    std::vector<real_type> k;
    TallyResult tallies;
    Accounting accounting;
    FissionBank bank;

    bool operator==(RunSignature const&) const = default;
};

RunSignature run_signature(ModelInput const& model)
{
    auto result = make_transporter(model).run();
    return {std::move(result.k),
            std::move(result.tallies),
            result.accounting,
            std::move(result.final_bank)};
}

std::string describe_mismatch(RunSignature const& a, RunSignature const& b)
{
    std::ostringstream os;
    if (a.k != b.k)
    {
        for (std::size_t i = 0; i < std::min(a.k.size(), b.k.size()); ++i)
        {
            if (a.k[i] != b.k[i])
            {
                os << "k differs at cycle " << i << " (" << repr(a.k[i])
                   << " vs " << repr(b.k[i]) << ")";
                break;
            }
        }
    }
    else if (!(a.tallies == b.tallies))
    {
        os << "tallies differ";
    }
    else if (!(a.accounting == b.accounting))
    {
        os << "accounting differs";
    }
    else
    {
        os << "final fission bank differs";
    }
    return os.str();
}

//---------------------------------------------------------------------------//
/*!
 * Track a ray through one universe, recording (daughter, distance) pairs.
 */
template<class U, class DaughterOf>
std::vector<std::pair<UniverseId, real_type>>
crossing_sequence(U const& u, Real3 pos, Real3 const& dir, DaughterOf&& daughter_of)
{
    std::vector<std::pair<UniverseId, real_type>> seq;
    auto cell = u.find_cell(pos);
    OnSurface on;
    for (int i = 0; cell && i < 10000; ++i)
    {
        auto isect = u.intersect(*cell, pos, dir, on);
        if (!isect)
        {
            seq.push_back({UniverseId{}, -1});
            break;
        }
        seq.push_back({daughter_of(*cell), isect->distance});
        axpy(isect->distance, dir, &pos);
        axpy(bump_distance(pos), dir, &pos);
        cell = u.cross_surface(pos, *cell, isect->surface, isect->sense);
        on = {isect->surface, bump_distance(pos)};
    }
    return seq;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::vector<std::string> const& verify_suite_names()
{
    static std::vector<std::string> const names{"bih",
                                                "cross_surface",
                                                "arrays",
                                                "hex",
                                                "replay",
                                                "drivers",
                                                "analytic"};
    return names;
}

//---------------------------------------------------------------------------//
/*!
 * BIH point location against a linear scan, and BIH exclusion queries
 * against the neighbor-list scan, over random CSG partitions.
 */
SuiteResult verify_bih(VerifyOptions const& opts)
{
    return timed("bih", [&](SuiteResult& r) {
        RandomSource rng(opts.seed);
        size_type const num_universes = std::max<size_type>(20, scaled(20, opts.scale));
        size_type const num_points = scaled(1e5, opts.scale);
        for (size_type u = 0; u < num_universes; ++u)
        {
            CsgUniverse const uni = random_csg_universe(rng, 512);
            Aabb box = uni.bbox();
            for (int ax = 0; ax < 3; ++ax)
            {
                real_type const pad = 0.05 * (box.hi[ax] - box.lo[ax]);
                box.lo[ax] -= pad;
                box.hi[ax] += pad;
            }
            for (size_type i = 0; i < num_points; ++i)
            {
                Real3 const pos = rng.point(box);
                auto const expected = uni.find_cell_linear(pos);
                auto const actual = uni.find_cell(pos);
                ++r.instances;
                if (expected != actual)
                {
                    fail(r,
                         "universe " + std::to_string(u) + ": find_cell gave "
                             + cell_str(actual) + ", linear scan "
                             + cell_str(expected));
                    continue;
                }
                if (!expected || i % 10 != 0)
                {
                    continue;
                }
                // Exclusion query through a random face of the found cell
                auto const& faces = uni.cell(*expected).faces;
                auto const& face = faces[rng.integer(0, faces.size() - 1)];
                for (LocalCellId from :
                     {*expected,
                      LocalCellId{rng.integer(0, uni.num_cells() - 1)}})
                {
                    auto const via_bih
                        = uni.cross_surface(pos, from, face.surface, face.sense);
                    auto const via_nbr = uni.cross_surface_neighbors(
                        pos, from, face.surface, face.sense);
                    ++r.instances;
                    if (via_bih != via_nbr)
                    {
                        fail(r,
                             "universe " + std::to_string(u)
                                 + ": exclusion query gave "
                                 + cell_str(via_bih) + ", neighbor scan "
                                 + cell_str(via_nbr));
                    }
                }
            }
        }
    });
}

//---------------------------------------------------------------------------//
/*!
 * Neighbor-list crossing against a linear search at each crossing point.
 *
 * Crossings that land in a cell not bounded by the crossed surface (ray
 * passing within the bump distance of an edge) are skipped.
 */
SuiteResult verify_cross_surface(VerifyOptions const& opts)
{
    return timed("cross_surface", [&](SuiteResult& r) {
        RandomSource rng(opts.seed + 1);
        size_type const num_universes = scaled(40, opts.scale);
        size_type const rays = 50;
        for (size_type u = 0; u < num_universes; ++u)
        {
            CsgUniverse uni = random_csg_universe(rng, 256);
            if (opts.corrupt_neighbors)
            {
                for (size_type s = 0; s < uni.num_surfaces(); ++s)
                {
                    for (Sense sense : {Sense::negative, Sense::positive})
                    {
                        auto& nbr = uni.mutable_neighbors_for_testing(
                            LocalSurfaceId{s}, sense);
                        if (!nbr.empty())
                        {
                            nbr.erase(nbr.begin());
                        }
                    }
                }
            }
            for (size_type ray = 0; ray < rays; ++ray)
            {
                Real3 pos = rng.point(uni.bbox());
                Real3 const dir = rng.direction();
                auto cell = uni.find_cell_linear(pos);
                OnSurface on;
                while (cell)
                {
                    auto isect = uni.intersect(*cell, pos, dir, on);
                    if (!isect)
                    {
                        fail(r, "no exiting intersection from cell "
                                    + cell_str(cell));
                        break;
                    }
                    axpy(isect->distance, dir, &pos);
                    axpy(bump_distance(pos), dir, &pos);
                    auto const expected = uni.find_cell_linear(pos);
                    if (expected)
                    {
                        auto const& faces = uni.cell(*expected).faces;
                        bool const bounded = std::any_of(
                            faces.begin(), faces.end(), [&](SurfaceSense const& f) {
                                return f.surface == isect->surface
                                       && f.sense == isect->sense;
                            });
                        if (!bounded)
                        {
                            ++r.skipped;
                            break;
                        }
                    }
                    auto const actual = uni.cross_surface_neighbors(
                        pos, *cell, isect->surface, isect->sense);
                    ++r.instances;
                    if (actual != expected)
                    {
                        fail(r,
                             "universe " + std::to_string(u) + ": crossing surface "
                                 + std::to_string(isect->surface.get())
                                 + " from cell " + cell_str(cell) + " gave "
                                 + cell_str(actual) + ", expected "
                                 + cell_str(expected));
                        break;
                    }
                    cell = actual;
                    on = {isect->surface, bump_distance(pos)};
                }
            }
        }
    });
}

//---------------------------------------------------------------------------//
/*!
 * Crossing sequences through rect arrays and their pseudo-array form.
 */
SuiteResult verify_arrays(VerifyOptions const& opts)
{
    return timed("arrays", [&](SuiteResult& r) {
        RandomSource rng(opts.seed + 2);
        size_type const num_rays = scaled(1e4, opts.scale);
        size_type const rays_per_array = 100;
        RectArrayUniverse array;
        CsgUniverse pseudo;
        for (size_type ray = 0; ray < num_rays; ++ray)
        {
            if (ray % rays_per_array == 0)
            {
                array = random_rect_array(rng, 6);
                pseudo = to_pseudo_array_rect(array);
            }
            Real3 const pos = rng.point(array.bbox());
            Real3 const dir = rng.direction();
            auto const a = crossing_sequence(array, pos, dir, [&](LocalCellId c) {
                return array.daughter(c).universe;
            });
            auto const b = crossing_sequence(pseudo, pos, dir, [&](LocalCellId c) {
                return pseudo.cell(c).daughter->universe;
            });
            ++r.instances;
            bool ok = a.size() == b.size();
            for (std::size_t i = 0; ok && i < a.size(); ++i)
            {
                real_type const da = a[i].second;
                real_type const db = b[i].second;
                ok = a[i].first == b[i].first
                     && std::fabs(da - db)
                            <= 1e-12 * std::max(std::fabs(da), std::fabs(db));
            }
            if (!ok)
            {
                fail(r,
                     "ray " + std::to_string(ray) + ": array gave "
                         + std::to_string(a.size()) + " crossings, pseudo-array "
                         + std::to_string(b.size()));
            }
        }
    });
}

//---------------------------------------------------------------------------//
/*!
 * Hex pseudo-array adjacency against axial-coordinate arithmetic, plus
 * strategy gating on the hex core.
 */
SuiteResult verify_hex(VerifyOptions const& opts)
{
    return timed("hex", [&](SuiteResult& r) {
        RandomSource rng(opts.seed + 3);
        // Center offset of the neighbor across each face: +n0, +n1, n1 - n0
        static constexpr int dq[] = {1, 0, -1};
        static constexpr int dr[] = {0, 1, 1};
        size_type const num_layouts = scaled(10, opts.scale);
        for (size_type layout = 0; layout < num_layouts; ++layout)
        {
            auto const orient = layout % 2 ? HexOrientation::pointy_top
                                           : HexOrientation::flat_top;
            HexGridSpec const spec
                = hex_layout_spec(3, rng.uniform(0.5, 3.0), orient);
            CsgUniverse const uni = to_pseudo_array_hex(spec);
            auto const normals = spec.face_normals();
            if (spec.cells.size() != 19 || uni.num_cells() != 19)
            {
                fail(r, "ring layout does not hold 19 cells");
                continue;
            }
            for (size_type h = 0; h < spec.cells.size(); ++h)
            {
                AxialCoord const c = spec.cells[h];
                Real3 const center = spec.center(c);
                for (int f = 0; f < 3; ++f)
                {
                    for (int side : {-1, 1})
                    {
                        Real3 const dir = real_type(side) * normals[f];
                        ++r.instances;
                        auto const start = uni.find_cell(center);
                        if (!start || uni.cell(*start).daughter->universe.get() != h)
                        {
                            fail(r, "hex center not found in its own cell");
                            continue;
                        }
                        auto isect = uni.intersect(*start, center, dir);
                        if (!isect
                            || std::fabs(isect->distance - spec.pitch / 2)
                                   > 1e-12 * spec.pitch)
                        {
                            fail(r, "face distance is not half the pitch");
                            continue;
                        }
                        Real3 pos = center;
                        axpy(isect->distance, dir, &pos);
                        axpy(bump_distance(pos), dir, &pos);
                        auto const next = uni.cross_surface(
                            pos, *start, isect->surface, isect->sense);
                        AxialCoord const expect_c{c.q + side * dq[f],
                                                  c.r + side * dr[f]};
                        auto const expect = spec.find_hex(expect_c);
                        std::optional<size_type> got;
                        if (next)
                        {
                            got = uni.cell(*next).daughter->universe.get();
                        }
                        if (got != expect)
                        {
                            fail(r,
                                 "hex (" + std::to_string(c.q) + ","
                                     + std::to_string(c.r) + ") family "
                                     + std::to_string(f) + " side "
                                     + std::to_string(side)
                                     + ": wrong neighbor");
                        }
                    }
                }
            }
        }

        // Build-time gating
        HexCoreParams hp;
        hp.rings = 2;
        auto const model = parse_model(generate_minicore_hex(hp));
        for (Strategy s : {Strategy::dp, Strategy::sp, Strategy::rtk})
        {
            ++r.instances;
            try
            {
                GeometryModel geo(model.geometry, s);
                fail(r, std::string("hex core built under ") + to_cstring(s));
            }
            catch (UnsupportedError const& e)
            {
                if (std::string(e.what()).find("hexcore") == std::string::npos)
                {
                    fail(r, std::string("error does not name the universe: ")
                                + e.what());
                }
            }
        }
        ++r.instances;
        try
        {
            GeometryModel geo(model.geometry, Strategy::st);
        }
        catch (std::exception const& e)
        {
            fail(r, std::string("hex core failed under st: ") + e.what());
        }
    });
}

//---------------------------------------------------------------------------//
/*!
 * Every strategy reproduces the same k series, tallies, and bank.
 */
SuiteResult verify_replay(VerifyOptions const& opts)
{
    return timed("replay", [&](SuiteResult& r) {
        size_type const histories = scaled_histories(200, opts.scale);
        for (size_type i = 0; i < opts.replay_seeds; ++i)
        {
            auto model = small_rect_model(histories, 1, 2);
            model.run.transport.seed = opts.seed + 1000 * i;
            model.run.strategy = Strategy::dp;
            auto const ref = run_signature(model);
            for (Strategy s : {Strategy::sp, Strategy::st, Strategy::rtk})
            {
                model.run.strategy = s;
                auto const other = run_signature(model);
                ++r.instances;
                if (!(other == ref))
                {
                    fail(r,
                         std::string("seed ")
                             + std::to_string(model.run.transport.seed) + ": "
                             + to_cstring(s) + " vs dp: "
                             + describe_mismatch(ref, other));
                }
            }
        }
    });
}

//---------------------------------------------------------------------------//
/*!
 * Event and history drivers, and serial and threaded runs, agree exactly.
 */
SuiteResult verify_drivers(VerifyOptions const& opts)
{
    return timed("drivers", [&](SuiteResult& r) {
        size_type const histories = scaled_histories(300, opts.scale);
        for (Strategy s : {Strategy::dp, Strategy::sp, Strategy::st, Strategy::rtk})
        {
            auto model = small_rect_model(histories, 1, 2);
            model.run.transport.seed = opts.seed;
            model.run.strategy = s;
            auto const ref = run_signature(model);

            model.run.transport.driver = Driver::event;
            auto const event = run_signature(model);
            ++r.instances;
            if (!(event == ref))
            {
                fail(r,
                     std::string(to_cstring(s))
                         + ": event vs history: " + describe_mismatch(ref, event));
            }

            model.run.transport.driver = Driver::history;
            model.run.transport.workers = 3;
            auto const threaded = run_signature(model);
            ++r.instances;
            if (!(threaded == ref))
            {
                fail(r,
                     std::string(to_cstring(s)) + ": 3 workers vs 1: "
                         + describe_mismatch(ref, threaded));
            }
        }
    });
}

//---------------------------------------------------------------------------//
/*!
 * Infinite-medium k within three standard errors of the balance value.
 */
SuiteResult verify_analytic(VerifyOptions const& opts)
{
    return timed("analytic", [&](SuiteResult& r) {
        for (auto const* name : {"infinite-1g", "infinite-2g"})
        {
            auto const doc = generate_model(name);
            auto model = parse_model(doc);
            model.run.transport.histories = scaled_histories(1e4, opts.scale);
            model.run.transport.inactive = 10;
            model.run.transport.active = 30;
            model.run.transport.seed = opts.seed;
            model.run.transport.mesh.reset();
            auto const result = make_transporter(model).run();
            real_type const expected = infinite_medium_k(doc);
            real_type const diff = std::fabs(result.k_eff.mean - expected);
            ++r.instances;
            if (!(diff <= 3 * result.k_eff.std_err))
            {
                char buf[160];
                std::snprintf(buf,
                              sizeof(buf),
                              "%s: k = %.6f +/- %.6f, expected %.6f",
                              name,
                              result.k_eff.mean,
                              result.k_eff.std_err,
                              expected);
                fail(r, buf);
            }
            ++r.instances;
            if (result.accounting.lost != 0 || result.accounting.leaked != 0)
            {
                fail(r, std::string(name) + ": particles escaped a reflecting box");
            }
        }
    });
}

//---------------------------------------------------------------------------//
std::vector<SuiteResult>
run_verify(VerifyOptions const& opts, std::ostream* log)
{
    static std::map<std::string, std::function<SuiteResult(VerifyOptions const&)>> const
        suites{{"bih", verify_bih},
               {"cross_surface", verify_cross_surface},
               {"arrays", verify_arrays},
               {"hex", verify_hex},
               {"replay", verify_replay},
               {"drivers", verify_drivers},
               {"analytic", verify_analytic}};

    auto const& selected = opts.suites.empty() ? verify_suite_names() : opts.suites;
    for (auto const& name : selected)
    {
        NMC_VALIDATE(suites.count(name),
                     ConfigError,
                     << "unknown verify suite '" << name << "'");
    }

    std::vector<SuiteResult> results;
    for (auto const& name : selected)
    {
        results.push_back(suites.at(name)(opts));
        auto const& r = results.back();
        if (log)
        {
            char buf[200];
            std::snprintf(buf,
                          sizeof(buf),
                          "%-14s %s  %llu instances, %llu failures, %llu "
                          "skipped (%.1f s)\n",
                          r.name.c_str(),
                          r.passed() ? "PASS" : "FAIL",
                          static_cast<unsigned long long>(r.instances),
                          static_cast<unsigned long long>(r.failures),
                          static_cast<unsigned long long>(r.skipped),
                          r.seconds);
            *log << buf;
            for (auto const& m : r.messages)
            {
                *log << "    " << m << '\n';
            }
        }
    }
    return results;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
