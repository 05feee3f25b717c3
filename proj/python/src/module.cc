//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file python/src/module.cc
//! \brief Python bindings: models travel as JSON text.
//---------------------------------------------------------------------------//
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nestmc/base/Assert.hh"
#include "nestmc/harness/Bench.hh"
#include "nestmc/harness/Generators.hh"
#include "nestmc/harness/ModelIO.hh"
#include "nestmc/harness/Runner.hh"
#include "nestmc/harness/Verify.hh"
#include "nestmc/multiverse/GeometryModel.hh"

namespace py = pybind11;
using nlohmann::json;

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
std::string generate(std::string const& name, std::string const& params)
{
    return generate_model(name, json::parse(params)).dump();
}

std::string run(std::string const& model_text, std::string const& overrides)
{
    json doc = json::parse(model_text);
    json const extra = json::parse(overrides);
    for (auto const& [key, val] : extra.items())
    {
        doc["run"][key] = val;
    }
    ModelInput const model = parse_model(doc);
    PowerIterationResult r;
    {
        py::gil_scoped_release release;
        r = run_model(model, nullptr);
    }
    auto const& t = r.tallies;
    json out = {{"name", model.name},
                {"strategy", to_cstring(model.run.strategy)},
                {"inactive", r.inactive},
                {"active", r.active},
                {"histories", r.histories},
                {"k", r.k},
                {"entropy", r.entropy},
                {"k_eff", r.k_eff.mean},
                {"k_std_err", r.k_eff.std_err},
                {"accounting",
                 {{"histories", r.accounting.histories},
                  {"absorbed", r.accounting.absorbed},
                  {"fission", r.accounting.fission},
                  {"leaked", r.accounting.leaked},
                  {"lost", r.accounting.lost},
                  {"collisions", r.accounting.collisions},
                  {"crossings", r.accounting.crossings}}},
                {"num_groups", t.num_groups},
                {"mesh_dims", t.mesh_dims},
                {"mesh_flux", t.mesh_flux},
                {"mesh_rel_err", t.mesh_rel_err},
                {"cell_flux", t.cell_flux},
                {"cell_rel_err", t.cell_rel_err}};
    return out.dump();
}

std::string verify(std::vector<std::string> const& suites,
                   std::uint64_t seed,
                   real_type scale,
                   size_type replay_seeds)
{
    VerifyOptions opts;
    opts.suites = suites;
    opts.seed = seed;
    opts.scale = scale;
    opts.replay_seeds = replay_seeds;
    std::vector<SuiteResult> results;
    {
        py::gil_scoped_release release;
        results = run_verify(opts, nullptr);
    }
    json out = json::array();
    for (auto const& s : results)
    {
        out.push_back({{"name", s.name},
                       {"instances", s.instances},
                       {"failures", s.failures},
                       {"skipped", s.skipped},
                       {"passed", s.passed()},
                       {"messages", s.messages},
                       {"seconds", s.seconds}});
    }
    return out.dump();
}

py::tuple bench(std::string const& model_text,
                std::vector<std::string> const& strategies,
                std::vector<size_type> const& workloads,
                size_type inactive,
                size_type active)
{
    ModelInput const model = parse_model(json::parse(model_text));
    BenchConfig cfg;
    cfg.strategies.clear();
    for (auto const& s : strategies)
    {
        cfg.strategies.push_back(strategy_from_string(s));
    }
    cfg.workloads = workloads;
    cfg.inactive = inactive;
    cfg.active = active;
    BenchReport report;
    {
        py::gil_scoped_release release;
        report = run_bench(model, cfg, nullptr);
    }
    std::ostringstream csv;
    write_bench_csv(csv, report);
    return py::make_tuple(csv.str(), to_json(report).dump());
}

//---------------------------------------------------------------------------//
class PyGeometry
{
  public:
    PyGeometry(std::string const& model_text, std::string const& strategy)
        : input_(parse_model(json::parse(model_text)).geometry)
        , model_(input_, strategy_from_string(strategy))
    {
    }

    std::vector<std::pair<std::string, size_type>>
    locate(Real3 const& pos) const
    {
        auto const state = model_.find_cell(pos);
        std::vector<std::pair<std::string, size_type>> result;
        for (size_type l = 0; l < state.num_levels; ++l)
        {
            auto const& lev = state.levels[l];
            result.push_back({input_.label(lev.universe), lev.cell.get()});
        }
        return result;
    }

    size_type material(Real3 const& pos) const
    {
        return model_.material(model_.find_cell(pos)).get();
    }

    std::string dump(Real3 const& pos, Real3 const& dir) const
    {
        auto state = model_.find_cell(pos, dir);
        model_.find_next_step(state);
        return model_.dump(state);
    }

    std::string strategy() const { return to_cstring(model_.strategy()); }

  private:
    GeometryInput input_;
    GeometryModel model_;
};

//---------------------------------------------------------------------------//
}  // namespace
}  // namespace nestmc

PYBIND11_MODULE(_nestmc, m)
{
    using namespace nestmc;
    m.doc() = "Nested-universe Monte Carlo geometry and criticality core";

    auto base = py::register_exception<ConfigError>(
        m, "ConfigError", PyExc_ValueError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", base);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_RuntimeError);
    py::register_exception<TransportError>(
        m, "TransportError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try
        {
            if (p)
            {
                std::rethrow_exception(p);
            }
        }
        catch (json::exception const& e)
        {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("generate", &generate, py::arg("name"), py::arg("params") = "{}");
    m.def("run", &run, py::arg("model"), py::arg("overrides") = "{}");
    m.def("verify",
          &verify,
          py::arg("suites"),
          py::arg("seed"),
          py::arg("scale"),
          py::arg("replay_seeds"));
    m.def("bench",
          &bench,
          py::arg("model"),
          py::arg("strategies"),
          py::arg("workloads"),
          py::arg("inactive"),
          py::arg("active"));
    m.def("infinite_medium_k", [](std::string const& model_text) {
        return infinite_medium_k(json::parse(model_text));
    });
    m.def("suite_names", &verify_suite_names);

    py::class_<PyGeometry>(m, "Geometry")
        .def(py::init<std::string const&, std::string const&>(),
             py::arg("model"),
             py::arg("strategy"))
        .def("locate", &PyGeometry::locate, py::arg("pos"))
        .def("material", &PyGeometry::material, py::arg("pos"))
        .def("dump", &PyGeometry::dump, py::arg("pos"), py::arg("dir"))
        .def_property_readonly("strategy", &PyGeometry::strategy);
}
