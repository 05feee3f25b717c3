//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/Bench.cc
//---------------------------------------------------------------------------//
#include "Bench.hh"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

#include "nestmc/base/Assert.hh"
#include "nestmc/transport/Transporter.hh"

#include "Runner.hh"

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
double share(double part, double total)
{
    return total > 0 ? part / total : 0;
}

double tracking_seconds(OpStats const& ops)
{
    double s = 0;
    for (std::size_t i = 0; i < OpStats::size; ++i)
    {
        if (is_tracking_op(static_cast<Op>(i)))
        {
            s += ops.seconds[i];
        }
    }
    return s;
}

std::uint64_t tracking_calls(OpStats const& ops)
{
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < OpStats::size; ++i)
    {
        if (is_tracking_op(static_cast<Op>(i)))
        {
            n += ops.calls[i];
        }
    }
    return n;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
bool is_tracking_op(Op op)
{
    return op != Op::collide;
}

//---------------------------------------------------------------------------//
/*!
 * Each pair runs one untimed warmup cycle, then the inactive and active
 * cycles with per-operation timers.
 */
BenchReport run_bench(ModelInput const& model,
                      BenchConfig const& config,
                      std::ostream* log)
{
    NMC_VALIDATE(!config.strategies.empty() && !config.workloads.empty(),
                 ConfigError,
                 << "benchmark needs at least one strategy and one workload");
    NMC_VALIDATE(config.active >= 1,
                 ConfigError,
                 << "benchmark needs at least one active cycle");

    BenchReport report;
    report.model = model.name;
    report.config = config;

    for (size_type n : config.workloads)
    {
        for (Strategy s : config.strategies)
        {
            ModelInput m = model;
            m.run.strategy = s;
            m.run.transport.histories = n;
            m.run.transport.inactive = config.inactive;
            m.run.transport.active = config.active;
            m.run.transport.workers = config.workers;
            m.run.transport.driver = config.driver;
            m.run.transport.time_ops = true;
            Transporter const tr = make_transporter(m);

            BenchRow row;
            row.strategy = s;
            row.histories = n;
            {
                auto const t0 = std::chrono::steady_clock::now();
                auto const tally = tr.make_tally();
                tr.run_cycle(nullptr, 0, 1.0, tally);
                row.warmup_seconds = std::chrono::duration<double>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count();
            }
            auto const result = tr.run();
            row.k = result.k;
            auto add_phase = [&](char const* name,
                                 size_type cycles,
                                 double seconds,
                                 OpStats const& ops) {
                if (cycles == 0)
                {
                    return;
                }
                BenchPhase ph;
                ph.phase = name;
                ph.cycles = cycles;
                ph.seconds = seconds;
                ph.histories_per_s
                    = seconds > 0 ? double(n) * cycles / seconds : 0;
                ph.ops = ops;
                row.phases.push_back(ph);
            };
            add_phase("inactive",
                      config.inactive,
                      result.seconds_inactive,
                      result.ops_inactive);
            add_phase(
                "active", config.active, result.seconds_active, result.ops_active);
            if (log)
            {
                auto const& act = row.phases.back();
                char buf[200];
                std::snprintf(buf,
                              sizeof(buf),
                              "%-4s n=%-7u active %10.1f histories/s, "
                              "tracking %.1f%% of driver time, k = %.6f\n",
                              to_cstring(s),
                              static_cast<unsigned>(n),
                              act.histories_per_s,
                              100 * share(tracking_seconds(act.ops),
                                          act.ops.total_seconds),
                              result.k_eff.mean);
                *log << buf;
            }
            report.rows.push_back(std::move(row));
        }

        // Informational ordering by active tracking rate
        std::vector<BenchRow const*> rows;
        for (auto const& row : report.rows)
        {
            if (row.histories == n)
            {
                rows.push_back(&row);
            }
        }
        for (auto const* row : rows)
        {
            report.k_identical = report.k_identical && row->k == rows.front()->k;
        }
        std::stable_sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
            return a->phases.back().histories_per_s
                   > b->phases.back().histories_per_s;
        });
        std::string line = "n=" + std::to_string(n) + ": ";
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            line += (i ? " > " : "");
            line += to_cstring(rows[i]->strategy);
        }
        report.ordering.push_back(line);
        if (log)
        {
            *log << "ordering (informational) " << line << '\n';
        }
    }
    if (log)
    {
        *log << "k series identical across strategies: "
             << (report.k_identical ? "yes" : "no") << '\n';
    }
    return report;
}

//---------------------------------------------------------------------------//
/*!
 * One line per (strategy, phase, workload, operation), plus a "tracking"
 * line summing the geometry operations. Shares are fractions of the
 * driver's measured time for that phase.
 */
void write_bench_csv(std::ostream& os, BenchReport const& report)
{
    os << "strategy,phase,n,histories_per_s,op,op_calls,op_seconds,op_share\n";
    for (auto const& row : report.rows)
    {
        for (auto const& ph : row.phases)
        {
            auto line = [&](char const* op, std::uint64_t calls, double sec) {
                char buf[256];
                std::snprintf(buf,
                              sizeof(buf),
                              "%s,%s,%u,%.6g,%s,%llu,%.9g,%.9g\n",
                              to_cstring(row.strategy),
                              ph.phase.c_str(),
                              static_cast<unsigned>(row.histories),
                              ph.histories_per_s,
                              op,
                              static_cast<unsigned long long>(calls),
                              sec,
                              share(sec, ph.ops.total_seconds));
                os << buf;
            };
            for (std::size_t i = 0; i < OpStats::size; ++i)
            {
                line(to_cstring(static_cast<Op>(i)),
                     ph.ops.calls[i],
                     ph.ops.seconds[i]);
            }
            line("tracking", tracking_calls(ph.ops), tracking_seconds(ph.ops));
        }
    }
}

//---------------------------------------------------------------------------//
nlohmann::json to_json(BenchReport const& report)
{
    using nlohmann::json;
    json rows = json::array();
    for (auto const& row : report.rows)
    {
        json phases = json::array();
        for (auto const& ph : row.phases)
        {
            json ops = json::object();
            for (std::size_t i = 0; i < OpStats::size; ++i)
            {
                ops[to_cstring(static_cast<Op>(i))]
                    = {{"calls", ph.ops.calls[i]},
                       {"seconds", ph.ops.seconds[i]},
                       {"share", share(ph.ops.seconds[i], ph.ops.total_seconds)}};
            }
            phases.push_back(
                {{"phase", ph.phase},
                 {"cycles", ph.cycles},
                 {"seconds", ph.seconds},
                 {"histories_per_s", ph.histories_per_s},
                 {"driver_seconds", ph.ops.total_seconds},
                 {"tracking_share",
                  share(tracking_seconds(ph.ops), ph.ops.total_seconds)},
                 {"ops", ops}});
        }
        rows.push_back({{"strategy", to_cstring(row.strategy)},
                        {"n", row.histories},
                        {"warmup_seconds", row.warmup_seconds},
                        {"k", row.k},
                        {"phases", phases}});
    }
    std::vector<std::string> strategies;
    for (Strategy s : report.config.strategies)
    {
        strategies.push_back(to_cstring(s));
    }
    json machine = {{"hardware_threads", std::thread::hardware_concurrency()},
#if defined(__clang__)
                    {"compiler", "clang " __clang_version__},
#elif defined(__GNUC__)
                    {"compiler", "gcc " __VERSION__},
#else
                    {"compiler", "unknown"},
#endif
#ifdef NDEBUG
                    {"optimized", true}
#else
                    {"optimized", false}
#endif
    };
    return {{"model", report.model},
            {"config",
             {{"strategies", strategies},
              {"workloads", report.config.workloads},
              {"inactive", report.config.inactive},
              {"active", report.config.active},
              {"workers", report.config.workers},
              {"driver", to_cstring(report.config.driver)},
              {"workload_unit", "histories per cycle per process"}}},
            {"machine", machine},
            {"rows", rows},
            {"ordering", report.ordering},
            {"k_identical", report.k_identical}};
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
