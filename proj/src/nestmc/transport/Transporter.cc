//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Transporter.cc
//---------------------------------------------------------------------------//
#include "Transporter.hh"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "Kernels.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
Transporter::Transporter(GeometryModel geometry,
                         std::vector<MaterialData> materials,
                         TransportConfig config)
    : geometry_(std::move(geometry))
    , materials_(std::move(materials))
    , config_(std::move(config))
{
    NMC_VALIDATE(!materials_.empty(), ConfigError, << "no materials defined");
    auto const ng = materials_.front().num_groups();
    for (auto const& m : materials_)
    {
        NMC_VALIDATE(m.num_groups() == ng,
                     ConfigError,
                     << "material '" << m.name() << "' has " << m.num_groups()
                     << " groups but '" << materials_.front().name()
                     << "' has " << ng);
    }
    auto const& geo = geometry_.params();
    for (auto const& csg : geo.csg)
    {
        for (auto const& cell : csg.cells())
        {
            NMC_VALIDATE(!cell.material
                             || cell.material->get() < materials_.size(),
                         ConfigError,
                         << "cell material ID " << cell.material->get()
                         << " is not defined");
        }
    }
    NMC_VALIDATE(config_.histories >= 1,
                 ConfigError,
                 << "at least one history per cycle is required");
    NMC_VALIDATE(config_.active >= 1,
                 ConfigError,
                 << "at least one active cycle is required");
    NMC_VALIDATE(config_.workers >= 1,
                 ConfigError,
                 << "at least one worker is required");

    source_box_ = config_.source_box ? *config_.source_box : geo.root_bbox;
    NMC_VALIDATE(source_box_.finite() && !source_box_.empty(),
                 ConfigError,
                 << "source box must be finite and non-empty");
}

//---------------------------------------------------------------------------//
Tally Transporter::make_tally() const
{
    return Tally(geometry_.params(), materials_, config_.mesh);
}

//---------------------------------------------------------------------------//
CycleResult Transporter::run_cycle(FissionBank const* bank_in,
                                   std::uint32_t cycle,
                                   real_type k_prev,
                                   Tally const& tally) const
{
    NMC_EXPECT(k_prev > 0);
    if (bank_in)
    {
        NMC_VALIDATE(!bank_in->empty(),
                     TransportError,
                     << "fission bank is empty at the start of cycle "
                     << cycle << ": the fission source collapsed");
    }
    using clock = std::chrono::steady_clock;
    auto const t0 = clock::now();

    CycleContext ctx;
    ctx.geo = &geometry_.params();
    ctx.materials = &materials_;
    ctx.tally = &tally;
    ctx.config = &config_;
    ctx.source_box = source_box_;
    ctx.cycle = cycle;
    ctx.k_prev = k_prev;
    ctx.bank_in = bank_in;

    size_type const n = config_.histories;
    size_type const nw = std::min(config_.workers, n);
    std::vector<WorkerOutput> outputs(nw);
    for (size_type w = 0; w < nw; ++w)
    {
        auto& out = outputs[w];
        out.begin = size_type(std::uint64_t(n) * w / nw);
        size_type const end = size_type(std::uint64_t(n) * (w + 1) / nw);
        out.yields.assign(end - out.begin, 0);
        out.counts = tally.make_counts();
    }

    auto work = [this, &ctx, &outputs, n, nw](size_type w) {
        auto& out = outputs[w];
        size_type const end = size_type(std::uint64_t(n) * (w + 1) / nw);
        geometry_.visit([&](auto const& nav) {
            if (config_.driver == Driver::history)
            {
                auto const t_start = std::chrono::steady_clock::now();
                for (size_type h = out.begin; h < end; ++h)
                {
                    run_history(nav, ctx, h, out);
                }
                if (config_.time_ops)
                {
                    out.ops.total_seconds += std::chrono::duration<double>(
                                                 std::chrono::steady_clock::now()
                                                 - t_start)
                                                 .count();
                }
            }
            else
            {
                run_event_range(nav, ctx, out.begin, end, out);
            }
        });
    };

    if (nw == 1)
    {
        work(0);
    }
    else
    {
        std::vector<std::exception_ptr> errors(nw);
        std::vector<std::thread> threads;
        for (size_type w = 0; w < nw; ++w)
        {
            threads.emplace_back([&, w] {
                try
                {
                    work(w);
                }
                catch (...)
                {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads)
        {
            t.join();
        }
        for (auto& e : errors)
        {
            if (e)
            {
                std::rethrow_exception(e);
            }
        }
    }

    // Deterministic merge in worker (history) order
    CycleResult result;
    result.counts = tally.make_counts();
    result.yields.reserve(n);
    for (auto& out : outputs)
    {
        result.counts += out.counts;
        result.accounting += out.accounting;
        result.ops += out.ops;
        std::stable_sort(out.bank.begin(),
                         out.bank.end(),
                         [](FissionSite const& a, FissionSite const& b) {
                             return a.parent < b.parent;
                         });
        result.bank.insert(result.bank.end(), out.bank.begin(), out.bank.end());
        result.yields.insert(
            result.yields.end(), out.yields.begin(), out.yields.end());
    }
    real_type total = 0;
    for (real_type y : result.yields)
    {
        total += y;
    }
    result.k = total / real_type(n);
    result.seconds
        = std::chrono::duration<double>(clock::now() - t0).count();
    return result;
}

//---------------------------------------------------------------------------//
std::vector<TraceEvent> Transporter::trace_history(FissionBank const* bank_in,
                                                   std::uint32_t cycle,
                                                   real_type k_prev,
                                                   size_type history) const
{
    Tally const tally = this->make_tally();
    CycleContext ctx;
    ctx.geo = &geometry_.params();
    ctx.materials = &materials_;
    ctx.tally = &tally;
    ctx.config = &config_;
    ctx.source_box = source_box_;
    ctx.cycle = cycle;
    ctx.k_prev = k_prev;
    ctx.bank_in = bank_in;

    std::vector<TraceEvent> events;
    WorkerOutput out;
    out.begin = history;
    out.yields.assign(1, 0);
    out.counts = tally.make_counts();
    out.trace = &events;
    geometry_.visit(
        [&](auto const& nav) { run_history(nav, ctx, history, out); });
    return events;
}

//---------------------------------------------------------------------------//
real_type Transporter::entropy(FissionBank const& bank) const
{
    constexpr size_type nb = 8;
    std::vector<size_type> counts(nb * nb * nb, 0);
    for (auto const& site : bank)
    {
        size_type idx[3];
        for (int ax = 0; ax < 3; ++ax)
        {
            real_type const lo = source_box_.lo[ax];
            real_type const hi = source_box_.hi[ax];
            real_type const f = (site.pos[ax] - lo) / (hi - lo);
            idx[ax] = static_cast<size_type>(
                std::clamp<real_type>(std::floor(f * nb), 0, nb - 1));
        }
        ++counts[idx[0] + nb * (idx[1] + nb * idx[2])];
    }
    return shannon_entropy(counts);
}

//---------------------------------------------------------------------------//
PowerIterationResult Transporter::run(CycleCallback const& on_cycle) const
{
    PowerIterationResult result;
    result.inactive = config_.inactive;
    result.active = config_.active;
    result.histories = config_.histories;

    Tally tally = this->make_tally();
    FissionBank bank;
    real_type k_prev = 1;
    size_type const total = config_.inactive + config_.active;
    std::vector<real_type> active_k;
    for (size_type c = 0; c < total; ++c)
    {
        CycleResult cr = this->run_cycle(
            c == 0 ? nullptr : &bank, static_cast<std::uint32_t>(c), k_prev, tally);
        bool const is_active = c >= config_.inactive;
        result.k.push_back(cr.k);
        result.entropy.push_back(this->entropy(cr.bank));
        result.accounting += cr.accounting;
        if (is_active)
        {
            tally.accumulate(cr.counts);
            active_k.push_back(cr.k);
            result.ops_active += cr.ops;
            result.seconds_active += cr.seconds;
        }
        else
        {
            result.ops_inactive += cr.ops;
            result.seconds_inactive += cr.seconds;
        }
        if (on_cycle)
        {
            on_cycle(c, cr);
        }
        NMC_VALIDATE(!cr.bank.empty() || c + 1 == total,
                     TransportError,
                     << "fission bank is empty after cycle " << c
                     << " (k = " << cr.k
                     << "): the fission source collapsed");
        if (cr.k > 0)
        {
            k_prev = cr.k;
        }
        bank = std::move(cr.bank);
    }
    result.final_bank = std::move(bank);
    result.k_eff = mean_std_err(active_k);
    result.tallies = tally.finalize(config_.histories);

    auto const& acct = result.accounting;
    real_type const lost_frac
        = acct.histories ? real_type(acct.lost) / acct.histories : 0;
    NMC_VALIDATE(lost_frac <= config_.lost_tolerance,
                 TransportError,
                 << acct.lost << " of " << acct.histories
                 << " histories were lost (fraction " << lost_frac
                 << " exceeds " << config_.lost_tolerance << ")");
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
