//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Kernels.hh
//---------------------------------------------------------------------------//
#pragma once

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "nestmc/multiverse/GeometryParams.hh"

#include "Material.hh"
#include "TransportTypes.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Data constant over one cycle
struct CycleContext
{
    GeometryParams const* geo{nullptr};
    std::vector<MaterialData> const* materials{nullptr};
    Tally const* tally{nullptr};
    TransportConfig const* config{nullptr};
    Aabb source_box;
    std::uint32_t cycle{0};
    real_type k_prev{1};
    FissionBank const* bank_in{nullptr};  //!< Null: sample the initial guess
};

//! Private results of one worker
struct WorkerOutput
{
    size_type begin{0};
    TallyCounts counts;
    FissionBank bank;
    std::vector<real_type> yields;
    Accounting accounting;
    OpStats ops;
    std::vector<TraceEvent>* trace{nullptr};
};

//! Transport state of one history
struct Particle
{
    enum class Next : unsigned char
    {
        cross,
        collide
    };

    GeoState geo;
    RngStream rng;
    size_type history{0};
    size_type group{0};
    MaterialId material;
    real_type sigma_t{0};
    real_type tau{0};  //!< Remaining optical depth to the next collision
    real_type collision_distance{0};
    real_type yield{0};
    size_type events{0};
    Next next{Next::collide};
    bool alive{false};
    bool scattered{false};
    Real3 new_dir{0, 0, 1};
};

//---------------------------------------------------------------------------//
// HELPERS
//---------------------------------------------------------------------------//
inline Real3 sample_isotropic(RngStream& rng)
{
    real_type const mu = 2 * rng() - 1;
    real_type const phi = 2 * std::numbers::pi_v<real_type> * rng();
    real_type const s = std::sqrt(std::max<real_type>(0, 1 - mu * mu));
    return {s * std::cos(phi), s * std::sin(phi), mu};
}

inline real_type sample_optical_depth(RngStream& rng)
{
    return -std::log(rng());
}

inline void count(OpStats& ops, Op op, std::uint64_t n = 1)
{
    ops.calls[static_cast<std::size_t>(op)] += n;
}

template<class Nav>
void update_material(Nav const& nav, CycleContext const& ctx, Particle& p)
{
    p.material = nav.material(p.geo);
    p.sigma_t = (*ctx.materials)[p.material.get()].sigma_t(p.group);
}

inline void trace(WorkerOutput& out,
                  TraceEvent::Kind kind,
                  Particle const& p,
                  GeometryParams const& geo,
                  real_type distance = 0)
{
    if (!out.trace)
    {
        return;
    }
    TraceEvent ev;
    ev.kind = kind;
    ev.pos = p.geo.pos;
    ev.distance = distance;
    if (p.geo.on_surface)
    {
        ev.level = p.geo.on_surface->level;
        ev.surface = p.geo.on_surface->surface.get();
    }
    if (p.geo.num_levels > 0)
    {
        auto const& lev = p.geo.bottom();
        ev.flat_cell = geo.flat_cell(lev.universe, lev.cell);
    }
    out.trace->push_back(ev);
}

inline void kill_lost(Particle& p, WorkerOutput& out, GeometryParams const& geo)
{
    p.alive = false;
    ++out.accounting.lost;
    trace(out, TraceEvent::Kind::lost, p, geo);
}

//---------------------------------------------------------------------------//
// KERNELS
//---------------------------------------------------------------------------//
/*!
 * Start a history: sample a source site, locate it, and sample its group,
 * direction, and optical depth to first collision.
 */
template<class Nav>
void birth(Nav const& nav,
           CycleContext const& ctx,
           size_type history,
           Particle& p,
           WorkerOutput& out)
{
    p = Particle{};
    p.history = history;
    p.rng = RngStream(ctx.config->seed, ctx.cycle, history);
    p.alive = true;
    ++out.accounting.histories;
    count(out.ops, Op::find_cell);
    auto const& mats = *ctx.materials;

    if (!ctx.bank_in)
    {
        constexpr size_type max_attempts = 1000000;
        for (size_type attempt = 0;; ++attempt)
        {
            NMC_VALIDATE(attempt < max_attempts,
                         ConfigError,
                         << "no fissile material found in the source box "
                            "after "
                         << max_attempts << " attempts");
            Real3 pos;
            for (int ax = 0; ax < 3; ++ax)
            {
                real_type const lo = ctx.source_box.lo[ax];
                real_type const hi = ctx.source_box.hi[ax];
                pos[ax] = lo + (hi - lo) * p.rng();
            }
            if (nav.initialize(p.geo, pos, Real3{0, 0, 1}) == TrackStatus::ok
                && mats[nav.material(p.geo).get()].fissile())
            {
                break;
            }
        }
    }
    else
    {
        auto const& bank = *ctx.bank_in;
        auto idx = static_cast<size_type>(p.rng() * bank.size());
        idx = std::min<size_type>(idx, bank.size() - 1);
        if (nav.initialize(p.geo, bank[idx].pos, Real3{0, 0, 1})
            != TrackStatus::ok)
        {
            kill_lost(p, out, *ctx.geo);
            return;
        }
    }

    MaterialData const& mat = mats[nav.material(p.geo).get()];
    p.group = mat.sample_chi(p.rng());
    nav.change_direction(p.geo, sample_isotropic(p.rng));
    p.tau = sample_optical_depth(p.rng);
    update_material(nav, ctx, p);
    trace(out, TraceEvent::Kind::birth, p, *ctx.geo);
}

//---------------------------------------------------------------------------//
//! Find the next surface and decide between crossing and colliding
template<class Nav>
bool find_step(Nav const& nav,
               CycleContext const& ctx,
               Particle& p,
               WorkerOutput& out)
{
    count(out.ops, Op::distance_to_surface);
    if (++p.events > ctx.config->max_events || !nav.find_next_step(p.geo))
    {
        kill_lost(p, out, *ctx.geo);
        return false;
    }
    p.collision_distance = p.sigma_t > 0
                               ? p.tau / p.sigma_t
                               : std::numeric_limits<real_type>::infinity();
    p.next = p.geo.next_distance < p.collision_distance ? Particle::Next::cross
                                                        : Particle::Next::collide;
    return true;
}

//---------------------------------------------------------------------------//
template<class Nav>
void move_to_collision(Nav const& nav, Particle& p, WorkerOutput& out)
{
    count(out.ops, Op::move_within_cell);
    nav.move_within_cell(p.geo, p.collision_distance);
}

//---------------------------------------------------------------------------//
//! Move to and cross the next surface, spending optical depth
template<class Nav>
void cross(Nav const& nav, CycleContext const& ctx, Particle& p, WorkerOutput& out)
{
    count(out.ops, Op::cross_surface);
    real_type const d = p.geo.next_distance;
    nav.move_to_surface(p.geo);
    p.tau -= p.sigma_t * d;
    ++out.accounting.crossings;
    switch (nav.cross_surface(p.geo))
    {
        case TrackStatus::ok:
            update_material(nav, ctx, p);
            trace(out, TraceEvent::Kind::cross, p, *ctx.geo, d);
            break;
        case TrackStatus::leaked:
            p.alive = false;
            ++out.accounting.leaked;
            trace(out, TraceEvent::Kind::leak, p, *ctx.geo, d);
            break;
        case TrackStatus::lost:
            kill_lost(p, out, *ctx.geo);
            break;
    }
}

//---------------------------------------------------------------------------//
/*!
 * Score and sample a collision.
 *
 * A scatter leaves the new direction in \c new_dir for a later direction
 * change; fission banks sites and ends the history, as does capture.
 */
inline void
collide(CycleContext const& ctx, Particle& p, WorkerOutput& out)
{
    count(out.ops, Op::collide);
    auto const& geo = *ctx.geo;
    MaterialData const& mat = (*ctx.materials)[p.material.get()];
    auto const& lev = p.geo.bottom();
    ctx.tally->score(out.counts,
                     p.geo.pos,
                     geo.flat_cell(lev.universe, lev.cell),
                     p.group,
                     p.material);
    ++out.accounting.collisions;
    trace(out, TraceEvent::Kind::collide, p, geo, p.collision_distance);

    switch (mat.sample_reaction(p.group, p.rng()))
    {
        case MaterialData::Reaction::scatter:
            p.group = mat.sample_scatter_group(p.group, p.rng());
            p.new_dir = sample_isotropic(p.rng);
            p.tau = sample_optical_depth(p.rng);
            p.sigma_t = mat.sigma_t(p.group);
            p.scattered = true;
            break;
        case MaterialData::Reaction::fission: {
            real_type const yield = mat.fission_yield(p.group);
            p.yield += yield;
            auto const sites
                = static_cast<size_type>(std::floor(yield / ctx.k_prev + p.rng()));
            for (size_type i = 0; i < sites; ++i)
            {
                out.bank.push_back({p.geo.pos, p.history});
            }
            p.alive = false;
            ++out.accounting.fission;
            break;
        }
        case MaterialData::Reaction::capture:
            p.alive = false;
            ++out.accounting.absorbed;
            break;
    }
}

//---------------------------------------------------------------------------//
template<class Nav>
void change_direction(Nav const& nav, Particle& p, WorkerOutput& out)
{
    count(out.ops, Op::change_direction);
    nav.change_direction(p.geo, p.new_dir);
    p.scattered = false;
}

//---------------------------------------------------------------------------//
// DRIVERS
//---------------------------------------------------------------------------//
/*!
 * Transport one history from birth to termination.
 */
template<class Nav>
void run_history(Nav const& nav,
                 CycleContext const& ctx,
                 size_type history,
                 WorkerOutput& out)
{
    Particle p;
    birth(nav, ctx, history, p, out);
    while (p.alive)
    {
        if (!find_step(nav, ctx, p, out))
        {
            break;
        }
        if (p.next == Particle::Next::cross)
        {
            cross(nav, ctx, p, out);
            continue;
        }
        move_to_collision(nav, p, out);
        collide(ctx, p, out);
        if (p.alive && p.scattered)
        {
            change_direction(nav, p, out);
        }
    }
    out.yields[history - out.begin] = p.yield;
}

//---------------------------------------------------------------------------//
/*!
 * Transport a range of histories one operation at a time.
 *
 * Each pass applies a single operation to the histories whose pending event
 * needs it; the active list is compacted after every round. Per-history
 * random draws happen in the same order as in \c run_history.
 */
template<class Nav>
void run_event_range(Nav const& nav,
                     CycleContext const& ctx,
                     size_type begin,
                     size_type end,
                     WorkerOutput& out)
{
    using clock = std::chrono::steady_clock;
    bool const timed = ctx.config->time_ops;
    auto const t_start = clock::now();
    auto time_pass = [&](Op op, auto&& pass) {
        if (!timed)
        {
            pass();
            return;
        }
        auto const t0 = clock::now();
        pass();
        out.ops.seconds[static_cast<std::size_t>(op)]
            += std::chrono::duration<double>(clock::now() - t0).count();
    };

    std::vector<Particle> particles(end - begin);
    std::vector<size_type> active;
    std::vector<size_type> to_cross;
    std::vector<size_type> to_collide;
    std::vector<size_type> to_turn;

    time_pass(Op::find_cell, [&] {
        for (size_type i = 0; i < particles.size(); ++i)
        {
            birth(nav, ctx, begin + i, particles[i], out);
            if (particles[i].alive)
            {
                active.push_back(i);
            }
        }
    });

    while (!active.empty())
    {
        to_cross.clear();
        to_collide.clear();
        to_turn.clear();
        time_pass(Op::distance_to_surface, [&] {
            for (auto i : active)
            {
                Particle& p = particles[i];
                if (find_step(nav, ctx, p, out))
                {
                    (p.next == Particle::Next::cross ? to_cross : to_collide)
                        .push_back(i);
                }
            }
        });
        time_pass(Op::move_within_cell, [&] {
            for (auto i : to_collide)
            {
                move_to_collision(nav, particles[i], out);
            }
        });
        time_pass(Op::cross_surface, [&] {
            for (auto i : to_cross)
            {
                cross(nav, ctx, particles[i], out);
            }
        });
        time_pass(Op::collide, [&] {
            for (auto i : to_collide)
            {
                collide(ctx, particles[i], out);
                if (particles[i].alive && particles[i].scattered)
                {
                    to_turn.push_back(i);
                }
            }
        });
        time_pass(Op::change_direction, [&] {
            for (auto i : to_turn)
            {
                change_direction(nav, particles[i], out);
            }
        });
        std::erase_if(active, [&](size_type i) { return !particles[i].alive; });
    }

    for (size_type i = 0; i < particles.size(); ++i)
    {
        out.yields[begin + i - out.begin] = particles[i].yield;
    }
    if (timed)
    {
        out.ops.total_seconds
            += std::chrono::duration<double>(clock::now() - t_start).count();
    }
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
