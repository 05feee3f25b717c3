//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Tally.cc
//---------------------------------------------------------------------------//
#include "Tally.hh"

#include <cmath>

namespace nestmc
{
//---------------------------------------------------------------------------//
void TallyCounts::clear()
{
    std::fill(mesh.begin(), mesh.end(), 0);
    std::fill(cell.begin(), cell.end(), 0);
}

TallyCounts& TallyCounts::operator+=(TallyCounts const& other)
{
    NMC_EXPECT(mesh.size() == other.mesh.size()
               && cell.size() == other.cell.size());
    for (std::size_t i = 0; i < mesh.size(); ++i)
    {
        mesh[i] += other.mesh[i];
    }
    for (std::size_t i = 0; i < cell.size(); ++i)
    {
        cell[i] += other.cell[i];
    }
    return *this;
}

//---------------------------------------------------------------------------//
Tally::Tally(GeometryParams const& geo,
             std::vector<MaterialData> const& materials,
             std::optional<MeshSpec> mesh)
    : materials_(&materials)
    , num_groups_(materials.empty() ? 0 : materials.front().num_groups())
    , num_materials_(materials.size())
    , mesh_(std::move(mesh))
{
    NMC_EXPECT(!materials.empty());
    if (mesh_)
    {
        RectGrid::EdgeArray edges;
        for (int ax = 0; ax < 3; ++ax)
        {
            auto const n = mesh_->dims[ax];
            real_type const lo = mesh_->box.lo[ax];
            real_type const hi = mesh_->box.hi[ax];
            NMC_VALIDATE(n > 0 && std::isfinite(lo) && std::isfinite(hi)
                             && hi > lo,
                         ConfigError,
                         << "tally mesh must be finite with positive extents");
            for (size_type i = 0; i <= n; ++i)
            {
                edges[ax].push_back(i == n ? hi : lo + (hi - lo) * i / n);
            }
        }
        mesh_grid_ = RectGrid(std::move(edges));
    }

    cell_material_.resize(geo.num_flat_cells);
    for (size_type u = 0; u < geo.num_universes(); ++u)
    {
        if (geo.types[u] != UType::csg)
        {
            continue;
        }
        auto const& csg = geo.csg_universe(UniverseId(u));
        for (size_type c = 0; c < csg.num_cells(); ++c)
        {
            if (auto m = csg.cell(LocalCellId(c)).material)
            {
                cell_material_[geo.cell_offsets[u] + c] = *m;
            }
        }
    }

    auto const nmesh = this->num_elements() * num_groups_;
    mesh_sum_.assign(nmesh, 0);
    mesh_sumsq_.assign(nmesh, 0);
    cell_sum_.assign(cell_material_.size() * num_groups_, 0);
    cell_sumsq_.assign(cell_sum_.size(), 0);
}

//---------------------------------------------------------------------------//
size_type Tally::num_elements() const
{
    return mesh_ ? mesh_grid_.num_cells() : 0;
}

//---------------------------------------------------------------------------//
TallyCounts Tally::make_counts() const
{
    TallyCounts result;
    result.mesh.assign(this->num_elements() * num_groups_ * num_materials_, 0);
    result.cell.assign(cell_material_.size() * num_groups_, 0);
    return result;
}

//---------------------------------------------------------------------------//
void Tally::accumulate(TallyCounts const& counts)
{
    auto const& mats = *materials_;
    for (size_type e = 0; e < this->num_elements(); ++e)
    {
        for (size_type g = 0; g < num_groups_; ++g)
        {
            real_type flux = 0;
            for (size_type m = 0; m < num_materials_; ++m)
            {
                auto const n = counts.mesh[(e * num_groups_ + g) * num_materials_ + m];
                if (n)
                {
                    flux += real_type(n) / mats[m].sigma_t(g);
                }
            }
            mesh_sum_[e * num_groups_ + g] += flux;
            mesh_sumsq_[e * num_groups_ + g] += flux * flux;
        }
    }
    for (size_type c = 0; c < cell_material_.size(); ++c)
    {
        for (size_type g = 0; g < num_groups_; ++g)
        {
            auto const n = counts.cell[c * num_groups_ + g];
            real_type const flux
                = n ? real_type(n) / mats[cell_material_[c].get()].sigma_t(g)
                    : 0;
            cell_sum_[c * num_groups_ + g] += flux;
            cell_sumsq_[c * num_groups_ + g] += flux * flux;
        }
    }
    ++num_batches_;
}

//---------------------------------------------------------------------------//
TallyResult Tally::finalize(size_type histories_per_batch) const
{
    TallyResult result;
    result.num_groups = num_groups_;
    auto stats = [this, histories_per_batch](std::vector<real_type> const& sum,
                                             std::vector<real_type> const& sumsq,
                                             real_type norm,
                                             std::vector<real_type>& mean_out,
                                             std::vector<real_type>& err_out) {
        real_type const nb = num_batches_;
        mean_out.assign(sum.size(), 0);
        err_out.assign(sum.size(), 0);
        if (num_batches_ == 0)
        {
            return;
        }
        for (std::size_t i = 0; i < sum.size(); ++i)
        {
            real_type const mean = sum[i] / nb;
            mean_out[i] = mean / (real_type(histories_per_batch) * norm);
            if (num_batches_ > 1 && mean > 0)
            {
                real_type const var
                    = std::max<real_type>(0, (sumsq[i] / nb - mean * mean))
                      / (nb - 1);
                err_out[i] = std::sqrt(var) / mean;
            }
        }
    };
    if (mesh_)
    {
        result.mesh_dims = mesh_->dims;
        real_type vol = 1;
        for (int ax = 0; ax < 3; ++ax)
        {
            vol *= (mesh_->box.hi[ax] - mesh_->box.lo[ax]) / mesh_->dims[ax];
        }
        result.element_volume = vol;
        stats(mesh_sum_, mesh_sumsq_, vol, result.mesh_flux, result.mesh_rel_err);
    }
    stats(cell_sum_, cell_sumsq_, 1, result.cell_flux, result.cell_rel_err);
    for (auto m : cell_material_)
    {
        result.cell_is_material.push_back(static_cast<bool>(m));
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
