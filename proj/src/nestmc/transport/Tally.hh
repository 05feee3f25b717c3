//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/transport/Tally.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nestmc/arrays/RectArray.hh"
#include "nestmc/multiverse/GeometryParams.hh"

#include "Material.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Uniform superimposed tally mesh
struct MeshSpec
{
    Aabb box;
    Ijk dims{1, 1, 1};
};

//---------------------------------------------------------------------------//
/*!
 * Collision counts for one cycle.
 *
 * Collisions are counted per (mesh element, group, material) and per
 * (flattened cell, group). Integer counts merge exactly in any order; the
 * collision-estimator flux is formed from them at the end of the cycle.
 */
struct TallyCounts
{
    std::vector<std::uint64_t> mesh;
    std::vector<std::uint64_t> cell;

    void clear();
    TallyCounts& operator+=(TallyCounts const& other);
    friend bool operator==(TallyCounts const&, TallyCounts const&) = default;
};

//---------------------------------------------------------------------------//
//! Finalized flux estimates with relative standard errors
struct TallyResult
{
    Ijk mesh_dims{0, 0, 0};
    size_type num_groups{0};
    std::vector<real_type> mesh_flux;  //!< [element * G + g], per cm^3
    std::vector<real_type> mesh_rel_err;
    std::vector<real_type> cell_flux;  //!< [flat cell * G + g], cm
    std::vector<real_type> cell_rel_err;
    std::vector<bool> cell_is_material;
    real_type element_volume{0};

    friend bool operator==(TallyResult const&, TallyResult const&) = default;
};

//---------------------------------------------------------------------------//
/*!
 * Tally bins and batch statistics over active cycles.
 */
class Tally
{
  public:
    Tally(GeometryParams const& geo,
          std::vector<MaterialData> const& materials,
          std::optional<MeshSpec> mesh);

    bool has_mesh() const { return mesh_.has_value(); }
    size_type num_elements() const;
    size_type num_groups() const { return num_groups_; }

    // Empty counts sized for this tally
    TallyCounts make_counts() const;

    // Score one collision
    void score(TallyCounts& counts,
               Real3 const& pos,
               size_type flat_cell,
               size_type group,
               MaterialId mat) const
    {
        ++counts.cell[flat_cell * num_groups_ + group];
        if (!mesh_)
        {
            return;
        }
        if (auto ijk = rect_find_cell(mesh_grid_, pos))
        {
            ++counts.mesh[(mesh_grid_.index(*ijk) * num_groups_ + group)
                              * num_materials_
                          + mat.get()];
        }
    }

    // Add one active cycle's counts as a batch
    void accumulate(TallyCounts const& counts);

    size_type num_batches() const { return num_batches_; }

    // Flux per history (and per volume for the mesh)
    TallyResult finalize(size_type histories_per_batch) const;

  private:
    std::vector<MaterialData> const* materials_;
    size_type num_groups_;
    size_type num_materials_;
    std::optional<MeshSpec> mesh_;
    RectGrid mesh_grid_;
    std::vector<MaterialId> cell_material_;

    size_type num_batches_{0};
    std::vector<real_type> mesh_sum_;
    std::vector<real_type> mesh_sumsq_;
    std::vector<real_type> cell_sum_;
    std::vector<real_type> cell_sumsq_;
};

//---------------------------------------------------------------------------//
}  // namespace nestmc
