//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/bih/BihTree.cc
//---------------------------------------------------------------------------//
#include "BihTree.hh"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace nestmc
{
namespace
{
//---------------------------------------------------------------------------//
struct Partition
{
    Axis axis{Axis::x};
    real_type cost{};
    std::vector<size_type> left;
    std::vector<size_type> right;
};

//---------------------------------------------------------------------------//
class BihBuilder
{
  public:
    BihBuilder(std::span<BihBox const> boxes, BihParams const& params)
        : boxes_{boxes}, params_{params}
    {
        centers_.reserve(boxes.size());
        for (auto const& b : boxes)
        {
            centers_.push_back(b.bbox.center());
        }
    }

    size_type build(std::vector<size_type> indices)
    {
        NMC_ASSERT(!indices.empty());
        auto const node_idx = static_cast<size_type>(nodes_.size());
        nodes_.emplace_back();

        auto part = this->choose_partition(indices);
        if (!part)
        {
            std::sort(indices.begin(), indices.end(), [this](auto a, auto b) {
                return boxes_[a].cell < boxes_[b].cell;
            });
            BihLeafNode leaf;
            leaf.begin = static_cast<size_type>(leaf_cells_.size());
            for (auto i : indices)
            {
                leaf_cells_.push_back(boxes_[i].cell);
            }
            leaf.end = static_cast<size_type>(leaf_cells_.size());
            nodes_[node_idx] = leaf;
            return node_idx;
        }

        int const ax = to_int(part->axis);
        BihInnerNode inner;
        inner.axis = part->axis;
        inner.left_max = -std::numeric_limits<real_type>::infinity();
        inner.right_min = std::numeric_limits<real_type>::infinity();
        for (auto i : part->left)
        {
            inner.left_max = std::max(inner.left_max, boxes_[i].bbox.hi[ax]);
        }
        for (auto i : part->right)
        {
            inner.right_min = std::min(inner.right_min, boxes_[i].bbox.lo[ax]);
        }
        inner.left = this->build(std::move(part->left));
        inner.right = this->build(std::move(part->right));
        nodes_[node_idx] = inner;
        return node_idx;
    }

    std::vector<BihNode> nodes() && { return std::move(nodes_); }
    std::vector<LocalCellId> leaf_cells() && { return std::move(leaf_cells_); }

  private:
    std::span<BihBox const> boxes_;
    BihParams const& params_;
    std::vector<Real3> centers_;
    std::vector<BihNode> nodes_;
    std::vector<LocalCellId> leaf_cells_;

    Aabb bounds(std::vector<size_type> const& indices) const
    {
        Aabb result = Aabb::null();
        for (auto i : indices)
        {
            result = calc_union(result, boxes_[i].bbox);
        }
        return result;
    }

    // Return a partition, or nothing if the node should be a leaf
    std::optional<Partition>
    choose_partition(std::vector<size_type> const& indices) const
    {
        auto const n = indices.size();
        if (n <= params_.max_leaf)
        {
            return std::nullopt;
        }

        Aabb const parent = this->bounds(indices);
        real_type const parent_area = parent.surface_area();
        real_type const leaf_cost = n * params_.intersect_cost;

        std::optional<Partition> best;
        for (int ax = 0; ax < 3; ++ax)
        {
            real_type const width = parent.hi[ax] - parent.lo[ax];
            for (real_type frac : params_.candidates)
            {
                real_type const split = parent.lo[ax] + frac * width;
                Partition p;
                p.axis = static_cast<Axis>(ax);
                for (auto i : indices)
                {
                    (centers_[i][ax] < split ? p.left : p.right).push_back(i);
                }
                if (p.left.empty() || p.right.empty())
                {
                    continue;
                }
                real_type const left_frac = this->bounds(p.left).surface_area()
                                            / parent_area;
                real_type const right_frac
                    = this->bounds(p.right).surface_area() / parent_area;
                p.cost = params_.traversal_cost
                         + params_.intersect_cost
                               * (left_frac * p.left.size()
                                  + right_frac * p.right.size());
                if (!best || p.cost < best->cost)
                {
                    best = std::move(p);
                }
            }
        }

        if (best)
        {
            if (best->cost >= leaf_cost)
            {
                return std::nullopt;
            }
            return best;
        }

        // Degenerate: every candidate puts all centers on one side
        int longest = 0;
        for (int ax = 1; ax < 3; ++ax)
        {
            if (parent.hi[ax] - parent.lo[ax]
                > parent.hi[longest] - parent.lo[longest])
            {
                longest = ax;
            }
        }
        std::vector<size_type> sorted = indices;
        std::sort(sorted.begin(), sorted.end(), [&](auto a, auto b) {
            if (centers_[a][longest] != centers_[b][longest])
            {
                return centers_[a][longest] < centers_[b][longest];
            }
            return boxes_[a].cell < boxes_[b].cell;
        });
        Partition p;
        p.axis = static_cast<Axis>(longest);
        auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(n / 2);
        p.left.assign(sorted.begin(), mid);
        p.right.assign(mid, sorted.end());
        return p;
    }
};

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
BihTree::BihTree(std::vector<BihNode> nodes,
                 std::vector<LocalCellId> leaf_cells,
                 size_type num_cells)
    : nodes_{std::move(nodes)}
    , leaf_cells_{std::move(leaf_cells)}
    , num_cells_{num_cells}
{
    NMC_EXPECT(!nodes_.empty());
}

//---------------------------------------------------------------------------//
std::string BihTree::dump() const
{
    std::ostringstream os;
    os.precision(17);
    os << "bih nodes=" << nodes_.size() << " cells=" << num_cells_ << '\n';
    for (std::size_t i = 0; i < nodes_.size(); ++i)
    {
        os << i;
        if (auto const* inner = std::get_if<BihInnerNode>(&nodes_[i]))
        {
            os << " inner axis=" << to_char(inner->axis)
               << " left_max=" << inner->left_max
               << " right_min=" << inner->right_min
               << " left=" << inner->left << " right=" << inner->right;
        }
        else
        {
            os << " leaf cells=";
            char const* sep = "";
            for (auto c : this->leaf(std::get<BihLeafNode>(nodes_[i])))
            {
                os << sep << c.get();
                sep = ",";
            }
        }
        os << '\n';
    }
    return os.str();
}

//---------------------------------------------------------------------------//
/*!
 * Build a BIH over cell bounding boxes.
 *
 * At each node, three candidate planes per axis are scored with the surface
 * area heuristic; boxes are assigned to a side by their centers and the clip
 * planes are then moved to enclose every box on each side.
 */
BihTree build_bih(std::span<BihBox const> boxes, BihParams const& params)
{
    NMC_EXPECT(!boxes.empty());
    NMC_EXPECT(params.max_leaf >= 1);
    for (auto const& b : boxes)
    {
        NMC_EXPECT(b.bbox.finite() && !b.bbox.empty());
    }

    BihBuilder builder(boxes, params);
    std::vector<size_type> indices(boxes.size());
    std::iota(indices.begin(), indices.end(), size_type{0});
    builder.build(std::move(indices));
    return BihTree{std::move(builder).nodes(),
                   std::move(builder).leaf_cells(),
                   static_cast<size_type>(boxes.size())};
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
