//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/bih/BihTree.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nestmc/base/Assert.hh"
#include "nestmc/base/Types.hh"

#include "Aabb.hh"

namespace nestmc
{
//---------------------------------------------------------------------------//
//! Construction parameters for the surface-area-heuristic partitioner
struct BihParams
{
    real_type traversal_cost{1.0};  //!< C_t
    real_type intersect_cost{1.0};  //!< C_i
    size_type max_leaf{1};  //!< Stop splitting at or below this many cells
    //! Candidate split fractions of the parent extent, per axis
    std::vector<real_type> candidates{0.25, 0.5, 0.75};
};

//---------------------------------------------------------------------------//
/*!
 * Inner node with two possibly overlapping clip planes.
 *
 * The left child covers [-inf, left_max] and the right child
 * [right_min, +inf] along \c axis.
 */
struct BihInnerNode
{
    Axis axis{Axis::x};
    real_type left_max{};
    real_type right_min{};
    size_type left{};
    size_type right{};
};

//! Leaf: half-open range into the tree's flat cell array
struct BihLeafNode
{
    size_type begin{};
    size_type end{};
};

using BihNode = std::variant<BihInnerNode, BihLeafNode>;

//! Input to the builder
struct BihBox
{
    LocalCellId cell;
    Aabb bbox;
};

//---------------------------------------------------------------------------//
/*!
 * Bounding interval hierarchy over cell bounding boxes.
 *
 * Nodes are stored in a flat array (root at index 0, children after their
 * parents in depth-first order) and every cell lives in exactly one leaf.
 * Leaf cells are sorted by ID and traversal visits the left child first, so
 * queries are deterministic.
 */
class BihTree
{
  public:
    BihTree() = default;
    BihTree(std::vector<BihNode> nodes,
            std::vector<LocalCellId> leaf_cells,
            size_type num_cells);

    //! Depth-first search for the first cell accepted by the predicate
    template<class Pred>
    std::optional<LocalCellId> find(Real3 const& pos, Pred&& accept) const
    {
        NMC_ASSERT(!nodes_.empty());
        return this->find_impl(0, pos, accept);
    }

    std::span<BihNode const> nodes() const { return nodes_; }
    std::span<LocalCellId const> leaf_cells() const { return leaf_cells_; }
    size_type num_cells() const { return num_cells_; }

    // Cells stored in a leaf
    std::span<LocalCellId const> leaf(BihLeafNode const& node) const
    {
        return {leaf_cells_.data() + node.begin, node.end - node.begin};
    }

    // Text dump: one line per node in index order
    std::string dump() const;

  private:
    std::vector<BihNode> nodes_;
    std::vector<LocalCellId> leaf_cells_;
    size_type num_cells_{0};

    template<class Pred>
    std::optional<LocalCellId>
    find_impl(size_type idx, Real3 const& pos, Pred& accept) const
    {
        BihNode const& node = nodes_[idx];
        if (auto const* inner = std::get_if<BihInnerNode>(&node))
        {
            // Half-spaces may overlap, so both edges are tested
            real_type const x = pos[to_int(inner->axis)];
            if (x <= inner->left_max)
            {
                if (auto found = this->find_impl(inner->left, pos, accept))
                {
                    return found;
                }
            }
            if (x >= inner->right_min)
            {
                return this->find_impl(inner->right, pos, accept);
            }
            return std::nullopt;
        }
        for (LocalCellId cell : this->leaf(std::get<BihLeafNode>(node)))
        {
            if (accept(cell))
            {
                return cell;
            }
        }
        return std::nullopt;
    }
};

//---------------------------------------------------------------------------//
// Build a tree from cell bounding boxes
BihTree build_bih(std::span<BihBox const> boxes, BihParams const& params = {});

// Free-function alias for BihTree::find
template<class Pred>
std::optional<LocalCellId>
bih_find(BihTree const& tree, Real3 const& pos, Pred&& accept)
{
    return tree.find(pos, std::forward<Pred>(accept));
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
