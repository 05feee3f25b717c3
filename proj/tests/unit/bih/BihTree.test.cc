//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tests/unit/bih/BihTree.test.cc
//---------------------------------------------------------------------------//
#include "nestmc/bih/BihTree.hh"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

namespace nestmc
{
namespace test
{
namespace
{
std::vector<BihBox> boxes_from(std::vector<Aabb> const& bb)
{
    std::vector<BihBox> result;
    for (std::size_t i = 0; i < bb.size(); ++i)
    {
        result.push_back({LocalCellId(i), bb[i]});
    }
    return result;
}

std::vector<Aabb> golden_boxes()
{
    return {{{0, 0, 0}, {1, 1, 1}},
            {{2, 0, 0}, {3, 1, 1}},
            {{0, 2, 0}, {1, 3, 1}},
            {{1.7, 1.6, 0}, {2.9, 3, 1}}};
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path);
    EXPECT_TRUE(in) << "missing " << path;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Visit every leaf cell the query reaches
std::vector<size_type> visited(BihTree const& tree, Real3 const& pos)
{
    std::vector<size_type> result;
    tree.find(pos, [&](LocalCellId c) {
        result.push_back(c.get());
        return false;
    });
    return result;
}

}  // namespace

//---------------------------------------------------------------------------//
TEST(BihTreeTest, single_box_is_leaf)
{
    auto boxes = boxes_from({{{0, 0, 0}, {1, 1, 1}}});
    auto tree = build_bih(boxes);
    ASSERT_EQ(1, tree.nodes().size());
    EXPECT_TRUE(std::holds_alternative<BihLeafNode>(tree.nodes()[0]));
    EXPECT_EQ(LocalCellId(0), tree.find({0.5, 0.5, 0.5}, [](auto) { return true; }));
}

TEST(BihTreeTest, disjoint_pair_splits_x)
{
    auto boxes = boxes_from({{{0, 0, 0}, {1, 1, 1}}, {{2, 0, 0}, {3, 1, 1}}});
    auto tree = build_bih(boxes);
    ASSERT_EQ(3, tree.nodes().size());
    auto const* inner = std::get_if<BihInnerNode>(&tree.nodes()[0]);
    ASSERT_TRUE(inner);
    EXPECT_EQ(Axis::x, inner->axis);
    EXPECT_EQ(1, inner->left_max);
    EXPECT_EQ(2, inner->right_min);
    EXPECT_EQ(std::vector<size_type>{}, visited(tree, {1.5, 0.5, 0.5}));
    EXPECT_EQ(std::vector<size_type>{0}, visited(tree, {0.5, 0.5, 0.5}));
    EXPECT_EQ(std::vector<size_type>{1}, visited(tree, {2.5, 0.5, 0.5}));
}

TEST(BihTreeTest, identical_boxes_median_split)
{
    Aabb const b{{0, 0, 0}, {1, 2, 3}};
    auto boxes = boxes_from({b, b, b});
    auto tree = build_bih(boxes);
    // Degenerate: median split on the longest (z) axis
    auto const* inner = std::get_if<BihInnerNode>(&tree.nodes()[0]);
    ASSERT_TRUE(inner);
    EXPECT_EQ(Axis::z, inner->axis);
    EXPECT_EQ((std::vector<size_type>{0, 1, 2}), visited(tree, {0.5, 1, 1.5}));
}

TEST(BihTreeTest, golden_dump)
{
    auto boxes = boxes_from(golden_boxes());
    auto tree = build_bih(boxes);
    EXPECT_EQ(read_file(NESTMC_TEST_DATA_DIR "/bih-golden.txt"), tree.dump());

    // Overlap band of node 4: both children are searched
    EXPECT_EQ((std::vector<size_type>{3, 1}), visited(tree, {2.5, 0.5, 0.5}));
    // Gap between root children: nothing searched
    EXPECT_EQ(std::vector<size_type>{}, visited(tree, {1.5, 0.5, 0.5}));
}

TEST(BihTreeTest, deterministic)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0, 10);
    std::vector<Aabb> bb;
    for (int i = 0; i < 200; ++i)
    {
        Real3 lo{u(rng), u(rng), u(rng)};
        bb.push_back({lo, lo + Real3{1, 1, 1}});
    }
    auto boxes = boxes_from(bb);
    EXPECT_EQ(build_bih(boxes).dump(), build_bih(boxes).dump());
}

TEST(BihTreeTest, membership_property)
{
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(0, 1);
    int failures = 0;
    int const num_trees = 1000;
    for (int t = 0; t < num_trees; ++t)
    {
        std::size_t const n = 1 + rng() % 150;
        std::vector<Aabb> bb;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (i > 0 && u(rng) < 0.05)
            {
                bb.push_back(bb[rng() % i]);
                continue;
            }
            Real3 lo, hi;
            for (int ax = 0; ax < 3; ++ax)
            {
                lo[ax] = 10 * u(rng);
                // Occasional zero-thickness boxes
                hi[ax] = lo[ax] + (u(rng) < 0.02 ? 0 : 3 * u(rng));
            }
            bb.push_back({lo, hi});
        }
        auto tree = build_bih(boxes_from(bb));

        // Every cell is stored exactly once
        std::multiset<size_type> stored;
        for (auto c : tree.leaf_cells())
        {
            stored.insert(c.get());
        }
        for (std::size_t i = 0; i < n; ++i)
        {
            failures += stored.count(i) != 1;
        }
        failures += stored.size() != n;

        // Every box containing a point is visited, none twice
        for (int p = 0; p < 20; ++p)
        {
            Real3 pos{13 * u(rng) - 1, 13 * u(rng) - 1, 13 * u(rng) - 1};
            auto vis = visited(tree, pos);
            std::set<size_type> seen(vis.begin(), vis.end());
            failures += seen.size() != vis.size();
            for (std::size_t i = 0; i < n; ++i)
            {
                failures += bb[i].contains(pos) && !seen.count(i);
            }
        }
    }
    EXPECT_EQ(0, failures) << "over " << num_trees << " random trees";
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace nestmc
