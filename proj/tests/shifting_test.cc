#include "udc/shifting.h"

#include <set>

#include <gtest/gtest.h>

#include "support/fixtures.h"
#include "udc/baselines.h"

namespace udc {
namespace {

Solution Exact(const Instance& inst, const Box&) { return ExactSolve(inst); }

TEST(DecomposeTest, OneBlockForInteriorPoints) {
  Instance inst;
  inst.disks = {{0, {1.5, 1.5}, 1.0}};
  inst.points = {{1.2, 1.4}, {1.8, 1.6}};
  BlockDecomposition dec = Decompose(inst, 6, 0);
  ASSERT_EQ(dec.blocks.size(), 1u);
  EXPECT_EQ(dec.blocks[0].points, (std::vector<int>{0, 1}));
  EXPECT_EQ(dec.blocks[0].disks, (std::vector<int>{0}));
}

TEST(DecomposeTest, GridLineGoesToUpperRightBox) {
  // Half-open boxes [a, a + L): a point on x = 6 starts the next block.
  Instance inst;
  inst.points = {{6.0, 1.0}, {5.999, 1.0}};
  BlockDecomposition dec = Decompose(inst, 6, 0);
  ASSERT_EQ(dec.blocks.size(), 2u);
  EXPECT_EQ(dec.blocks[0].bx, 0);
  EXPECT_EQ(dec.blocks[0].points, (std::vector<int>{1}));
  EXPECT_EQ(dec.blocks[1].bx, 1);
  EXPECT_EQ(dec.blocks[1].points, (std::vector<int>{0}));
}

TEST(DecomposeTest, PartitionsPoints) {
  Instance inst = testing::TwoBlockInstance(4, 30, 60);
  for (int shift = 0; shift < 6; ++shift) {
    BlockDecomposition dec = Decompose(inst, 6, shift);
    std::multiset<int> seen;
    for (const Block& b : dec.blocks) {
      seen.insert(b.points.begin(), b.points.end());
      for (int p : b.points) EXPECT_EQ(b.box.DistanceTo(inst.points[p]), 0.0);
      // Every disk covering a block point is a candidate.
      for (const Disk& d : inst.disks) {
        for (int p : b.points) {
          if (PointInDisk(inst.points[p], d)) {
            EXPECT_TRUE(std::count(b.disks.begin(), b.disks.end(), d.id));
          }
        }
      }
    }
    EXPECT_EQ(seen.size(), 60u);
    EXPECT_EQ(std::set<int>(seen.begin(), seen.end()).size(), 60u);
  }
  EXPECT_THROW(Decompose(inst, 2, 0), std::invalid_argument);
}

TEST(ShiftedSolveTest, SingleBlockEqualsSolver) {
  Instance inst = testing::SmallInstance(2, 10, 15, 1.5);
  for (Point& p : inst.points) p = {p.x + 2.0, p.y + 2.0};
  for (Disk& d : inst.disks) d.center = {d.center.x + 2.0, d.center.y + 2.0};
  // Points lie in [2, 3.5]^2, a single block at shift 0, so the best shift
  // is exactly optimal.
  Solution shifted = ShiftedSolve(inst, 6, Exact);
  EXPECT_EQ(shifted.total_weight, ExactSolve(inst).total_weight);
}

TEST(ShiftedSolveTest, CoversAndBoundsExact) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = testing::TwoBlockInstance(seed, 16, 30);
    ShiftStats stats;
    Solution s = ShiftedSolve(inst, 6, Exact, 1, &stats);
    double exact = ExactSolve(inst).total_weight;
    EXPECT_TRUE(IsCover(inst, s.disk_ids));
    EXPECT_GE(s.total_weight, exact - 1e-9);
    EXPECT_LE(s.total_weight, (1.0 + 4.0 / 6.0) * exact + 1e-9);
    EXPECT_EQ(stats.shift_weights.size(), 6u);
    EXPECT_EQ(stats.shift_weights[stats.best_shift], s.total_weight);
  }
}

TEST(ShiftedSolveTest, ThreadsDoNotChangeResult) {
  Instance inst = testing::TwoBlockInstance(7, 20, 40);
  Solution a = ShiftedSolve(inst, 6, Exact, 1);
  Solution b = ShiftedSolve(inst, 6, Exact, 4);
  EXPECT_EQ(a.disk_ids, b.disk_ids);
  EXPECT_EQ(a.total_weight, b.total_weight);
}

TEST(ShiftedSolveTest, InfeasibleThrows) {
  Instance inst;
  inst.disks = {{0, {0, 0}, 1.0}};
  inst.points = {{4, 4}};
  EXPECT_THROW(ShiftedSolve(inst, 6, Exact), Infeasible);
}

}  // namespace
}  // namespace udc
