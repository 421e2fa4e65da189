#include "udc/hbuilder.h"

#include <gtest/gtest.h>

#include "support/fixtures.h"
#include "udc/blocksolver.h"
#include "udc/checks.h"
#include "udc/substructures.h"

namespace udc {
namespace {

// Gadget pair along the x axis plus one disk poking out above it. All three
// centers share the square at the origin.
struct SmallScene {
  std::vector<Disk> disks = {{0, {0.0, 0.0}, 1}, {1, {0.4, 0.0}, 1}, {2, {0.2, 0.3}, 2}};
  std::vector<Point> points = {{0.2, 1.2}, {0.2, -0.5}};
  SquareGrid grid = BuildGrid({-0.1, -0.1, 3}, 1.0);
  GadgetSet gadgets;

  SmallScene() {
    std::vector<int> all = {0, 1, 2};
    gadgets = BuildGadgets(disks, all, grid);
  }
  Layout Build(std::vector<int> h, std::vector<int> pool) const {
    LayoutInput in;
    in.disks = disks;
    in.points = points;
    in.done = PointSet(static_cast<int>(points.size()));
    in.h = std::move(h);
    in.pool = std::move(pool);
    in.gadgets = &gadgets;
    return BuildLayout(in);
  }
};

TEST(LayoutTest, ArcAboveAxisMakesOneSubstructure) {
  SmallScene scene;
  ASSERT_EQ(scene.gadgets.gadgets.size(), 1u);
  Layout layout = scene.Build({0, 1}, {2});
  ASSERT_EQ(layout.arcs.size(), 1u);
  EXPECT_EQ(layout.arcs[0].disk, 2);
  EXPECT_EQ(layout.arcs[0].halfplane, 1);
  EXPECT_LT(CentralAngle(layout.arcs[0].span), kPi);
  ASSERT_EQ(layout.subs.size(), 1u);
  EXPECT_EQ(layout.subs[0].arcs, (std::vector<int>{0}));
  ASSERT_EQ(layout.baselines.size(), 1u);
  EXPECT_FALSE(layout.baselines[0].cyclic);
  // The point below the axis is inside H, the one above is on the arc.
  EXPECT_EQ(layout.remaining.Elements(), (std::vector<int>{0}));
  EXPECT_TRUE(layout.arcs[0].points.Test(0));
  EXPECT_TRUE(PointCoveredByArc(layout, scene.disks, scene.points[0], 0));
  EXPECT_FALSE(PointCoveredByArc(layout, scene.disks, scene.points[1], 0));
  EXPECT_EQ(Envelope(layout, scene.disks, 0), (std::vector<int>{0}));
  EXPECT_EQ(FirstAdjacentSuccessor(layout, scene.disks, 0, 0.0), -1);
}

TEST(LayoutTest, CoveredDiskHasNoArcs) {
  SmallScene scene;
  scene.disks[2].center = {0.2, 0.0};  // inside the union of the pair
  scene.points = {{0.2, 0.5}};
  Layout layout = scene.Build({0, 1}, {2});
  EXPECT_TRUE(layout.arcs.empty());
  EXPECT_TRUE(layout.subs.empty());
}

TEST(LayoutTest, NoPoolNoBaselines) {
  SmallScene scene;
  Layout layout = scene.Build({0, 1}, {});
  EXPECT_TRUE(layout.arcs.empty());
  EXPECT_TRUE(layout.baselines.empty());
}

TEST(RelationGraphTest, FindCycle) {
  EXPECT_TRUE(FindCycle(3, {{0, 1}, {1, 2}}).empty());
  std::vector<int> c = FindCycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(FindCycle(1, {}).empty());
}

TEST(RelationGraphTest, OrientPathsAlternates) {
  RelationGraph g;
  g.num_nodes = 4;
  g.blue = {{0, 1}};
  g.red = {{1, 2}};
  std::vector<bool> r = OrientPaths(g);
  EXPECT_EQ(r, (std::vector<bool>{false, true, false, false}));
}

TEST(LabelsTest, CompressAndPattern) {
  std::vector<int> labels = {0, 1, 0, 1, 0, 2, 0};
  std::vector<int> c = CompressLabels(labels);
  EXPECT_EQ(c, (std::vector<int>{0, 1, 0, 2, 0}));  // five l-segments
  EXPECT_FALSE(HasAbabPattern(c));
  std::vector<int> runs = {1, 1, 0, 0, 2, 2, 0, 1};
  EXPECT_EQ(CompressLabels(runs), (std::vector<int>{1, 0, 2, 0, 1}));
  std::vector<int> abab = {1, 0, 2, 1, 2};
  EXPECT_TRUE(HasAbabPattern(abab));
}

class BuildHTest : public ::testing::TestWithParam<double> {};

TEST_P(BuildHTest, PropertiesHoldOnClusteredInstances) {
  double eps = GetParam();
  Box box{-2, -2, 7};
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Instance inst = testing::ClusteredInstance(seed, 40, 40, eps, 0.8);
    BlockConfig config;
    config.eps = eps;
    config.prune_dominated = false;
    GuessEvaluation ev = EvaluateGuess(inst, box, {}, config);
    ASSERT_TRUE(ev.ok) << "seed " << seed << ": " << ev.failure;
    CheckReport report = CheckHResult(ev.h, inst.disks, ev.K);
    for (const CheckResult& r : report.results) {
      EXPECT_TRUE(r.failures.empty()) << "seed " << seed << " " << r.name << ": "
                                      << r.failures.front();
    }
    EXPECT_LE(ev.h.ledger.total, 64 * ev.K * ev.K);
    EXPECT_TRUE(FindCycle(ev.h.graph.num_nodes, [&] {
                  auto e = ev.h.graph.blue;
                  e.insert(e.end(), ev.h.graph.red.begin(), ev.h.graph.red.end());
                  std::sort(e.begin(), e.end());
                  e.erase(std::unique(e.begin(), e.end()), e.end());
                  return e;
                }()).empty());
    EXPECT_TRUE(IsCover(inst, ev.solution.disk_ids));
  }
}

INSTANTIATE_TEST_SUITE_P(Eps, BuildHTest, ::testing::Values(0.5, 1.0));

}  // namespace
}  // namespace udc
