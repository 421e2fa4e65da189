// Seeded instance and substructure fixtures shared by the unit and
// acceptance tests.

#ifndef UDC_TESTS_SUPPORT_FIXTURES_H_
#define UDC_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "udc/dp.h"
#include "udc/instance.h"

namespace udc::testing {

// Uniform instance with weights uniform in [1, 10].
Instance SmallInstance(uint64_t seed, int n, int m, double side);

// Points in [0, 10] x [0, 4] so every shift cuts the instance at least once.
Instance TwoBlockInstance(uint64_t seed, int n, int m);

// Disks in three tight clusters; every kept disk covers a point outside the
// union of the square gadgets, so the helper-set construction has arcs to
// work on. Gadgets are those of BuildGrid({-2, -2, 7}, eps).
Instance ClusteredInstance(uint64_t seed, int n, int m, double eps, double spread);

std::vector<Vertex> RandomUdg(uint64_t seed, int n, double side);

// Unit disk caps over the baseline y = 0: a disk centered at (x, -d) with
// 0 < d < 1 contributes the arc of its circle above the baseline. Positions
// are x coordinates of the feet, parameters are angles walked clockwise from
// the left foot, and points (given with ids) belong to the arcs whose disk
// contains them above the baseline. Disks that do not poke above are
// skipped.
struct Cap {
  int disk = -1;
  double weight = 1.0;
  Point center;
};
DpSubstructure CapSubstructure(const std::vector<Cap>& caps,
                              const std::vector<std::pair<int, Point>>& points);

// Random caps with small integer weights (sums are exact) and points inside
// their union. Disk ids start at `first_disk`, point ids at `first_point`.
DpSubstructure CapFixture(uint64_t seed, int arcs, int points, int first_disk,
                          int first_point);

// Two baselines facing each other across a gap narrower than the caps, so
// arcs of both sides reach common points (an overlapping pair).
DpProblem OverlapFixture(uint64_t seed, int arcs_each, int points_each, int shared);

// A covered strip with arcs on both sides. One disk centered in the strip
// has an arc on each side and alone covers a point on each side, so every
// cover rides both of its arcs.
DpProblem SiblingFixture(uint64_t seed, int arcs_each);

// Disk id of the forced sibling pair in SiblingFixture.
inline constexpr int kSiblingDisk = 1000;

}  // namespace udc::testing

#endif  // UDC_TESTS_SUPPORT_FIXTURES_H_
