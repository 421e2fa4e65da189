// Copyright 2026 The unitcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Grows the helper set H from the square gadgets. Each round rebuilds the
// layout, finds the first violated property and adds disks to H to repair it,
// until every substructure property holds.

#ifndef UDC_HBUILDER_H_
#define UDC_HBUILDER_H_

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "udc/dp.h"
#include "udc/gadgets.h"
#include "udc/substructures.h"

namespace udc {

class CycleDetected : public std::runtime_error {
 public:
  CycleDetected(std::vector<int> cycle, const std::string& what)
      : std::runtime_error(what), cycle(std::move(cycle)) {}
  std::vector<int> cycle;  // substructure ids around the cycle
  std::vector<Point> polygon;  // first arc midpoint of each node
};

struct CutRecord {
  std::string op;
  std::vector<int> disks;
  std::vector<int> subs;
};

struct CutLedger {
  std::vector<CutRecord> records;
  std::map<std::string, int> counts;  // disks added per operation
  int total = 0;

  void Add(CutRecord record);
};

struct RelationGraph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> blue;  // pairs with a < b, sorted
  std::vector<std::pair<int, int>> red;

  // Neighbors over both colors, deduplicated.
  std::vector<std::vector<int>> Neighbors() const;
};

// Substructures sharing a disk are blue, sharing a remaining point red.
RelationGraph BuildRelationGraph(const Layout& layout);

// Plain graph check; returns a cycle (node ids) or empty.
std::vector<int> FindCycle(int num_nodes, const std::vector<std::pair<int, int>>& edges);

// Alternating orientation along each path. The path end with the smaller id
// keeps the natural (counterclockwise) direction.
std::vector<bool> OrientPaths(const RelationGraph& graph);

// Region key: 2 * gadget + (halfplane > 0).
using RegionKey = int;
inline RegionKey MakeRegionKey(int gadget, int halfplane) {
  return 2 * gadget + (halfplane > 0 ? 1 : 0);
}

struct Diagnostics {
  int double_mixtures = 0;
  int mixture_adjacency_failures = 0;  // merged squares not adjacent
  int mixture_angle_failures = 0;      // gadget axes differ by more than cap
  int dome_checks = 0;
  int dome_failures = 0;
  int parallel_checks = 0;
  int parallel_failures = 0;
  int ds2_violations = 0;
  int rounds = 0;
};

struct HBuilderConfig {
  double angle_cap = 0.0;  // 0 means 8 * mu
  bool isolate_regions = false;
  int max_rounds = 100000;
};

struct HInput {
  std::span<const Disk> disks;  // disks[i].id == i
  std::span<const Point> points;
  PointSet done;          // covered by the guess
  std::vector<int> pool;  // disks allowed in H and in arcs
  SquareGrid grid;
  std::vector<int> forced;  // extra disks put in H up front (DP repairs)
};

struct HResult {
  GadgetSet gadgets;
  std::vector<int> gadget_disks;
  std::vector<int> cut_disks;  // in the order added
  Layout layout;
  RelationGraph graph;
  std::vector<std::vector<int>> components;  // substructure ids in path order
  // Region classes per substructure after mixture merges.
  std::vector<std::vector<RegionKey>> regions;
  CutLedger ledger;
  Diagnostics diag;
  double angle_cap = 0.0;

  std::vector<int> HDisks() const;
};

// Throws CycleDetected when the relation graph cannot be made a union of
// paths, DegenerateArrangement from the geometry layer.
HResult BuildH(const HInput& input, const HBuilderConfig& config = {});

// Disks of the same square centered in the core-central area, per region.
std::map<RegionKey, std::vector<int>> RegionArcs(const Layout& layout,
                                                 std::span<const Disk> disks,
                                                 const GadgetSet& gadgets);

DpProblem ToDpProblem(const HResult& result, std::span<const Disk> disks,
                      const std::vector<int>& component);

}  // namespace udc

#endif  // UDC_HBUILDER_H_
