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

#include "udc/shifting.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <utility>

#include "udc/baselines.h"
#include "udc/parallel.h"

namespace udc {

double Box::DistanceTo(Point p) const {
  double dx = std::max({x0 - p.x, 0.0, p.x - (x0 + side)});
  double dy = std::max({y0 - p.y, 0.0, p.y - (y0 + side)});
  return std::hypot(dx, dy);
}

BlockDecomposition Decompose(const Instance& instance, int L, int shift) {
  if (L < 3) throw std::invalid_argument("block side L must be >= 3");
  BlockDecomposition dec{L, ((shift % L) + L) % L, {}};
  std::map<std::pair<int, int>, Block> blocks;
  for (int i = 0; i < instance.num_points(); ++i) {
    const Point& p = instance.points[i];
    int bx = static_cast<int>(std::floor((p.x - dec.shift) / L));
    int by = static_cast<int>(std::floor((p.y - dec.shift) / L));
    Block& b = blocks[{bx, by}];
    b.bx = bx;
    b.by = by;
    b.box = {static_cast<double>(bx) * L + dec.shift,
             static_cast<double>(by) * L + dec.shift, static_cast<double>(L)};
    b.points.push_back(i);
  }
  for (auto& [key, b] : blocks) {
    for (const Disk& d : instance.disks) {
      if (b.box.DistanceTo(d.center) <= 1.0 + kTol) b.disks.push_back(d.id);
    }
    dec.blocks.push_back(std::move(b));
  }
  return dec;
}

SubInstance ExtractBlock(const Instance& instance, const Block& block) {
  SubInstance sub;
  sub.box = block.box;
  for (int id : block.disks) {
    Disk d = instance.disks[id];
    d.id = static_cast<int>(sub.disk_ids.size());
    sub.instance.disks.push_back(d);
    sub.disk_ids.push_back(id);
  }
  for (int p : block.points) sub.instance.points.push_back(instance.points[p]);
  return sub;
}

Solution ShiftedSolve(const Instance& instance, int L, const BlockSolver& solver,
                      int threads, ShiftStats* stats) {
  ShiftStats local;
  ShiftStats& st = stats ? *stats : local;
  st = ShiftStats{};
  // Identical blocks recur across shifts; key on (points, candidates).
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::optional<Solution>>
      cache;

  std::optional<Solution> best;
  for (int shift = 0; shift < L; ++shift) {
    BlockDecomposition dec = Decompose(instance, L, shift);
    int nb = static_cast<int>(dec.blocks.size());
    std::vector<std::optional<Solution>> results(nb);
    std::vector<bool> cached(nb, false);
    for (int b = 0; b < nb; ++b) {
      auto it = cache.find({dec.blocks[b].points, dec.blocks[b].disks});
      if (it != cache.end()) {
        results[b] = it->second;
        cached[b] = true;
        ++st.cache_hits;
      }
    }
    ParallelFor(nb, threads, [&](int b) {
      if (cached[b]) return;
      SubInstance sub = ExtractBlock(instance, dec.blocks[b]);
      try {
        Solution local_sol = solver(sub.instance, sub.box);
        Solution mapped;
        for (int id : local_sol.disk_ids) mapped.disk_ids.push_back(sub.disk_ids[id]);
        for (const auto& [id, tag] : local_sol.trace) mapped.trace[sub.disk_ids[id]] = tag;
        results[b] = std::move(mapped);
      } catch (const Infeasible&) {
        results[b] = std::nullopt;
      }
    });
    bool ok = true;
    std::vector<int> ids;
    std::map<int, StageTag> trace;
    for (int b = 0; b < nb; ++b) {
      if (!cached[b]) {
        cache[{dec.blocks[b].points, dec.blocks[b].disks}] = results[b];
        ++st.blocks_solved;
      }
      if (!results[b]) {
        ok = false;
        continue;
      }
      ids.insert(ids.end(), results[b]->disk_ids.begin(), results[b]->disk_ids.end());
      for (const auto& [id, tag] : results[b]->trace) trace.emplace(id, tag);
    }
    double weight = std::numeric_limits<double>::infinity();
    if (ok) {
      Solution sol = MakeSolution(instance, ids, StageTag::kBaseline);
      sol.trace.clear();
      for (int id : sol.disk_ids) sol.trace[id] = trace.at(id);
      if (IsCover(instance, sol.disk_ids)) {
        weight = sol.total_weight;
        if (!best || WeightLess(weight, best->total_weight)) {
          best = std::move(sol);
          st.best_shift = shift;
        }
      }
    }
    st.shift_weights.push_back(weight);
  }
  if (!best) throw Infeasible("no shift produced a feasible cover");
  return *best;
}

}  // namespace udc
