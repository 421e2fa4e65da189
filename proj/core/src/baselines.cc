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

#include "udc/baselines.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace udc {

CoverageMatrix::CoverageMatrix(const Instance& instance, double tol)
    : num_points_(instance.num_points()),
      by_disk_(instance.num_disks(), PointSet(instance.num_points())),
      by_point_(instance.num_points()) {
  for (int p = 0; p < num_points_; ++p) {
    for (int d = 0; d < instance.num_disks(); ++d) {
      if (PointInDisk(instance.points[p], instance.disks[d], tol)) {
        by_disk_[d].Set(p);
        by_point_[p].push_back(d);
      }
    }
  }
}

bool WeightLess(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a < b;
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return a < b - 1e-12 * scale;
}

namespace {

void RequireCoverable(const CoverageMatrix& cov) {
  for (int p = 0; p < cov.num_points(); ++p) {
    if (cov.DisksCovering(p).empty()) {
      throw Infeasible("point " + std::to_string(p) + " is not covered by any disk");
    }
  }
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const CoverageMatrix& cov, int64_t budget)
      : inst_(inst), cov_(cov), budget_(budget) {}

  std::vector<int> Run() {
    PointSet uncovered(cov_.num_points());
    for (int p = 0; p < cov_.num_points(); ++p) uncovered.Set(p);
    std::vector<bool> forbidden(inst_.num_disks(), false);
    std::vector<int> chosen;
    Search(uncovered, forbidden, chosen);
    return best_;
  }

  int64_t nodes() const { return nodes_; }

 private:
  // Every uncovered point must be paid for by some allowed disk; charging each
  // point the cheapest per-point price of its allowed disks never overshoots.
  double LowerBound(const PointSet& uncovered,
                    const std::vector<bool>& forbidden) const {
    double lb = 0.0;
    for (int p : uncovered.Elements()) {
      double best = std::numeric_limits<double>::infinity();
      for (int d : cov_.DisksCovering(p)) {
        if (forbidden[d]) continue;
        int gain = cov_.Covered(d).CountAnd(uncovered);
        best = std::min(best, inst_.disks[d].weight / gain);
      }
      lb += best;
    }
    return lb;
  }

  void Offer(const std::vector<int>& chosen) {
    std::vector<int> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    double w = CanonicalWeight(inst_, sorted);
    if (!have_best_ || WeightLess(w, best_weight_) ||
        (!WeightLess(best_weight_, w) && sorted < best_)) {
      have_best_ = true;
      best_weight_ = w;
      best_ = std::move(sorted);
    }
  }

  void Search(const PointSet& uncovered, std::vector<bool>& forbidden,
              std::vector<int>& chosen) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("exact search passed " + std::to_string(budget_) +
                           " nodes");
    }
    if (!uncovered.Any()) {
      Offer(chosen);
      return;
    }
    double current = 0.0;
    for (int d : chosen) current += inst_.disks[d].weight;
    if (have_best_ && WeightLess(best_weight_, current + LowerBound(uncovered, forbidden))) {
      return;
    }
    // Branch on the uncovered point with the fewest allowed disks.
    int pivot = -1;
    size_t fewest = std::numeric_limits<size_t>::max();
    for (int p : uncovered.Elements()) {
      size_t options = 0;
      for (int d : cov_.DisksCovering(p)) options += forbidden[d] ? 0 : 1;
      if (options == 0) return;
      if (options < fewest) {
        fewest = options;
        pivot = p;
      }
    }
    std::vector<int> branch;
    for (int d : cov_.DisksCovering(pivot)) {
      if (!forbidden[d]) branch.push_back(d);
    }
    auto ratio = [&](int d) {
      return inst_.disks[d].weight / cov_.Covered(d).CountAnd(uncovered);
    };
    std::stable_sort(branch.begin(), branch.end(), [&](int a, int b) {
      double ra = ratio(a), rb = ratio(b);
      if (ra != rb) return ra < rb;
      return a < b;
    });
    std::vector<int> newly_forbidden;
    for (int d : branch) {
      chosen.push_back(d);
      Search(uncovered - cov_.Covered(d), forbidden, chosen);
      chosen.pop_back();
      // Later siblings may not use d: those covers were explored here.
      forbidden[d] = true;
      newly_forbidden.push_back(d);
    }
    for (int d : newly_forbidden) forbidden[d] = false;
  }

  const Instance& inst_;
  const CoverageMatrix& cov_;
  int64_t budget_;
  int64_t nodes_ = 0;
  bool have_best_ = false;
  double best_weight_ = 0.0;
  std::vector<int> best_;
};

}  // namespace

Solution ExactSolve(const Instance& instance, int64_t node_budget,
                    int64_t* nodes_used) {
  CoverageMatrix cov(instance);
  RequireCoverable(cov);
  BranchAndBound bb(instance, cov, node_budget);
  std::vector<int> ids = bb.Run();
  if (nodes_used) *nodes_used = bb.nodes();
  return MakeSolution(instance, std::move(ids), StageTag::kBaseline);
}

Solution GreedySolve(const Instance& instance) {
  CoverageMatrix cov(instance);
  RequireCoverable(cov);
  PointSet uncovered(cov.num_points());
  for (int p = 0; p < cov.num_points(); ++p) uncovered.Set(p);
  std::vector<int> chosen;
  while (uncovered.Any()) {
    int pick = -1;
    double pick_ratio = 0.0;
    for (int d = 0; d < instance.num_disks(); ++d) {
      int gain = cov.Covered(d).CountAnd(uncovered);
      if (gain == 0) continue;
      double r = instance.disks[d].weight / gain;
      if (pick < 0 || r < pick_ratio) {
        pick = d;
        pick_ratio = r;
      }
    }
    chosen.push_back(pick);
    uncovered -= cov.Covered(pick);
  }
  return MakeSolution(instance, std::move(chosen), StageTag::kBaseline);
}

}  // namespace udc
