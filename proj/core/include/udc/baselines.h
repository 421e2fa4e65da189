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

// Reference solvers: exact branch-and-bound and the greedy ratio rule.

#ifndef UDC_BASELINES_H_
#define UDC_BASELINES_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "udc/instance.h"
#include "udc/pointset.h"

namespace udc {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class CoverageMatrix {
 public:
  explicit CoverageMatrix(const Instance& instance, double tol = kTol);

  int num_points() const { return num_points_; }
  int num_disks() const { return static_cast<int>(by_disk_.size()); }
  bool Covers(int disk, int point) const { return by_disk_[disk].Test(point); }
  const PointSet& Covered(int disk) const { return by_disk_[disk]; }
  const std::vector<int>& DisksCovering(int point) const {
    return by_point_[point];
  }

 private:
  int num_points_ = 0;
  std::vector<PointSet> by_disk_;
  std::vector<std::vector<int>> by_point_;
};

inline constexpr int64_t kDefaultNodeBudget = 10'000'000;

// True when a is lighter than b beyond floating-point noise.
bool WeightLess(double a, double b);

// Minimum-weight cover; ties go to the lexicographically smallest id list.
Solution ExactSolve(const Instance& instance,
                    int64_t node_budget = kDefaultNodeBudget,
                    int64_t* nodes_used = nullptr);

Solution GreedySolve(const Instance& instance);

}  // namespace udc

#endif  // UDC_BASELINES_H_
