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

#ifndef UDC_SHIFTING_H_
#define UDC_SHIFTING_H_

#include <functional>
#include <vector>

#include "udc/instance.h"

namespace udc {

struct Box {
  double x0 = 0.0;
  double y0 = 0.0;
  double side = 0.0;

  // Distance from p to the closed box (0 inside).
  double DistanceTo(Point p) const;
};

struct Block {
  int bx = 0;
  int by = 0;
  Box box;
  std::vector<int> points;  // instance point indices
  std::vector<int> disks;   // candidate disk ids
};

struct BlockDecomposition {
  int L = 0;
  int shift = 0;
  std::vector<Block> blocks;  // nonempty blocks sorted by (bx, by)
};

// Grid lines at x, y = shift (mod L); boxes are half-open [a, a+L).
BlockDecomposition Decompose(const Instance& instance, int L, int shift);

// A block as a standalone instance with dense ids.
struct SubInstance {
  Instance instance;
  std::vector<int> disk_ids;  // local id -> original id
  Box box;
};
SubInstance ExtractBlock(const Instance& instance, const Block& block);

using BlockSolver = std::function<Solution(const Instance&, const Box&)>;

struct ShiftStats {
  std::vector<double> shift_weights;  // +inf where the shift failed
  int best_shift = -1;
  int blocks_solved = 0;
  int cache_hits = 0;
};

// Best union over the L diagonal shifts. Throws Infeasible when no shift
// yields a cover.
Solution ShiftedSolve(const Instance& instance, int L, const BlockSolver& solver,
                      int threads = 1, ShiftStats* stats = nullptr);

}  // namespace udc

#endif  // UDC_SHIFTING_H_
