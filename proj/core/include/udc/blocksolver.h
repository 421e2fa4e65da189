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

// Per-block driver: small covers by enumeration, then one H + DP run per
// guessed set of the C heaviest disks.

#ifndef UDC_BLOCKSOLVER_H_
#define UDC_BLOCKSOLVER_H_

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "udc/checks.h"
#include "udc/hbuilder.h"
#include "udc/instance.h"
#include "udc/shifting.h"

namespace udc {

class InfeasibleAssembly : public std::runtime_error {
 public:
  explicit InfeasibleAssembly(const std::string& what) : std::runtime_error(what) {}
};

struct BlockConfig {
  double eps = 1.0;
  int C = 3;
  double mu = 0.0;         // 0: derived from eps
  double angle_cap = 0.0;  // 0: 8 * mu
  int64_t state_budget = 2'000'000;
  bool prune_redundant = true;
  bool prune_dominated = true;
  bool isolate_regions = false;
  int max_dp_repairs = 64;
  double c0 = 1.0;  // sizing constant of the grid; reported only
};

struct BlockStats {
  int64_t guesses = 0;
  int64_t skipped_weight = 0;  // w(G) already no better than the best
  int64_t pruned_bound = 0;    // w(G) + lower bound no better
  int64_t infeasible = 0;      // some point not coverable by the pool
  int64_t evaluated = 0;
  int64_t cycles = 0;
  int64_t no_path = 0;
  int64_t degenerate = 0;
  int64_t budget = 0;
  int64_t assembly_failures = 0;
  int64_t dp_repairs = 0;
  int64_t dp_states = 0;
  int64_t ledger_total = 0;
  int max_ledger = 0;
  std::map<std::string, int64_t> cut_ops;  // disks added per cut operation
  int stage_a_size = -1;  // size of the enumerated cover, -1 if none

  void Merge(const BlockStats& o);
};

// Visits all size-k subsets of 0..n-1 in lexicographic order; stop by
// returning false.
void ForEachSubset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn);
std::vector<std::vector<int>> CandidateGuesses(int n, int C);

struct GuessEvaluation {
  bool ok = false;
  std::string failure;
  Solution solution;
  HResult h;
  double w_t = 0.0;
  std::vector<int> pool;
  int K = 0;
  int attempts = 0;
  int dp_repairs = 0;
  int64_t dp_states = 0;
};

// Disks allowed after guessing G: weight <= min weight of G, useful on the
// points G leaves, not dominated by a lighter or equal disk.
std::vector<int> GuessPool(const Instance& instance, const std::vector<int>& guess,
                           PointSet* left = nullptr, bool prune_dominated = true);

// Runs H + DP for one guess (an empty guess uses every disk). Failures are
// reported, not thrown.
GuessEvaluation EvaluateGuess(const Instance& instance, const Box& box,
                              const std::vector<int>& guess, const BlockConfig& config,
                              std::ostream* dp_trace = nullptr);

// G + H + DP choice, each disk once, checked for coverage.
Solution AssembleBlockSolution(const Instance& instance, const std::vector<int>& guess,
                               const HResult& h, const std::vector<int>& dp_disks);

Solution SolveBlock(const Instance& instance, const Box& box,
                    const BlockConfig& config, BlockStats* stats = nullptr);

// Property checks after H is built for the given guess.
CheckReport DeepCheckGuess(const Instance& instance, const Box& box,
                           const std::vector<int>& guess, const BlockConfig& config);

SquareGrid GridFor(const Box& box, const BlockConfig& config);

}  // namespace udc

#endif  // UDC_BLOCKSOLVER_H_
