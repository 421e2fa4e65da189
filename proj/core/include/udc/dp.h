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

// Walker dynamic program over one relation-graph component.
//
// Each substructure has a walker that starts at the baseline start and ends at
// the baseline end. A walker state is (carrier, next event): the carrier is
// the baseline or an arc, and the events are the points where another arc can
// be boarded. Skipping an event is allowed only if it loses no required
// point. Leaving an arc pays its disk, and a disk may only be left when none of
// its sibling arcs has already been passed, which makes siblings that are used
// together leave together and pay once.

#ifndef UDC_DP_H_
#define UDC_DP_H_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "udc/pointset.h"

namespace udc {

class NoFeasiblePath : public std::runtime_error {
 public:
  explicit NoFeasiblePath(const std::string& what) : std::runtime_error(what) {}
};

class StuckState : public std::runtime_error {
 public:
  explicit StuckState(const std::string& what) : std::runtime_error(what) {}
};

class StateBudgetExceeded : public std::runtime_error {
 public:
  explicit StateBudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// Positions are along the oriented baseline; `length` is the arc's own
// parameter range, crossings are located by parameters in [0, length].
struct DpArc {
  int disk = -1;
  double weight = 0.0;
  double start = 0.0;
  double end = 0.0;
  double length = 1.0;
  std::vector<int> points;  // instance point ids covered by the arc's region
};

// `upper` boards from `lower`; lower must precede upper in arc order.
struct DpCrossing {
  int lower = -1;
  int upper = -1;
  double param_lower = 0.0;
  double param_upper = 0.0;
};

struct DpSubstructure {
  std::vector<DpArc> arcs;
  std::vector<DpCrossing> crossings;
};

struct DpProblem {
  std::vector<DpSubstructure> subs;
};

// Strict arc order: a precedes c iff both endpoints come earlier.
bool ArcPrecedes(const DpArc& a, const DpArc& c);

struct DpResult {
  double weight = 0.0;  // canonical sum over `disks`
  std::vector<int> disks;
  std::vector<std::vector<int>> paths;  // arcs used, per substructure
  int64_t states = 0;
};

struct DpOptions {
  int64_t state_budget = 2'000'000;
  bool ignore_coverage = false;  // structural reachability only
  std::ostream* trace = nullptr;
};

class DpSolver {
 public:
  using State = std::vector<int>;  // walker state id per substructure

  enum class MoveKind { kSkip, kBoardFromBaseline, kLeaveDisk };
  struct Move {
    MoveKind kind;
    int sub = -1;    // for kSkip / kBoardFromBaseline
    int disk = -1;   // for kLeaveDisk
    double cost = 0.0;
    State next;
  };

  DpSolver(const DpProblem& problem, DpOptions options = {});

  // Throws NoFeasiblePath, StuckState or StateBudgetExceeded.
  DpResult Solve();

  State InitialState() const;
  bool IsFinal(const State& s) const;
  // Points still to cover: future coverage minus what the carriers cover.
  PointSet Required(const State& s) const;
  // Allowed moves in tie-break order.
  std::vector<Move> Moves(const State& s) const;
  // Optimal cost-to-go (+inf if the end is unreachable). Memoized.
  double Value(const State& s);
  std::vector<State> MemoizedStates() const;
  int num_points() const { return num_points_; }
  // Instance point id of local index i.
  int PointId(int i) const { return point_ids_[i]; }
  // Carrier arc of walker state `w` in sub `k`, -1 for the baseline.
  int Carrier(int k, int w) const { return walkers_[k][w].carrier; }

 private:
  struct Event {
    double param;
    int top;  // arc boarded, or -1 for the exit to the baseline
    double top_param;
  };
  struct Walker {
    int carrier;  // -1 baseline
    int event;    // index into the carrier's events
  };
  struct SubData {
    std::vector<int> by_start;                // arc indices sorted by start
    std::vector<std::vector<Event>> events;   // per arc
    std::vector<PointSet> arc_points;
    std::vector<PointSet> future;             // per walker state
  };

  int WalkerId(int k, int carrier, int event) const;
  int AfterBoarding(int k, int arc, double param) const;
  int AfterExit(int k, int arc) const;
  bool Passed(int k, int walker, int arc) const;
  uint64_t Key(const State& s) const;
  State Decode(uint64_t key) const;

  const DpProblem& problem_;
  DpOptions options_;
  int num_points_ = 0;
  std::vector<int> point_ids_;
  std::vector<SubData> data_;
  std::vector<std::vector<Walker>> walkers_;
  std::vector<std::vector<int>> walker_index_;  // [k][carrier+1] -> first id
  std::vector<uint64_t> radix_;
  struct Memo {
    double value;
    int choice;  // index into Moves(), -1 final, -2 dead end
  };
  std::unordered_map<uint64_t, Memo> memo_;
};

// Convenience wrappers.
DpResult SolveComponent(const DpProblem& problem, DpOptions options = {});
DpResult SolveTwo(const DpSubstructure& a, const DpSubstructure& b,
                  DpOptions options = {});

}  // namespace udc

#endif  // UDC_DP_H_
