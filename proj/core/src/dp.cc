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

#include "udc/dp.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "udc/format.h"

namespace udc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

bool ArcPrecedes(const DpArc& a, const DpArc& c) {
  return a.start < c.start && a.end < c.end;
}

DpSolver::DpSolver(const DpProblem& problem, DpOptions options)
    : problem_(problem), options_(options) {
  for (const DpSubstructure& sub : problem_.subs) {
    for (const DpArc& a : sub.arcs) {
      point_ids_.insert(point_ids_.end(), a.points.begin(), a.points.end());
    }
  }
  std::sort(point_ids_.begin(), point_ids_.end());
  point_ids_.erase(std::unique(point_ids_.begin(), point_ids_.end()),
                   point_ids_.end());
  num_points_ = static_cast<int>(point_ids_.size());
  auto local = [&](int id) {
    return static_cast<int>(
        std::lower_bound(point_ids_.begin(), point_ids_.end(), id) -
        point_ids_.begin());
  };

  int m = static_cast<int>(problem_.subs.size());
  data_.resize(m);
  walkers_.resize(m);
  walker_index_.resize(m);
  for (int k = 0; k < m; ++k) {
    const DpSubstructure& sub = problem_.subs[k];
    SubData& d = data_[k];
    int n = static_cast<int>(sub.arcs.size());
    d.by_start.resize(n);
    for (int i = 0; i < n; ++i) d.by_start[i] = i;
    std::sort(d.by_start.begin(), d.by_start.end(), [&](int a, int b) {
      const DpArc& x = sub.arcs[a];
      const DpArc& y = sub.arcs[b];
      if (x.start != y.start) return x.start < y.start;
      if (x.end != y.end) return x.end < y.end;
      return a < b;
    });
    d.events.assign(n, {});
    for (const DpCrossing& c : sub.crossings) {
      d.events[c.lower].push_back({c.param_lower, c.upper, c.param_upper});
    }
    for (int a = 0; a < n; ++a) {
      auto& ev = d.events[a];
      std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) {
        if (x.param != y.param) return x.param < y.param;
        return x.top < y.top;
      });
      ev.push_back({sub.arcs[a].length, -1, 0.0});
    }
    d.arc_points.assign(n, PointSet(num_points_));
    for (int a = 0; a < n; ++a) {
      for (int p : sub.arcs[a].points) d.arc_points[a].Set(local(p));
    }
    // Walker ids: baseline states 0..n (n is the end), then each arc's events.
    walker_index_[k].resize(n + 1);
    walker_index_[k][0] = 0;
    for (int i = 0; i <= n; ++i) walkers_[k].push_back({-1, i});
    for (int a = 0; a < n; ++a) {
      walker_index_[k][a + 1] = static_cast<int>(walkers_[k].size());
      for (size_t e = 0; e < d.events[a].size(); ++e) {
        walkers_[k].push_back({a, static_cast<int>(e)});
      }
    }
    // Future coverage per walker state: everything reachable from it.
    int nw = static_cast<int>(walkers_[k].size());
    d.future.assign(nw, PointSet(num_points_));
    std::vector<char> done(nw, 0);
    std::function<const PointSet&(int)> future = [&](int w) -> const PointSet& {
      if (done[w]) return d.future[w];
      done[w] = 1;
      Walker wk = walkers_[k][w];
      PointSet acc(num_points_);
      if (wk.carrier < 0) {
        if (wk.event < n) {
          int arc = d.by_start[wk.event];
          acc |= future(WalkerId(k, -1, wk.event + 1));
          acc |= future(AfterBoarding(k, arc, 0.0));
        }
      } else {
        acc |= d.arc_points[wk.carrier];
        const Event& ev = d.events[wk.carrier][wk.event];
        if (ev.top >= 0) {
          acc |= future(WalkerId(k, wk.carrier, wk.event + 1));
          acc |= future(AfterBoarding(k, ev.top, ev.top_param));
        } else {
          acc |= future(AfterExit(k, wk.carrier));
        }
      }
      d.future[w] = std::move(acc);
      return d.future[w];
    };
    for (int w = 0; w < nw; ++w) future(w);
  }
  radix_.resize(m);
  uint64_t mult = 1;
  for (int k = 0; k < m; ++k) {
    radix_[k] = mult;
    uint64_t size = walkers_[k].size();
    if (mult > std::numeric_limits<uint64_t>::max() / size) {
      throw StateBudgetExceeded("state space too large to index");
    }
    mult *= size;
  }
}

int DpSolver::WalkerId(int k, int carrier, int event) const {
  return walker_index_[k][carrier + 1] + event;
}

int DpSolver::AfterBoarding(int k, int arc, double param) const {
  const auto& ev = data_[k].events[arc];
  int e = 0;
  while (ev[e].top >= 0 && ev[e].param <= param) ++e;
  return WalkerId(k, arc, e);
}

int DpSolver::AfterExit(int k, int arc) const {
  const SubData& d = data_[k];
  const auto& arcs = problem_.subs[k].arcs;
  double end = arcs[arc].end;
  int i = 0;
  int n = static_cast<int>(d.by_start.size());
  while (i < n && arcs[d.by_start[i]].start < end) ++i;
  return WalkerId(k, -1, i);
}

bool DpSolver::Passed(int k, int walker, int arc) const {
  const Walker& w = walkers_[k][walker];
  if (w.carrier == arc) return false;
  if (w.carrier < 0) {
    const auto& bs = data_[k].by_start;
    int rank = static_cast<int>(std::find(bs.begin(), bs.end(), arc) - bs.begin());
    return rank < w.event;
  }
  const auto& arcs = problem_.subs[k].arcs;
  return ArcPrecedes(arcs[arc], arcs[w.carrier]);
}

uint64_t DpSolver::Key(const State& s) const {
  uint64_t key = 0;
  for (size_t k = 0; k < s.size(); ++k) key += radix_[k] * static_cast<uint64_t>(s[k]);
  return key;
}

DpSolver::State DpSolver::Decode(uint64_t key) const {
  State s(radix_.size());
  for (size_t k = 0; k < s.size(); ++k) {
    s[k] = static_cast<int>(key % walkers_[k].size());
    key /= walkers_[k].size();
  }
  return s;
}

DpSolver::State DpSolver::InitialState() const {
  return State(problem_.subs.size(), 0);
}

bool DpSolver::IsFinal(const State& s) const {
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k] != static_cast<int>(problem_.subs[k].arcs.size())) return false;
  }
  return true;
}

PointSet DpSolver::Required(const State& s) const {
  PointSet future(num_points_), carried(num_points_);
  for (size_t k = 0; k < s.size(); ++k) {
    future |= data_[k].future[s[k]];
    int c = walkers_[k][s[k]].carrier;
    if (c >= 0) carried |= data_[k].arc_points[c];
  }
  return future - carried;
}

std::vector<DpSolver::Move> DpSolver::Moves(const State& s) const {
  std::vector<Move> moves;
  int m = static_cast<int>(s.size());
  PointSet req = Required(s);
  auto lossless = [&](const State& next, const std::vector<int>& boarded) {
    if (options_.ignore_coverage) return true;
    PointSet keep = Required(next);
    for (size_t k = 0; k < boarded.size(); ++k) {
      if (boarded[k] >= 0) keep |= data_[k].arc_points[boarded[k]];
    }
    return req.SubsetOf(keep);
  };
  std::vector<int> none(m, -1);

  for (int k = 0; k < m; ++k) {
    const Walker& w = walkers_[k][s[k]];
    int n = static_cast<int>(problem_.subs[k].arcs.size());
    bool can_skip = w.carrier < 0 ? w.event < n
                                  : data_[k].events[w.carrier][w.event].top >= 0;
    if (!can_skip) continue;
    State next = s;
    next[k] = s[k] + 1;  // walker ids of one carrier are consecutive
    if (options_.ignore_coverage || Required(next) == req) {
      moves.push_back({MoveKind::kSkip, k, -1, 0.0, std::move(next)});
    }
  }
  for (int k = 0; k < m; ++k) {
    const Walker& w = walkers_[k][s[k]];
    if (w.carrier >= 0 || w.event >= static_cast<int>(problem_.subs[k].arcs.size())) {
      continue;
    }
    int arc = data_[k].by_start[w.event];
    State next = s;
    next[k] = AfterBoarding(k, arc, 0.0);
    std::vector<int> boarded = none;
    boarded[k] = arc;
    if (lossless(next, boarded)) {
      moves.push_back({MoveKind::kBoardFromBaseline, k, -1, 0.0, std::move(next)});
    }
  }
  // Disks carried by some walker, ascending.
  std::map<int, double> carried;
  for (int k = 0; k < m; ++k) {
    int c = walkers_[k][s[k]].carrier;
    if (c >= 0) {
      const DpArc& a = problem_.subs[k].arcs[c];
      carried.emplace(a.disk, a.weight);
    }
  }
  for (const auto& [disk, weight] : carried) {
    bool ready = true;
    for (int j = 0; j < m && ready; ++j) {
      const auto& arcs = problem_.subs[j].arcs;
      for (int x = 0; x < static_cast<int>(arcs.size()); ++x) {
        if (arcs[x].disk == disk && Passed(j, s[j], x)) {
          ready = false;
          break;
        }
      }
    }
    if (!ready) continue;
    State next = s;
    std::vector<int> boarded = none;
    for (int k = 0; k < m; ++k) {
      const Walker& w = walkers_[k][s[k]];
      if (w.carrier < 0 || problem_.subs[k].arcs[w.carrier].disk != disk) continue;
      const Event& ev = data_[k].events[w.carrier][w.event];
      if (ev.top >= 0) {
        next[k] = AfterBoarding(k, ev.top, ev.top_param);
        boarded[k] = ev.top;
      } else {
        next[k] = AfterExit(k, w.carrier);
      }
    }
    if (lossless(next, boarded)) {
      moves.push_back({MoveKind::kLeaveDisk, -1, disk, weight, std::move(next)});
    }
  }
  return moves;
}

double DpSolver::Value(const State& s) {
  uint64_t key = Key(s);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;
  if (IsFinal(s)) {
    memo_[key] = {0.0, -1};
    return 0.0;
  }
  if (static_cast<int64_t>(memo_.size()) >= options_.state_budget) {
    throw StateBudgetExceeded("dp passed " + std::to_string(options_.state_budget) +
                              " states");
  }
  std::vector<Move> moves = Moves(s);
  double best = kInf;
  int choice = -2;
  for (size_t i = 0; i < moves.size(); ++i) {
    double v = moves[i].cost + Value(moves[i].next);
    if (v < best) {
      best = v;
      choice = static_cast<int>(i);
    }
  }
  memo_[key] = {best, choice};
  return best;
}

std::vector<DpSolver::State> DpSolver::MemoizedStates() const {
  std::vector<uint64_t> keys;
  for (const auto& [key, memo] : memo_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  std::vector<State> out;
  for (uint64_t key : keys) out.push_back(Decode(key));
  return out;
}

DpResult DpSolver::Solve() {
  State start = InitialState();
  double v = Value(start);
  if (v == kInf) {
    if (options_.ignore_coverage) throw StuckState("no walker schedule reaches the end");
    DpOptions relaxed = options_;
    relaxed.ignore_coverage = true;
    relaxed.trace = nullptr;
    DpSolver structural(problem_, relaxed);
    if (structural.Value(structural.InitialState()) == kInf) {
      throw StuckState("no walker schedule reaches the end");
    }
    throw NoFeasiblePath("required points cannot all be covered by a valid path");
  }
  DpResult result;
  result.paths.resize(problem_.subs.size());
  std::map<int, double> paid;
  State s = start;
  while (!IsFinal(s)) {
    const Memo& memo = memo_.at(Key(s));
    std::vector<Move> moves = Moves(s);
    const Move& mv = moves[memo.choice];
    if (mv.kind == MoveKind::kLeaveDisk) paid.emplace(mv.disk, mv.cost);
    for (size_t k = 0; k < s.size(); ++k) {
      int before = walkers_[k][s[k]].carrier;
      int after = walkers_[k][mv.next[k]].carrier;
      if (after >= 0 && after != before) result.paths[k].push_back(after);
    }
    s = mv.next;
  }
  for (const auto& [disk, w] : paid) {
    result.disks.push_back(disk);
    result.weight += w;
  }
  result.states = static_cast<int64_t>(memo_.size());
  if (options_.trace) {
    for (const State& st : MemoizedStates()) {
      const Memo& memo = memo_.at(Key(st));
      *options_.trace << "{\"state\": [";
      for (size_t k = 0; k < st.size(); ++k) {
        *options_.trace << (k ? ", " : "") << st[k];
      }
      *options_.trace << "], \"value\": "
                      << (memo.value == kInf ? std::string("null")
                                             : FormatDouble(memo.value))
                      << ", \"choice\": " << memo.choice << "}\n";
    }
  }
  return result;
}

DpResult SolveComponent(const DpProblem& problem, DpOptions options) {
  DpSolver solver(problem, options);
  return solver.Solve();
}

DpResult SolveTwo(const DpSubstructure& a, const DpSubstructure& b,
                  DpOptions options) {
  DpProblem problem{{a, b}};
  return SolveComponent(problem, options);
}

}  // namespace udc
