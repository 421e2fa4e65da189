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

#include "udc/blocksolver.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "udc/baselines.h"

namespace udc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxJitterAttempts = 3;
}  // namespace

void BlockStats::Merge(const BlockStats& o) {
  guesses += o.guesses;
  skipped_weight += o.skipped_weight;
  pruned_bound += o.pruned_bound;
  infeasible += o.infeasible;
  evaluated += o.evaluated;
  cycles += o.cycles;
  no_path += o.no_path;
  degenerate += o.degenerate;
  budget += o.budget;
  assembly_failures += o.assembly_failures;
  dp_repairs += o.dp_repairs;
  dp_states += o.dp_states;
  ledger_total += o.ledger_total;
  max_ledger = std::max(max_ledger, o.max_ledger);
  for (const auto& [op, n] : o.cut_ops) cut_ops[op] += n;
}

void ForEachSubset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<int>> CandidateGuesses(int n, int C) {
  std::vector<std::vector<int>> out;
  ForEachSubset(n, C, [&](const std::vector<int>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

SquareGrid GridFor(const Box& box, const BlockConfig& config) {
  if (config.mu > 0) {
    int K = std::max(1, static_cast<int>(std::ceil(box.side / config.mu - 1e-9)));
    return {box.side / K, K, {box.x0, box.y0}};
  }
  return BuildGrid(box, config.eps);
}

std::vector<int> GuessPool(const Instance& instance, const std::vector<int>& guess,
                           PointSet* left_out, bool prune_dominated) {
  int m = instance.num_points();
  PointSet left(m);
  for (int p = 0; p < m; ++p) left.Set(p);
  double w_t = kInf;
  std::vector<char> in_guess(instance.num_disks(), 0);
  for (int g : guess) {
    in_guess[g] = 1;
    w_t = std::min(w_t, instance.disks[g].weight);
    for (int p = 0; p < m; ++p) {
      if (PointInDisk(instance.points[p], instance.disks[g])) left.Reset(p);
    }
  }
  std::vector<int> useful;
  std::vector<PointSet> cov;
  for (const Disk& d : instance.disks) {
    if (in_guess[d.id] || d.weight > w_t) continue;
    PointSet c(m);
    for (int p : left.Elements()) {
      if (PointInDisk(instance.points[p], d)) c.Set(p);
    }
    if (!c.Any()) continue;
    useful.push_back(d.id);
    cov.push_back(std::move(c));
  }
  std::vector<int> pool;
  for (size_t i = 0; i < useful.size(); ++i) {
    const Disk& d = instance.disks[useful[i]];
    bool dominated = false;
    for (size_t j = 0; prune_dominated && j < useful.size() && !dominated; ++j) {
      if (i == j || !cov[i].SubsetOf(cov[j])) continue;
      const Disk& e = instance.disks[useful[j]];
      // Equal coverage and weight: keep the smaller id.
      bool same = cov[j].SubsetOf(cov[i]) && e.weight == d.weight;
      dominated = same ? e.id < d.id : e.weight <= d.weight;
    }
    if (!dominated) pool.push_back(d.id);
  }
  if (left_out) *left_out = std::move(left);
  return pool;
}

Solution AssembleBlockSolution(const Instance& instance, const std::vector<int>& guess,
                               const HResult& h, const std::vector<int>& dp_disks) {
  std::map<int, StageTag> tags;
  for (int d : dp_disks) tags[d] = StageTag::kDp;
  for (int d : h.cut_disks) tags[d] = StageTag::kCut;
  for (int d : h.gadget_disks) tags[d] = StageTag::kGadget;
  for (int d : guess) tags[d] = StageTag::kGuess;
  std::vector<int> ids;
  for (const auto& [d, tag] : tags) ids.push_back(d);
  if (!IsCover(instance, ids)) {
    throw InfeasibleAssembly("assembled block solution leaves a point uncovered");
  }
  Solution s = MakeSolution(instance, ids, StageTag::kDp);
  s.trace = tags;
  return s;
}

namespace {

void PruneRedundant(const Instance& instance, Solution& s) {
  std::vector<int> order = s.disk_ids;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double wa = instance.disks[a].weight, wb = instance.disks[b].weight;
    if (wa != wb) return wa > wb;
    return a > b;
  });
  std::vector<int> keep = s.disk_ids;
  for (int d : order) {
    std::vector<int> trial;
    for (int k : keep) {
      if (k != d) trial.push_back(k);
    }
    if (IsCover(instance, trial)) keep = std::move(trial);
  }
  if (keep.size() == s.disk_ids.size()) return;
  std::map<int, StageTag> trace;
  for (int d : keep) trace[d] = s.trace.at(d);
  s = MakeSolution(instance, keep, StageTag::kDp);
  s.trace = std::move(trace);
}

// Cheapest cover with at most C disks, or an empty solution with infinite
// weight.
Solution StageA(const Instance& instance, int C, int* size) {
  int m = instance.num_points();
  Solution best;
  best.total_weight = kInf;
  *size = -1;
  if (m == 0) {
    best = MakeSolution(instance, {}, StageTag::kGuess);
    *size = 0;
    return best;
  }
  std::vector<PointSet> cov;
  for (const Disk& d : instance.disks) {
    PointSet c(m);
    for (int p = 0; p < m; ++p) {
      if (PointInDisk(instance.points[p], d)) c.Set(p);
    }
    cov.push_back(std::move(c));
  }
  int n = instance.num_disks();
  for (int k = 1; k <= std::min(C, n); ++k) {
    ForEachSubset(n, k, [&](const std::vector<int>& s) {
      double w = CanonicalWeight(instance, s);
      if (!WeightLess(w, best.total_weight)) return true;
      PointSet u(m);
      for (int d : s) u |= cov[d];
      if (u.Count() == m) {
        best = MakeSolution(instance, s, StageTag::kGuess);
        *size = k;
      }
      return true;
    });
  }
  return best;
}

GuessEvaluation EvaluateOnce(const Instance& instance, const Instance& geometry,
                             const Box& box, const std::vector<int>& guess,
                             const std::vector<int>& pool, const PointSet& left,
                             const BlockConfig& config, std::ostream* dp_trace) {
  GuessEvaluation ev;
  ev.pool = pool;
  SquareGrid grid = GridFor(box, config);
  ev.K = grid.K;
  HInput in;
  in.disks = geometry.disks;
  in.points = geometry.points;
  in.done = PointSet(instance.num_points());
  for (int p = 0; p < instance.num_points(); ++p) {
    if (!left.Test(p)) in.done.Set(p);
  }
  in.pool = pool;
  in.grid = grid;
  HBuilderConfig hc;
  hc.angle_cap = config.angle_cap;
  hc.isolate_regions = config.isolate_regions;
  for (int repair = 0;; ++repair) {
    ev.h = BuildH(in, hc);
    std::vector<int> chosen;
    int failed = -1;
    for (size_t c = 0; c < ev.h.components.size() && failed < 0; ++c) {
      DpProblem problem = ToDpProblem(ev.h, geometry.disks, ev.h.components[c]);
      DpOptions options;
      options.state_budget = config.state_budget;
      options.trace = dp_trace;
      try {
        DpResult r = SolveComponent(problem, options);
        ev.dp_states += r.states;
        chosen.insert(chosen.end(), r.disks.begin(), r.disks.end());
      } catch (const NoFeasiblePath&) {
        failed = static_cast<int>(c);
      } catch (const StuckState&) {
        failed = static_cast<int>(c);
      }
    }
    if (failed < 0) {
      ev.solution = AssembleBlockSolution(instance, guess, ev.h, chosen);
      ev.ok = true;
      return ev;
    }
    if (repair >= config.max_dp_repairs) throw NoFeasiblePath("dp repairs exhausted");
    // Put the arc disk claiming the most points of the failed component in H.
    const Layout& L = ev.h.layout;
    int best = -1, best_count = -1;
    for (int s : ev.h.components[failed]) {
      for (int a : L.subs[s].arcs) {
        int d = L.arcs[a].disk;
        int count = L.arcs[a].points.Count();
        if (count > best_count ||
            (count == best_count && instance.disks[d].weight < instance.disks[best].weight)) {
          best = d;
          best_count = count;
        }
      }
    }
    in.forced.push_back(best);
    ++ev.dp_repairs;
  }
}

}  // namespace

GuessEvaluation EvaluateGuess(const Instance& instance, const Box& box,
                              const std::vector<int>& guess, const BlockConfig& config,
                              std::ostream* dp_trace) {
  PointSet left;
  std::vector<int> pool = GuessPool(instance, guess, &left, config.prune_dominated);
  GuessEvaluation ev;
  ev.pool = pool;
  ev.w_t = kInf;
  for (int g : guess) ev.w_t = std::min(ev.w_t, instance.disks[g].weight);
  Instance geometry = instance;
  for (int attempt = 0; attempt <= kMaxJitterAttempts; ++attempt) {
    if (attempt > 0) {
      for (Disk& d : geometry.disks) {
        d.center = instance.disks[d.id].center + JitterFor(d.id, attempt);
      }
    }
    try {
      GuessEvaluation out =
          EvaluateOnce(instance, geometry, box, guess, pool, left, config, dp_trace);
      out.w_t = ev.w_t;
      out.attempts = attempt + 1;
      return out;
    } catch (const DegenerateArrangement& e) {
      ev.failure = std::string("degenerate: ") + e.what();
    } catch (const CycleDetected& e) {
      ev.failure = std::string("cycle: ") + e.what();
      ev.attempts = attempt + 1;
      return ev;
    } catch (const NoFeasiblePath& e) {
      ev.failure = std::string("no_path: ") + e.what();
      ev.attempts = attempt + 1;
      return ev;
    } catch (const StateBudgetExceeded& e) {
      ev.failure = std::string("budget: ") + e.what();
      ev.attempts = attempt + 1;
      return ev;
    } catch (const InfeasibleAssembly& e) {
      ev.failure = std::string("assembly: ") + e.what();
      ev.attempts = attempt + 1;
      return ev;
    }
  }
  ev.attempts = kMaxJitterAttempts + 1;
  return ev;
}

Solution SolveBlock(const Instance& instance, const Box& box, const BlockConfig& config,
                    BlockStats* stats) {
  BlockStats local;
  int m = instance.num_points();
  int size = -1;
  Solution best = StageA(instance, config.C, &size);
  local.stage_a_size = size;
  int n = instance.num_disks();

  std::vector<PointSet> cov;
  for (const Disk& d : instance.disks) {
    PointSet c(m);
    for (int p = 0; p < m; ++p) {
      if (PointInDisk(instance.points[p], d)) c.Set(p);
    }
    cov.push_back(std::move(c));
  }
  ForEachSubset(n, std::min(config.C, n), [&](const std::vector<int>& guess) {
    ++local.guesses;
    double wg = CanonicalWeight(instance, guess);
    if (!WeightLess(wg, best.total_weight)) {
      ++local.skipped_weight;
      return true;
    }
    PointSet left;
    std::vector<int> pool = GuessPool(instance, guess, &left, config.prune_dominated);
    // Per-point price bound over the pool.
    double lb = 0.0;
    for (int p : left.Elements()) {
      double price = kInf;
      for (int d : pool) {
        if (!cov[d].Test(p)) continue;
        price = std::min(price, instance.disks[d].weight / cov[d].CountAnd(left));
      }
      lb += price;
    }
    if (lb == kInf) {
      ++local.infeasible;
      return true;
    }
    if (!WeightLess(wg + lb * (1.0 - 1e-12), best.total_weight)) {
      ++local.pruned_bound;
      return true;
    }
    ++local.evaluated;
    GuessEvaluation ev = EvaluateGuess(instance, box, guess, config);
    local.dp_repairs += ev.dp_repairs;
    local.dp_states += ev.dp_states;
    if (!ev.ok) {
      const std::string& f = ev.failure;
      if (f.rfind("cycle", 0) == 0) ++local.cycles;
      else if (f.rfind("no_path", 0) == 0) ++local.no_path;
      else if (f.rfind("degenerate", 0) == 0) ++local.degenerate;
      else if (f.rfind("budget", 0) == 0) ++local.budget;
      else ++local.assembly_failures;
      return true;
    }
    local.ledger_total += ev.h.ledger.total;
    local.max_ledger = std::max(local.max_ledger, ev.h.ledger.total);
    for (const auto& [op, n] : ev.h.ledger.counts) local.cut_ops[op] += n;
    Solution s = ev.solution;
    if (config.prune_redundant) PruneRedundant(instance, s);
    if (WeightLess(s.total_weight, best.total_weight) ||
        (!WeightLess(best.total_weight, s.total_weight) && s.disk_ids < best.disk_ids)) {
      best = std::move(s);
    }
    return true;
  });
  if (stats) {
    stats->Merge(local);
    stats->stage_a_size = local.stage_a_size;
  }
  if (best.total_weight == kInf) {
    throw Infeasible("no candidate yields a feasible cover of the block");
  }
  return best;
}

CheckReport DeepCheckGuess(const Instance& instance, const Box& box,
                           const std::vector<int>& guess, const BlockConfig& config) {
  GuessEvaluation ev = EvaluateGuess(instance, box, guess, config);
  CheckReport report;
  if (!ev.ok) {
    if (ev.failure.rfind("no_path", 0) == 0) return report;  // wrong guess, nothing built
    report.results.push_back({"pipeline", 1, {ev.failure}});
    return report;
  }
  // Checks run on the geometry the pipeline used (jittered if it retried).
  Instance geometry = instance;
  if (ev.attempts > 1) {
    for (Disk& d : geometry.disks) {
      d.center = instance.disks[d.id].center + JitterFor(d.id, ev.attempts - 1);
    }
  }
  return CheckHResult(ev.h, geometry.disks, ev.K);
}

}  // namespace udc
