// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are pinned
// below. Pass a criterion number to run only that one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "support/fixtures.h"
#include "support/oracles.h"
#include "support/process.h"
#include "udc/baselines.h"
#include "udc/blocksolver.h"
#include "udc/checks.h"
#include "udc/dp.h"
#include "udc/ptas.h"
#include "udc/shifting.h"

namespace udc {
namespace {

// Relative slack for ratio comparisons of sums of the same doubles.
constexpr double kRatioSlack = 1e-9;
constexpr double kMaxRatio = 2.0;
constexpr double kGoodRatio = 1.25;
constexpr double kGoodShare = 0.90;
constexpr int kShiftL = 6;
constexpr int kLedgerConstant = 64;
constexpr double kCriterion1Seconds = 60.0;
constexpr double kCriterion2Seconds = 600.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string Fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Oracle instances shared by criteria 1, 2 and 7: feasible, n <= 14, m <= 25.
std::vector<Instance> OracleInstances(double side, int count, bool small_opt) {
  std::vector<Instance> out;
  for (uint64_t seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    Instance inst = testing::SmallInstance(seed, 10 + seed % 5, 15 + seed % 11, side);
    if (!UncoverablePoints(inst).empty()) continue;
    if (small_opt && ExactSolve(inst).disk_ids.size() > 3) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

PtasConfig DeskPtas() {
  PtasConfig c;
  c.block.eps = 1.0;
  c.block.C = 3;
  c.L = kShiftL;
  return c;
}

Outcome Criterion1() {
  std::vector<Instance> insts = OracleInstances(3.0, 300, true);
  auto t0 = std::chrono::steady_clock::now();
  int mismatches = 0, oracle_mismatches = 0;
  for (const Instance& inst : insts) {
    double exact = ExactSolve(inst).total_weight;
    if (PtasSolve(inst, DeskPtas()).total_weight != exact) ++mismatches;
    if (testing::BruteForceCover(inst).total_weight != exact) ++oracle_mismatches;
  }
  double secs = Seconds(t0);
  return {mismatches == 0 && oracle_mismatches == 0 && secs < kCriterion1Seconds,
          Fmt("%zu instances, ptas!=exact %d, exact!=brute force %d, %.1fs (limit %.0fs)",
              insts.size(), mismatches, oracle_mismatches, secs, kCriterion1Seconds)};
}

Outcome Criterion2And7(bool greedy) {
  std::vector<Instance> insts = OracleInstances(4.0, 300, false);
  auto t0 = std::chrono::steady_clock::now();
  int over_max = 0, good = 0, greedy_over = 0;
  double worst = 0.0, worst_greedy = 0.0;
  for (const Instance& inst : insts) {
    double exact = ExactSolve(inst).total_weight;
    if (greedy) {
      double g = GreedySolve(inst).total_weight / exact;
      double h = testing::HarmonicNumber(inst.num_points());
      worst_greedy = std::max(worst_greedy, g / h);
      if (g > h * (1.0 + kRatioSlack)) ++greedy_over;
      continue;
    }
    double r = PtasSolve(inst, DeskPtas()).total_weight / exact;
    worst = std::max(worst, r);
    if (r > kMaxRatio * (1.0 + kRatioSlack)) ++over_max;
    if (r <= kGoodRatio * (1.0 + kRatioSlack)) ++good;
  }
  double secs = Seconds(t0);
  if (greedy) {
    return {greedy_over == 0,
            Fmt("%zu instances, greedy/exact > H_m in %d, max (greedy/exact)/H_m %.3f",
                insts.size(), greedy_over, worst_greedy)};
  }
  double share = static_cast<double>(good) / insts.size();
  return {over_max == 0 && share >= kGoodShare && secs < kCriterion2Seconds,
          Fmt("%zu instances, >%.2fx %d, <=%.2fx share %.3f (need %.2f), worst %.4f, %.1fs",
              insts.size(), kMaxRatio, over_max, kGoodRatio, share, kGoodShare, worst, secs)};
}

Outcome Criterion3() {
  int violations = 0, below = 0;
  double worst = 0.0;
  BlockSolver exact = [](const Instance& inst, const Box&) { return ExactSolve(inst); };
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Instance inst = testing::TwoBlockInstance(seed, 18, 30);
    double global = ExactSolve(inst).total_weight;
    double shifted = ShiftedSolve(inst, kShiftL, exact).total_weight;
    double r = shifted / global;
    worst = std::max(worst, r);
    if (r > (1.0 + 4.0 / kShiftL) * (1.0 + kRatioSlack)) ++violations;
    if (r < 1.0 - kRatioSlack) ++below;
  }
  return {violations == 0 && below == 0,
          Fmt("200 seeds, over (1+4/L) %d, below exact %d, worst ratio %.4f", violations,
              below, worst)};
}

bool DpEquals(const DpProblem& p, double* dp_weight, double* oracle_weight) {
  *oracle_weight = testing::ExhaustiveDp(p).weight;
  try {
    *dp_weight = SolveComponent(p).weight;
  } catch (const NoFeasiblePath&) {
    *dp_weight = INFINITY;
  }
  return *dp_weight == *oracle_weight;
}

Outcome Criterion4() {
  int single_bad = 0, pair_bad = 0, solve_two_bad = 0, infinite = 0;
  double d, o;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    DpProblem p;
    p.subs.push_back(testing::CapFixture(seed, 1 + seed % 10, 6, 0, 0));
    if (!DpEquals(p, &d, &o)) ++single_bad;
    if (std::isinf(o)) ++infinite;
  }
  for (uint64_t seed = 0; seed < 50; ++seed) {
    DpProblem p = testing::OverlapFixture(seed, 2 + seed % 7, 4, 2);
    if (!DpEquals(p, &d, &o)) ++pair_bad;
    if (std::isinf(o)) {
      ++infinite;
      continue;
    }
    if (SolveTwo(p.subs[0], p.subs[1]).weight != o) ++solve_two_bad;
  }
  return {single_bad == 0 && pair_bad == 0 && solve_two_bad == 0,
          Fmt("single mismatches %d/100, pair mismatches %d/50, solve_two mismatches %d, "
              "infeasible fixtures %d",
              single_bad, pair_bad, solve_two_bad, infinite)};
}

Outcome Criterion5() {
  int bad = 0, not_both = 0, double_paid = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    DpProblem p = testing::SiblingFixture(seed, 2 + seed % 5);
    testing::ExhaustiveResult o = testing::ExhaustiveDp(p);
    // The optimum must ride the sibling disk on both sides.
    for (int k = 0; k < 2; ++k) {
      bool rides = false;
      for (int a : o.chains[k]) rides |= p.subs[k].arcs[a].disk == testing::kSiblingDisk;
      if (!rides) ++not_both;
    }
    DpResult r;
    try {
      r = SolveComponent(p);
    } catch (const std::exception&) {
      ++bad;
      continue;
    }
    if (r.weight != o.weight) ++bad;
    if (std::count(r.disks.begin(), r.disks.end(), testing::kSiblingDisk) != 1) ++double_paid;
    int sibling_paths = 0;
    for (size_t k = 0; k < r.paths.size(); ++k) {
      for (int a : r.paths[k]) sibling_paths += p.subs[k].arcs[a].disk == testing::kSiblingDisk;
    }
    if (sibling_paths != 2) ++not_both;
  }
  return {bad == 0 && not_both == 0 && double_paid == 0,
          Fmt("20 fixtures, weight mismatches %d, sibling not ridden on both sides %d, "
              "sibling not paid exactly once %d",
              bad, not_both, double_paid)};
}

Outcome Criterion6() {
  std::map<std::string, int> failures;
  int pipeline = 0, runs = 0, max_ledger = 0;
  double max_ledger_share = 0.0;
  Box box{-2, -2, 7};
  for (double eps : {0.5, 1.0}) {
    for (uint64_t seed = 0; seed < 500; ++seed) {
      Instance inst = testing::ClusteredInstance(seed, 80, 60, eps, 0.8);
      BlockConfig config;
      config.eps = eps;
      config.prune_dominated = false;
      GuessEvaluation ev = EvaluateGuess(inst, box, {}, config);
      ++runs;
      if (!ev.ok) {
        ++pipeline;
        continue;
      }
      CheckReport report = CheckHResult(ev.h, inst.disks, ev.K);
      for (const CheckResult& r : report.results) {
        if (!r.failures.empty()) failures[r.name] += static_cast<int>(r.failures.size());
      }
      if (ev.h.ledger.total > kLedgerConstant * ev.K * ev.K) ++failures["ledger_bound"];
      max_ledger = std::max(max_ledger, ev.h.ledger.total);
      max_ledger_share = std::max(max_ledger_share,
                                  ev.h.ledger.total / double(ev.K * ev.K));
    }
  }
  std::string names;
  int total = 0;
  for (const auto& [name, n] : failures) {
    names += " " + name + "=" + std::to_string(n);
    total += n;
  }
  return {pipeline == 0 && total == 0,
          Fmt("%d runs, pipeline failures %d, check violations %d%s, max ledger %d "
              "(max ledger/K^2 %.3f)",
              runs, pipeline, total, names.c_str(), max_ledger, max_ledger_share)};
}

Outcome Criterion8() {
  int not_dominating = 0, weight_mismatch = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    int n = 10 + static_cast<int>(seed % 31);
    std::vector<Vertex> v = testing::RandomUdg(seed, n, 2.0 + 0.1 * (seed % 31));
    Instance inst = FromMwds(v);
    auto adj = testing::UdgAdjacency(v);
    for (const Solution& s : {ExactSolve(inst), GreedySolve(inst), PtasSolve(inst, DeskPtas())}) {
      if (!testing::IsDominatingSet(adj, s.disk_ids)) ++not_dominating;
    }
    if (ExactSolve(inst).total_weight != testing::BruteForceMwds(v)) ++weight_mismatch;
  }
  return {not_dominating == 0 && weight_mismatch == 0,
          Fmt("100 graphs, non-dominating solutions %d, exact WUDC != MWDS %d", not_dominating,
              weight_mismatch)};
}

Outcome Criterion9() {
#ifndef UDC_TOOL_PATH
  return {false, "tool not built"};
#else
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "udc_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string tool = UDC_TOOL_PATH;
  std::vector<std::string> instances;
  for (int i = 0; i < 3; ++i) {
    std::string path = (dir / ("inst" + std::to_string(i) + ".json")).string();
    // First feasible seed from 100 * i.
    for (int seed = 100 * i; seed < 100 * i + 100; ++seed) {
      testing::RunProcess(tool, {"gen", "--n", std::to_string(14 + 4 * i), "--m", "25",
                                 "--side", std::to_string(3 + i), "--seed",
                                 std::to_string(seed), "--weights", "uniform:1:10", "-o", path});
      if (UncoverablePoints(Load(path)).empty()) break;
    }
    instances.push_back(path);
  }
  std::vector<std::vector<std::string>> configs = {
      {"--algo", "exact"},
      {"--algo", "greedy"},
      {"--algo", "ptas"},
      {"--algo", "ptas", "--eps", "0.5"},
      {"--algo", "ptas", "--C", "2"},
      {"--algo", "ptas", "--L", "4"},
      {"--algo", "ptas", "--threads", "3"},
      {"--algo", "ptas", "--oracle"},
      {"--algo", "ptas", "--deep"},
      {"--algo", "greedy", "--oracle"},
  };
  int differing = 0, failed = 0;
  for (size_t c = 0; c < configs.size(); ++c) {
    const std::string& inst = instances[c % instances.size()];
    std::string first_report, first_solution;
    for (int rep = 0; rep < 10; ++rep) {
      std::string sol = (dir / ("sol" + std::to_string(c) + ".json")).string();
      std::vector<std::string> args = {"solve", inst, "-o", sol};
      args.insert(args.end(), configs[c].begin(), configs[c].end());
      testing::ProcessResult r = testing::RunProcess(tool, args);
      if (r.exit_code != 0) ++failed;
      std::string solution = testing::ReadFileOrEmpty(sol);
      fs::remove(sol);
      if (rep == 0) {
        first_report = r.out;
        first_solution = solution;
      } else if (r.out != first_report || solution != first_solution) {
        ++differing;
      }
    }
  }
  fs::remove_all(dir);
  return {differing == 0 && failed == 0,
          Fmt("10 configurations x 10 repeats, differing outputs %d, failed runs %d",
              differing, failed)};
#endif
}

}  // namespace
}  // namespace udc

int main(int argc, char** argv) {
  using Criterion = std::function<udc::Outcome()>;
  std::vector<std::pair<int, Criterion>> all = {
      {1, udc::Criterion1},
      {2, [] { return udc::Criterion2And7(false); }},
      {3, udc::Criterion3},
      {4, udc::Criterion4},
      {5, udc::Criterion5},
      {6, udc::Criterion6},
      {7, [] { return udc::Criterion2And7(true); }},
      {8, udc::Criterion8},
      {9, udc::Criterion9},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool ok = true;
  for (const auto& [id, run] : all) {
    if (!only.empty() && !only.count(id)) continue;
    udc::Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    ok &= o.pass;
  }
  return ok ? 0 : 1;
}
