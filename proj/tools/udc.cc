// udc: generate, solve, verify, render and benchmark unit disk cover
// instances.
//
// Exit codes: 0 ok, 2 usage or unreadable input, 3 infeasible instance,
// 4 verification failure, 5 internal invariant violation or exhausted budget.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "udc/baselines.h"
#include "udc/format.h"
#include "udc/instance.h"
#include "udc/ptas.h"
#include "udc/report.h"
#include "udc/svg.h"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInfeasible = 3;
constexpr int kVerifyFailed = 4;
constexpr int kInternal = 5;

struct SolveFlags {
  std::string algo = "ptas";
  double eps = 1.0;
  int C = 3;
  int L = udc::kDefaultBlockSide;
  double budget = static_cast<double>(udc::kDefaultNodeBudget);
  int threads = 1;
};

void AddSolveFlags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--eps", f.eps, "accuracy parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--C", f.C, "guess size")->check(CLI::Range(1, 6));
  cmd->add_option("--L", f.L, "block side")->check(CLI::Range(3, 1000));
  cmd->add_option("--budget", f.budget, "node budget of the exact solver")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1, 256));
}

udc::PtasConfig PtasConfigFrom(const SolveFlags& f) {
  udc::PtasConfig config;
  config.block.eps = f.eps;
  config.block.C = f.C;
  config.L = f.L;
  config.threads = f.threads;
  return config;
}

bool WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::optional<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

udc::Solution RunAlgorithm(const udc::Instance& instance, const SolveFlags& f,
                           udc::RunReport& report) {
  if (f.algo == "greedy") return udc::GreedySolve(instance);
  if (f.algo == "exact") {
    int64_t nodes = 0;
    udc::Solution s = udc::ExactSolve(instance, static_cast<int64_t>(f.budget), &nodes);
    report.stats["nodes"] = nodes;
    return s;
  }
  udc::PtasStats stats;
  udc::Solution s = udc::PtasSolve(instance, PtasConfigFrom(f), &stats);
  const udc::BlockStats& b = stats.blocks;
  report.stats["best_shift"] = stats.shift.best_shift;
  report.stats["blocks_solved"] = stats.shift.blocks_solved;
  report.stats["cache_hits"] = stats.shift.cache_hits;
  report.stats["guesses"] = b.guesses;
  report.stats["guesses_skipped_weight"] = b.skipped_weight;
  report.stats["guesses_pruned_bound"] = b.pruned_bound;
  report.stats["guesses_infeasible"] = b.infeasible;
  report.stats["guesses_evaluated"] = b.evaluated;
  report.stats["failed_cycle"] = b.cycles;
  report.stats["failed_no_path"] = b.no_path;
  report.stats["failed_degenerate"] = b.degenerate;
  report.stats["failed_budget"] = b.budget;
  report.stats["failed_assembly"] = b.assembly_failures;
  report.stats["dp_states"] = b.dp_states;
  report.ledger["total"] = b.ledger_total;
  report.ledger["max_per_guess"] = b.max_ledger;
  report.ledger["dp_repair"] = b.dp_repairs;
  for (const auto& [op, n] : b.cut_ops) report.ledger["op:" + op] = n;
  return s;
}

int CmdGen(int n, int m, double side, uint64_t seed, const std::string& weights,
           const std::string& out) {
  if (const char* env = std::getenv("UDC_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "UDC_SEED: not an unsigned integer: " << env << "\n";
      return kUsage;
    }
  }
  udc::WeightSpec spec;
  try {
    spec = udc::ParseWeightSpec(weights);
  } catch (const std::exception& e) {
    std::cerr << "--weights: " << e.what() << "\n";
    return kUsage;
  }
  udc::Instance inst = udc::Generate(n, m, side, seed, spec);
  if (!WriteFile(out, udc::InstanceToJson(inst))) {
    std::cerr << "cannot write " << out << "\n";
    return kUsage;
  }
  return kOk;
}

int CmdSolve(const std::string& path, const SolveFlags& f, bool oracle, bool timing,
             bool deep, const std::string& out) {
  udc::Instance inst = udc::Load(path);
  udc::RunReport report;
  report.digest = udc::InstanceDigest(inst);
  report.algorithm = f.algo;
  report.config["algo"] = f.algo;
  if (f.algo == "ptas") {
    report.config["eps"] = udc::FormatDouble(f.eps);
    report.config["C"] = std::to_string(f.C);
    report.config["L"] = std::to_string(f.L);
    report.config["threads"] = std::to_string(f.threads);
  }
  if (f.algo == "exact" || oracle) report.config["budget"] = udc::FormatDouble(f.budget);

  std::vector<int> orphans = udc::UncoverablePoints(inst);
  if (!orphans.empty()) {
    std::cerr << "infeasible: no disk covers point";
    for (int p : orphans) std::cerr << " " << p;
    std::cerr << "\n";
    return kInfeasible;
  }
  auto t0 = std::chrono::steady_clock::now();
  udc::Solution s;
  try {
    s = RunAlgorithm(inst, f, report);
  } catch (const udc::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  report.weight = s.total_weight;
  report.size = static_cast<int>(s.disk_ids.size());
  if (timing) report.wall_seconds = secs;
  if (oracle) {
    report.oracle_weight =
        udc::ExactSolve(inst, static_cast<int64_t>(f.budget)).total_weight;
  }
  udc::VerifyReport cover = udc::VerifySolution(inst, s);
  udc::CheckResult coverage{"coverage", inst.num_points(), {}};
  for (int p : cover.uncovered_points) {
    coverage.failures.push_back("point " + std::to_string(p) + " uncovered");
  }
  report.checks.push_back(coverage);
  if (deep && f.algo == "ptas") {
    udc::CheckReport checks = udc::DeepVerify(inst, s, PtasConfigFrom(f));
    report.checks.insert(report.checks.end(), checks.results.begin(), checks.results.end());
  }
  if (!out.empty() && !WriteFile(out, udc::SolutionToJson(s))) {
    std::cerr << "cannot write " << out << "\n";
    return kUsage;
  }
  std::cout << udc::ReportToJson(report);
  for (const udc::CheckResult& r : report.checks) {
    if (!r.failures.empty()) return kInternal;
  }
  return kOk;
}

int CmdVerify(const std::string& instance_path, const std::string& solution_path,
              bool deep, const SolveFlags& f) {
  udc::Instance inst = udc::Load(instance_path);
  std::optional<std::string> text = ReadFile(solution_path);
  if (!text) {
    std::cerr << "cannot read " << solution_path << "\n";
    return kUsage;
  }
  udc::Solution s = udc::SolutionFromJson(*text);
  udc::VerifyReport report = udc::VerifySolution(inst, s);
  if (deep) {
    report.deep = true;
    report.checks = udc::DeepVerify(inst, s, PtasConfigFrom(f));
  }
  std::cout << udc::VerifyToJson(report);
  if (!report.covered() || !report.weight_matches) return kVerifyFailed;
  return report.checks.ok() ? kOk : kInternal;
}

int CmdRender(const std::string& instance_path, const std::string& solution_path,
              bool stage, double eps, const std::string& out) {
  udc::Instance inst = udc::Load(instance_path);
  udc::Solution s;
  udc::RenderOptions options;
  if (!solution_path.empty()) {
    std::optional<std::string> text = ReadFile(solution_path);
    if (!text) {
      std::cerr << "cannot read " << solution_path << "\n";
      return kUsage;
    }
    s = udc::SolutionFromJson(*text);
    options.solution = &s;
  }
  udc::GuessEvaluation ev;
  if (stage && inst.num_points() > 0) {
    // The whole instance as one block, empty guess.
    double x0 = inst.points[0].x, y0 = inst.points[0].y, x1 = x0, y1 = y0;
    for (const udc::Point& p : inst.points) {
      x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    udc::Box box{x0, y0, std::max(x1 - x0, y1 - y0)};
    udc::BlockConfig config;
    config.eps = eps;
    ev = udc::EvaluateGuess(inst, box, {}, config);
    if (ev.ok) {
      options.h = &ev.h;
    } else {
      std::cerr << "stage not drawn: " << ev.failure << "\n";
    }
  }
  if (!WriteFile(out, udc::RenderSvg(inst, options))) {
    std::cerr << "cannot write " << out << "\n";
    return kUsage;
  }
  return kOk;
}

int CmdBench(int count, int n, int m, double side, uint64_t seed, const SolveFlags& f,
             bool timing) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < count; ++i) {
    udc::Instance inst = udc::Generate(n, m, side, seed + i, udc::ParseWeightSpec("uniform:1:10"));
    nlohmann::json row;
    row["seed"] = seed + i;
    if (!udc::UncoverablePoints(inst).empty()) {
      row["feasible"] = false;
      rows.push_back(row);
      continue;
    }
    row["feasible"] = true;
    for (const char* algo : {"exact", "greedy", "ptas"}) {
      SolveFlags g = f;
      g.algo = algo;
      udc::RunReport unused;
      auto t0 = std::chrono::steady_clock::now();
      udc::Solution s = RunAlgorithm(inst, g, unused);
      double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      row[algo]["weight"] = s.total_weight;
      if (timing) row[algo]["seconds"] = secs;
    }
    row["ptas_ratio"] = row["ptas"]["weight"].get<double>() / row["exact"]["weight"].get<double>();
    row["greedy_ratio"] =
        row["greedy"]["weight"].get<double>() / row["exact"]["weight"].get<double>();
    rows.push_back(row);
  }
  std::cout << rows.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted unit disk cover toolkit"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  int n = 50, m = 100;
  double side = 4.0;
  uint64_t seed = 1;
  std::string weights = "uniform:1:10", out;
  gen->add_option("--n", n, "number of disks")->check(CLI::NonNegativeNumber);
  gen->add_option("--m", m, "number of points")->check(CLI::NonNegativeNumber);
  gen->add_option("--side", side, "side of the square")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "generator seed (UDC_SEED overrides)");
  gen->add_option("--weights", weights, "uniform:A:B or const:W");
  gen->add_option("-o,--output", out, "instance file")->required();

  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  SolveFlags flags;
  std::string instance_path, solution_path;
  bool oracle = false, timing = false, deep = false;
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--algo", flags.algo, "exact, greedy or ptas")
      ->check(CLI::IsMember({"exact", "greedy", "ptas"}));
  AddSolveFlags(solve, flags);
  solve->add_flag("--oracle", oracle, "also run the exact solver and report the ratio");
  solve->add_flag("--timing", timing, "include wall time (breaks byte-identical reports)");
  solve->add_flag("--deep", deep, "replay H for every block and report invariant checks");
  solve->add_option("-o,--output", out, "solution file");

  CLI::App* verify = app.add_subcommand("verify", "check a solution");
  verify->add_option("instance", instance_path, "instance file")->required();
  verify->add_option("solution", solution_path, "solution file")->required();
  verify->add_flag("--deep", deep, "replay H for every block and check its invariants");
  AddSolveFlags(verify, flags);

  CLI::App* render = app.add_subcommand("render", "draw an instance as SVG");
  bool stage = false;
  render->add_option("instance", instance_path, "instance file")->required();
  render->add_option("--solution", solution_path, "solution to highlight");
  render->add_flag("--stage", stage, "draw H, baselines and envelopes of the empty guess");
  render->add_option("--eps", flags.eps, "accuracy parameter for --stage")
      ->check(CLI::PositiveNumber);
  render->add_option("-o,--output", out, "SVG file")->required();

  CLI::App* bench = app.add_subcommand("bench", "compare algorithms on random instances");
  int count = 10;
  bench->add_option("--count", count, "instances")->check(CLI::NonNegativeNumber);
  bench->add_option("--n", n, "number of disks")->check(CLI::NonNegativeNumber);
  bench->add_option("--m", m, "number of points")->check(CLI::NonNegativeNumber);
  bench->add_option("--side", side, "side of the square")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "first seed");
  bench->add_flag("--timing", timing, "include per-algorithm wall time");
  AddSolveFlags(bench, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return CmdGen(n, m, side, seed, weights, out);
    if (solve->parsed()) return CmdSolve(instance_path, flags, oracle, timing, deep, out);
    if (verify->parsed()) return CmdVerify(instance_path, solution_path, deep, flags);
    if (render->parsed()) return CmdRender(instance_path, solution_path, stage, flags.eps, out);
    if (bench->parsed()) return CmdBench(count, n, m, side, seed, flags, timing);
  } catch (const udc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const udc::ValidationError& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return kUsage;
  } catch (const udc::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const udc::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
