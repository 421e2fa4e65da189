#include "udc/ptas.h"

#include <algorithm>
#include <mutex>

#include "udc/report.h"

namespace udc {

Solution PtasSolve(const Instance& instance, const PtasConfig& config,
                   PtasStats* stats) {
  std::mutex mu;
  BlockStats blocks;
  BlockSolver solver = [&](const Instance& sub, const Box& box) {
    BlockStats local;
    Solution s = SolveBlock(sub, box, config.block, &local);
    std::lock_guard<std::mutex> lock(mu);
    blocks.Merge(local);
    return s;
  };
  ShiftStats shift;
  Solution s = ShiftedSolve(instance, config.L, solver, config.threads, &shift);
  if (stats) {
    stats->shift = shift;
    stats->blocks = blocks;
  }
  return s;
}

CheckReport DeepVerify(const Instance& instance, const Solution& solution,
                       const PtasConfig& config) {
  CheckReport report;
  for (int shift = 0; shift < config.L; ++shift) {
    for (const Block& block : Decompose(instance, config.L, shift).blocks) {
      SubInstance sub = ExtractBlock(instance, block);
      MergeChecks(report, DeepCheckGuess(sub.instance, sub.box, {}, config.block));
      std::vector<int> guess;
      for (size_t local = 0; local < sub.disk_ids.size(); ++local) {
        auto it = solution.trace.find(sub.disk_ids[local]);
        if (it != solution.trace.end() && it->second == StageTag::kGuess) {
          guess.push_back(static_cast<int>(local));
        }
      }
      if (!guess.empty() && static_cast<int>(guess.size()) <= config.block.C) {
        MergeChecks(report, DeepCheckGuess(sub.instance, sub.box, guess, config.block));
      }
    }
  }
  return report;
}

}  // namespace udc
