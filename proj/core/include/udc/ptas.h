// Shifted grid of blocks, each solved by the block driver.

#ifndef UDC_PTAS_H_
#define UDC_PTAS_H_

#include "udc/blocksolver.h"
#include "udc/shifting.h"

namespace udc {

inline constexpr int kDefaultBlockSide = 6;

struct PtasConfig {
  BlockConfig block;
  int L = kDefaultBlockSide;
  int threads = 1;
};

struct PtasStats {
  ShiftStats shift;
  BlockStats blocks;
};

// Throws Infeasible when no shift yields a cover.
Solution PtasSolve(const Instance& instance, const PtasConfig& config,
                   PtasStats* stats = nullptr);

// Replays H for every block of every shift: once with the empty guess and
// once with the solution's GUESS disks that fall in the block.
CheckReport DeepVerify(const Instance& instance, const Solution& solution,
                       const PtasConfig& config);

}  // namespace udc

#endif  // UDC_PTAS_H_
