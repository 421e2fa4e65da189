// Property predicates over a layout: the builder uses them to find the next
// repair, the verifier replays them on the final state.

#ifndef UDC_CHECKS_H_
#define UDC_CHECKS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udc/hbuilder.h"
#include "udc/substructures.h"

namespace udc {

bool OrderSeparable(const Layout& layout, std::span<const int> first,
                    std::span<const int> second);

struct SelfIntersection {
  int sub = -1;
  int a = -1;
  int c = -1;
  int point = -1;
};
// Remaining points covered by two arcs of one substructure that never cross.
std::vector<SelfIntersection> FindSelfIntersections(const Layout& layout,
                                                    std::span<const Disk> disks,
                                                    int sub);

struct DoubleCrossing {
  int sub = -1;
  int a = -1;
  int c = -1;
};
// Arc pairs crossing more than once outside H.
std::vector<DoubleCrossing> FindDoubleCrossings(const Layout& layout,
                                                std::span<const Disk> disks,
                                                int sub);

// Substructures claiming each remaining point.
std::vector<std::vector<int>> PointOwners(const Layout& layout);

struct OrderViolation {
  int s = -1, t = -1;
  int p1 = -1, p2 = -1;
  int a1 = -1, a2 = -1, b1 = -1, b2 = -1;
};
// Points shared by substructures s and t whose arcs order them oppositely.
std::optional<OrderViolation> FindPointOrderViolation(const Layout& layout, int s,
                                                      int t);

// Letters of the envelope of `sub`: 0 where no other substructure shares the
// arc's points, otherwise 1 + the index of the sharing substructure in
// `others`; -1 when two of them share it.
std::vector<int> EnvelopeLabels(const Layout& layout, std::span<const int> envelope,
                                std::span<const int> others);
// Replaces each maximal stretch of letters i and 0 that starts and ends with
// i by a single i, then collapses runs. HasAbabPattern reports whether an
// a..b..a..b pattern appears.
std::vector<int> CompressLabels(std::span<const int> labels);
bool HasAbabPattern(std::span<const int> compressed);

struct CheckResult {
  std::string name;
  int checked = 0;
  std::vector<std::string> failures;
};

struct CheckReport {
  std::vector<CheckResult> results;
  bool ok() const;
  int failures() const;
};

// Runs angle, P1-P4, single intersection and ledger bound checks on a built H.
CheckReport CheckHResult(const HResult& result, std::span<const Disk> disks,
                         int K);

}  // namespace udc

#endif  // UDC_CHECKS_H_
