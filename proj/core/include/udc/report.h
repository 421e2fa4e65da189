// Machine-readable run and verification reports for the command-line tool.

#ifndef UDC_REPORT_H_
#define UDC_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udc/checks.h"
#include "udc/instance.h"

namespace udc {

// FNV-1a over the canonical JSON form, as "fnv1a64:<16 hex digits>".
std::string InstanceDigest(const Instance& instance);

struct RunReport {
  std::string digest;
  std::string algorithm;
  std::map<std::string, std::string> config;
  double weight = 0.0;
  int size = 0;
  std::optional<double> oracle_weight;  // set only when the oracle ran
  std::optional<double> wall_seconds;   // set only on request
  std::map<std::string, int64_t> ledger;
  std::map<std::string, int64_t> stats;
  std::vector<CheckResult> checks;

  std::optional<double> ratio() const;
};

// Keys sorted, two-space indent, trailing newline.
std::string ReportToJson(const RunReport& report);

struct VerifyReport {
  std::string digest;
  std::vector<int> unknown_disks;     // ids not in the instance
  std::vector<int> uncovered_points;
  bool weight_matches = true;
  bool deep = false;
  CheckReport checks;

  bool covered() const { return unknown_disks.empty() && uncovered_points.empty(); }
  bool ok() const { return covered() && weight_matches && checks.ok(); }
};

VerifyReport VerifySolution(const Instance& instance, const Solution& solution);
std::string VerifyToJson(const VerifyReport& report);

// Sums checks of the same name; order of first appearance is kept.
void MergeChecks(CheckReport& into, const CheckReport& from);

}  // namespace udc

#endif  // UDC_REPORT_H_
