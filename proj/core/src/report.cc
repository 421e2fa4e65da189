#include "udc/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace udc {

using nlohmann::json;

std::string InstanceDigest(const Instance& instance) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : InstanceToJson(instance)) {
    h = (h ^ c) * 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<double> RunReport::ratio() const {
  if (!oracle_weight) return std::nullopt;
  if (*oracle_weight == 0.0) return weight == 0.0 ? 1.0 : INFINITY;
  return weight / *oracle_weight;
}

namespace {

json ChecksJson(const std::vector<CheckResult>& results) {
  json out = json::array();
  for (const CheckResult& r : results) {
    out.push_back({{"name", r.name},
                   {"checked", r.checked},
                   {"passed", r.failures.empty()},
                   {"failures", r.failures}});
  }
  return out;
}

}  // namespace

std::string ReportToJson(const RunReport& report) {
  json j;
  j["instance_digest"] = report.digest;
  j["algorithm"] = report.algorithm;
  j["config"] = report.config;
  j["weight"] = report.weight;
  j["size"] = report.size;
  if (report.oracle_weight) {
    j["oracle_weight"] = *report.oracle_weight;
    std::optional<double> r = report.ratio();
    if (std::isfinite(*r)) j["ratio"] = *r;
  }
  if (report.wall_seconds) j["wall_seconds"] = *report.wall_seconds;
  j["ledger"] = report.ledger;
  j["stats"] = report.stats;
  j["checks"] = ChecksJson(report.checks);
  return j.dump(2) + "\n";
}

VerifyReport VerifySolution(const Instance& instance, const Solution& solution) {
  VerifyReport out;
  out.digest = InstanceDigest(instance);
  std::vector<int> ids;
  for (int id : solution.disk_ids) {
    if (id < 0 || id >= instance.num_disks()) {
      out.unknown_disks.push_back(id);
    } else {
      ids.push_back(id);
    }
  }
  for (int p = 0; p < instance.num_points(); ++p) {
    bool hit = false;
    for (int id : ids) {
      if (PointInDisk(instance.points[p], instance.disks[id])) {
        hit = true;
        break;
      }
    }
    if (!hit) out.uncovered_points.push_back(p);
  }
  if (out.unknown_disks.empty()) {
    double w = CanonicalWeight(instance, ids);
    out.weight_matches =
        std::fabs(w - solution.total_weight) <= 1e-9 * std::max(1.0, std::fabs(w));
  }
  return out;
}

std::string VerifyToJson(const VerifyReport& report) {
  json j;
  j["instance_digest"] = report.digest;
  j["ok"] = report.ok();
  j["coverage"] = {{"ok", report.covered()},
                   {"unknown_disks", report.unknown_disks},
                   {"uncovered_points", report.uncovered_points}};
  j["weight_matches"] = report.weight_matches;
  j["deep"] = report.deep;
  j["checks"] = ChecksJson(report.checks.results);
  return j.dump(2) + "\n";
}

void MergeChecks(CheckReport& into, const CheckReport& from) {
  for (const CheckResult& r : from.results) {
    auto it = std::find_if(into.results.begin(), into.results.end(),
                           [&](const CheckResult& x) { return x.name == r.name; });
    if (it == into.results.end()) {
      into.results.push_back(r);
      continue;
    }
    it->checked += r.checked;
    it->failures.insert(it->failures.end(), r.failures.begin(), r.failures.end());
  }
}

}  // namespace udc
