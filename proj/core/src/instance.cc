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

#include "udc/instance.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "udc/format.h"

namespace udc {

using nlohmann::json;

void Validate(const Instance& instance) {
  for (size_t i = 0; i < instance.disks.size(); ++i) {
    const Disk& d = instance.disks[i];
    if (d.id != static_cast<int>(i)) {
      throw ValidationError("disk ids must be dense 0..n-1; found id " +
                            std::to_string(d.id) + " at position " +
                            std::to_string(i));
    }
    if (!std::isfinite(d.center.x) || !std::isfinite(d.center.y) ||
        !std::isfinite(d.weight)) {
      throw ValidationError("disk " + std::to_string(d.id) +
                            " has a non-finite value");
    }
    if (d.weight < 0) {
      throw ValidationError("disk " + std::to_string(d.id) +
                            " has negative weight");
    }
  }
  for (size_t i = 0; i < instance.points.size(); ++i) {
    const Point& p = instance.points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ValidationError("point " + std::to_string(i) +
                            " has a non-finite coordinate");
    }
  }
}

const char* StageTagName(StageTag tag) {
  switch (tag) {
    case StageTag::kGuess:
      return "GUESS";
    case StageTag::kGadget:
      return "GADGET";
    case StageTag::kCut:
      return "CUT";
    case StageTag::kDp:
      return "DP";
    case StageTag::kBaseline:
      return "BASELINE";
  }
  return "BASELINE";
}

StageTag StageTagFromName(const std::string& name) {
  for (StageTag t : {StageTag::kGuess, StageTag::kGadget, StageTag::kCut,
                     StageTag::kDp, StageTag::kBaseline}) {
    if (name == StageTagName(t)) return t;
  }
  throw ParseError("unknown stage tag '" + name + "'");
}

double CanonicalWeight(const Instance& instance, std::span<const int> ids) {
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  double total = 0.0;
  for (int id : sorted) total += instance.disks[id].weight;
  return total;
}

Solution MakeSolution(const Instance& instance, std::vector<int> ids,
                      StageTag tag) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Solution s;
  s.total_weight = CanonicalWeight(instance, ids);
  for (int id : ids) s.trace[id] = tag;
  s.disk_ids = std::move(ids);
  return s;
}

bool IsCover(const Instance& instance, std::span<const int> ids, double tol) {
  for (const Point& p : instance.points) {
    bool covered = false;
    for (int id : ids) {
      if (PointInDisk(p, instance.disks[id], tol)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<int> UncoverablePoints(const Instance& instance, double tol) {
  std::vector<int> out;
  for (int i = 0; i < instance.num_points(); ++i) {
    bool covered = false;
    for (const Disk& d : instance.disks) {
      if (PointInDisk(instance.points[i], d, tol)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(i);
  }
  return out;
}

std::string InstanceToJson(const Instance& instance) {
  std::string out = "{\n  \"disks\": [";
  for (size_t i = 0; i < instance.disks.size(); ++i) {
    const Disk& d = instance.disks[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"id\": " + std::to_string(d.id) +
           ", \"x\": " + FormatDouble(d.center.x) +
           ", \"y\": " + FormatDouble(d.center.y) +
           ", \"w\": " + FormatDouble(d.weight) + "}";
  }
  out += instance.disks.empty() ? "],\n" : "\n  ],\n";
  out += "  \"points\": [";
  for (size_t i = 0; i < instance.points.size(); ++i) {
    const Point& p = instance.points[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"x\": " + FormatDouble(p.x) + ", \"y\": " + FormatDouble(p.y) +
           "}";
  }
  out += instance.points.empty() ? "],\n" : "\n  ],\n";
  out += "  \"meta\": " + json(instance.meta).dump() + "\n}\n";
  return out;
}

namespace {

std::string LineColumn(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(LineColumn(text, e.byte) + ": " + e.what());
  }
}

double NumberField(const json& obj, const std::string& key,
                   const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "." + key + ": missing field");
  if (!it->is_number()) {
    throw ParseError(where + "." + key + ": expected number");
  }
  return it->get<double>();
}

}  // namespace

Instance InstanceFromJson(const std::string& text) {
  json root = ParseJson(text);
  if (!root.is_object()) throw ParseError("top level: expected object");
  Instance inst;
  if (root.contains("disks")) {
    const json& disks = root["disks"];
    if (!disks.is_array()) throw ParseError("disks: expected array");
    for (size_t i = 0; i < disks.size(); ++i) {
      std::string where = "disks[" + std::to_string(i) + "]";
      const json& d = disks[i];
      if (!d.is_object()) throw ParseError(where + ": expected object");
      auto id = d.find("id");
      if (id == d.end() || !id->is_number_integer()) {
        throw ParseError(where + ".id: expected integer");
      }
      inst.disks.push_back({id->get<int>(),
                            {NumberField(d, "x", where), NumberField(d, "y", where)},
                            NumberField(d, "w", where)});
    }
  }
  if (root.contains("points")) {
    const json& pts = root["points"];
    if (!pts.is_array()) throw ParseError("points: expected array");
    for (size_t i = 0; i < pts.size(); ++i) {
      std::string where = "points[" + std::to_string(i) + "]";
      if (!pts[i].is_object()) throw ParseError(where + ": expected object");
      inst.points.push_back(
          {NumberField(pts[i], "x", where), NumberField(pts[i], "y", where)});
    }
  }
  if (root.contains("meta")) {
    const json& meta = root["meta"];
    if (!meta.is_object()) throw ParseError("meta: expected object");
    for (auto it = meta.begin(); it != meta.end(); ++it) {
      inst.meta[it.key()] =
          it->is_string() ? it->get<std::string>() : it->dump();
    }
  }
  std::sort(inst.disks.begin(), inst.disks.end(),
            [](const Disk& a, const Disk& b) { return a.id < b.id; });
  for (size_t i = 1; i < inst.disks.size(); ++i) {
    if (inst.disks[i].id == inst.disks[i - 1].id) {
      throw ValidationError("duplicate disk id " +
                            std::to_string(inst.disks[i].id));
    }
  }
  Validate(inst);
  return inst;
}

Instance Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return InstanceFromJson(buf.str());
}

void Save(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << InstanceToJson(instance);
}

std::string SolutionToJson(const Solution& solution) {
  std::string out = "{\"disk_ids\": [";
  for (size_t i = 0; i < solution.disk_ids.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(solution.disk_ids[i]);
  }
  out += "], \"weight\": " + FormatDouble(solution.total_weight) +
         ", \"trace\": {";
  bool first = true;
  for (const auto& [id, tag] : solution.trace) {
    if (!first) out += ", ";
    first = false;
    out += "\"" + std::to_string(id) + "\": \"" + StageTagName(tag) + "\"";
  }
  out += "}}\n";
  return out;
}

Solution SolutionFromJson(const std::string& text) {
  json root = ParseJson(text);
  if (!root.is_object()) throw ParseError("top level: expected object");
  Solution s;
  auto ids = root.find("disk_ids");
  if (ids == root.end() || !ids->is_array()) {
    throw ParseError("disk_ids: expected array");
  }
  for (size_t i = 0; i < ids->size(); ++i) {
    if (!(*ids)[i].is_number_integer()) {
      throw ParseError("disk_ids[" + std::to_string(i) + "]: expected integer");
    }
    s.disk_ids.push_back((*ids)[i].get<int>());
  }
  std::sort(s.disk_ids.begin(), s.disk_ids.end());
  s.disk_ids.erase(std::unique(s.disk_ids.begin(), s.disk_ids.end()),
                   s.disk_ids.end());
  s.total_weight = NumberField(root, "weight", "solution");
  if (auto tr = root.find("trace"); tr != root.end() && tr->is_object()) {
    for (auto it = tr->begin(); it != tr->end(); ++it) {
      if (!it->is_string()) throw ParseError("trace." + it.key() + ": expected string");
      s.trace[std::stoi(it.key())] = StageTagFromName(it->get<std::string>());
    }
  }
  return s;
}

WeightSpec ParseWeightSpec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto num = [&](const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("bad weight spec '" + text + "'");
    }
    return v;
  };
  WeightSpec spec;
  if (parts.size() == 3 && parts[0] == "uniform") {
    spec.kind = WeightSpec::Kind::kUniform;
    spec.a = num(parts[1]);
    spec.b = num(parts[2]);
    if (spec.a < 0 || spec.b < spec.a) {
      throw ParseError("bad weight spec '" + text + "'");
    }
  } else if (parts.size() == 2 && parts[0] == "const") {
    spec.kind = WeightSpec::Kind::kConstant;
    spec.a = spec.b = num(parts[1]);
    if (spec.a < 0) throw ParseError("bad weight spec '" + text + "'");
  } else {
    throw ParseError("bad weight spec '" + text +
                     "' (expected uniform:a:b or const:c)");
  }
  return spec;
}

Instance Generate(int n, int m, double side, uint64_t seed,
                  const WeightSpec& weights) {
  // Raw 64-bit draws mapped by hand so the stream does not depend on the
  // standard library's distribution implementations.
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  Instance inst;
  for (int i = 0; i < n; ++i) {
    Point c{side * unit(), side * unit()};
    double w = weights.kind == WeightSpec::Kind::kConstant
                   ? weights.a
                   : weights.a + (weights.b - weights.a) * unit();
    inst.disks.push_back({i, c, w});
  }
  for (int j = 0; j < m; ++j) inst.points.push_back({side * unit(), side * unit()});
  inst.meta["generator"] = "uniform";
  inst.meta["seed"] = std::to_string(seed);
  inst.meta["side"] = FormatDouble(side);
  inst.meta["feasible"] = UncoverablePoints(inst).empty() ? "true" : "false";
  return inst;
}

Instance FromMwds(std::span<const Vertex> vertices) {
  Instance inst;
  for (size_t i = 0; i < vertices.size(); ++i) {
    inst.disks.push_back(
        {static_cast<int>(i), vertices[i].position, vertices[i].weight});
    inst.points.push_back(vertices[i].position);
  }
  inst.meta["generator"] = "mwds";
  Validate(inst);
  return inst;
}

}  // namespace udc
