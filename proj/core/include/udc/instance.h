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

#ifndef UDC_INSTANCE_H_
#define UDC_INSTANCE_H_

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "udc/geom.h"

namespace udc {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

class Infeasible : public std::runtime_error {
 public:
  explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

struct Instance {
  std::vector<Disk> disks;  // disks[i].id == i
  std::vector<Point> points;
  std::map<std::string, std::string> meta;

  int num_disks() const { return static_cast<int>(disks.size()); }
  int num_points() const { return static_cast<int>(points.size()); }
};

// Throws ValidationError on non-dense ids, non-finite values or negative
// weights.
void Validate(const Instance& instance);

enum class StageTag { kGuess, kGadget, kCut, kDp, kBaseline };
const char* StageTagName(StageTag tag);
StageTag StageTagFromName(const std::string& name);

struct Solution {
  std::vector<int> disk_ids;  // sorted, unique
  double total_weight = 0.0;
  std::map<int, StageTag> trace;
};

// Sum of weights in increasing id order, so equal sets give equal bits.
double CanonicalWeight(const Instance& instance, std::span<const int> ids);
Solution MakeSolution(const Instance& instance, std::vector<int> ids,
                      StageTag tag);
bool IsCover(const Instance& instance, std::span<const int> ids,
             double tol = kTol);
// Indices of points covered by no disk at all.
std::vector<int> UncoverablePoints(const Instance& instance, double tol = kTol);

std::string InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const std::string& text);
Instance Load(const std::string& path);
void Save(const Instance& instance, const std::string& path);

std::string SolutionToJson(const Solution& solution);
Solution SolutionFromJson(const std::string& text);

struct WeightSpec {
  enum class Kind { kUniform, kConstant } kind = Kind::kUniform;
  double a = 1.0;
  double b = 1.0;
};
// "uniform:a:b" or "const:c".
WeightSpec ParseWeightSpec(const std::string& text);

Instance Generate(int n, int m, double side, uint64_t seed,
                  const WeightSpec& weights);

struct Vertex {
  Point position;
  double weight = 0.0;
};
Instance FromMwds(std::span<const Vertex> vertices);

}  // namespace udc

#endif  // UDC_INSTANCE_H_
