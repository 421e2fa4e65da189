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

// Static SVG pictures of an instance, a solution and one H pipeline run.
// Output depends only on the inputs, so it can be compared byte for byte.

#ifndef UDC_SVG_H_
#define UDC_SVG_H_

#include <string>

#include "udc/hbuilder.h"
#include "udc/instance.h"

namespace udc {

struct RenderOptions {
  const Solution* solution = nullptr;
  const HResult* h = nullptr;  // adds H, active regions, baselines, envelopes
  double scale = 100.0;        // pixels per unit
};

// Layers, bottom to top: active regions, disks, H (dashed), baselines,
// uncovered arcs and envelopes, chosen disks, points.
std::string RenderSvg(const Instance& instance, const RenderOptions& options = {});

}  // namespace udc

#endif  // UDC_SVG_H_
