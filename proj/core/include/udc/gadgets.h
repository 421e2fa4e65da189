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

// Small-square grid and the farthest-pair square gadgets.

#ifndef UDC_GADGETS_H_
#define UDC_GADGETS_H_

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "udc/geom.h"
#include "udc/shifting.h"

namespace udc {

class DegenerateGadget : public std::runtime_error {
 public:
  explicit DegenerateGadget(const std::string& what) : std::runtime_error(what) {}
};

using SquareKey = std::pair<int, int>;

struct SquareGrid {
  double mu = 0.0;
  int K = 0;
  Point origin;

  // Squares extend past the block so candidate disks outside it still land
  // in a square.
  SquareKey SquareOf(Point p) const;
};

// mu = L / ceil(L / min(eps, 0.7)) with L = block.side.
SquareGrid BuildGrid(const Box& block, double eps);

struct Gadget {
  SquareKey square;
  std::vector<int> members;  // disk ids centered in the square, ascending
  bool singleton = false;
  int ds = -1;
  int dt = -1;
  Point s, t;  // centers of ds, dt
  Point p;     // circle intersection left of s->t
  Point q;     // circle intersection right of s->t
  bool central_ok = true;  // every other member lies in the central area
};

// Farthest pair with ties broken by the lexicographically smallest id pair.
// Returns nullopt for an empty square.
std::optional<Gadget> BuildGadget(std::span<const Disk> square_disks,
                                  SquareKey square = {0, 0});

// +1 left of the axis s->t, -1 right, 0 on it.
int HalfplaneOf(const Gadget& g, Point x);

bool InCoreCentral(Point x, const Gadget& g, double tol = kTol);

struct DomeRegion {
  Point dome;
  int halfplane = 0;
  Point s, t;
  bool Contains(Point x, double tol = kTol) const;
};

DomeRegion Dome(const Gadget& g, int halfplane);

struct ActiveRegion {
  int gadget = -1;
  int halfplane = 0;
  std::vector<int> disks;  // contributing disks centered in the core-central area
};

// Regions per halfplane with at least one contributing disk poking out of
// D_s and D_t on that side.
std::vector<ActiveRegion> ActiveRegions(const Gadget& g, int gadget_index,
                                        std::span<const Disk> candidates);

struct GadgetSet {
  SquareGrid grid;
  std::vector<Gadget> gadgets;
  std::map<SquareKey, int> by_square;
  std::vector<int> gadget_of_disk;  // indexed by disk id, -1 if absent
};

// Groups `pool` (indices into `disks`, which are indexed by id) by square.
GadgetSet BuildGadgets(std::span<const Disk> disks, std::span<const int> pool,
                       const SquareGrid& grid);

}  // namespace udc

#endif  // UDC_GADGETS_H_
