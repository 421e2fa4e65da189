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

#include "udc/gadgets.h"

#include <algorithm>
#include <cmath>

namespace udc {

SquareKey SquareGrid::SquareOf(Point p) const {
  return {static_cast<int>(std::floor((p.x - origin.x) / mu)),
          static_cast<int>(std::floor((p.y - origin.y) / mu))};
}

SquareGrid BuildGrid(const Box& block, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  double L = block.side;
  int K = static_cast<int>(std::ceil(L / std::min(eps, 0.7) - 1e-12));
  K = std::max(K, 1);
  return {L / K, K, {block.x0, block.y0}};
}

std::optional<Gadget> BuildGadget(std::span<const Disk> square_disks,
                                  SquareKey square) {
  if (square_disks.empty()) return std::nullopt;
  std::vector<Disk> ds(square_disks.begin(), square_disks.end());
  std::sort(ds.begin(), ds.end(), [](const Disk& a, const Disk& b) { return a.id < b.id; });
  Gadget g;
  g.square = square;
  for (const Disk& d : ds) g.members.push_back(d.id);
  if (ds.size() == 1) {
    g.singleton = true;
    g.ds = g.dt = ds[0].id;
    g.s = g.t = ds[0].center;
    return g;
  }
  double best = -1.0;
  int bi = 0, bj = 1;
  for (size_t i = 0; i < ds.size(); ++i) {
    for (size_t j = i + 1; j < ds.size(); ++j) {
      double d = Dist(ds[i].center, ds[j].center);
      if (d > best) {
        best = d;
        bi = static_cast<int>(i);
        bj = static_cast<int>(j);
      }
    }
  }
  g.ds = ds[bi].id;
  g.dt = ds[bj].id;
  g.s = ds[bi].center;
  g.t = ds[bj].center;
  CircleIntersection ci = CircleIntersections(ds[bi], ds[bj]);
  if (ci.points.size() == 2) {
    g.p = ci.points[0];
    g.q = ci.points[1];
    if (SideOfLine(g.s, g.t, g.p, 0.0) < 0) std::swap(g.p, g.q);
  } else {
    // Coincident centers: no axis. Treat it like a singleton.
    g.singleton = true;
  }
  for (const Disk& d : ds) {
    if (Dist(d.center, g.s) > best + kTol || Dist(d.center, g.t) > best + kTol) {
      g.central_ok = false;
    }
  }
  return g;
}

int HalfplaneOf(const Gadget& g, Point x) { return SideOfLine(g.s, g.t, x, 0.0); }

bool InCoreCentral(Point x, const Gadget& g, double tol) {
  if (g.singleton) throw DegenerateGadget("singleton gadget has no core-central area");
  return Dist(x, g.p) <= 1.0 + tol && Dist(x, g.q) <= 1.0 + tol;
}

DomeRegion Dome(const Gadget& g, int halfplane) {
  if (g.singleton) throw DegenerateGadget("singleton gadget has no dome");
  // The big circle is centered at the intersection point on the other side.
  Point far = halfplane > 0 ? g.q : g.p;
  Point qs = 2.0 * g.s - far;
  Point qt = 2.0 * g.t - far;
  CircleIntersection ci = CircleIntersections({0, qs, 0.0}, {1, qt, 0.0});
  Point mid = 0.5 * (g.s + g.t);
  Point dome = ci.points.empty() ? mid : ci.points[0];
  for (const Point& c : ci.points) {
    if (Dist(c, mid) < Dist(dome, mid)) dome = c;
  }
  return {dome, halfplane, g.s, g.t};
}

bool DomeRegion::Contains(Point x, double tol) const {
  if (Dist(x, dome) > 1.0 + tol) return false;
  if (Dist(x, s) < 1.0 - tol || Dist(x, t) < 1.0 - tol) return false;
  return SideOfLine(s, t, x, 0.0) == halfplane;
}

std::vector<ActiveRegion> ActiveRegions(const Gadget& g, int gadget_index,
                                        std::span<const Disk> candidates) {
  if (g.singleton) return {};
  ActiveRegion plus{gadget_index, +1, {}};
  ActiveRegion minus{gadget_index, -1, {}};
  Disk gs{g.ds, g.s, 0.0}, gt{g.dt, g.t, 0.0};
  std::vector<Disk> pair = {gs, gt};
  for (const Disk& d : candidates) {
    if (d.id == g.ds || d.id == g.dt) continue;
    if (!InCoreCentral(d.center, g)) continue;
    bool up = false, down = false;
    for (const ExposedArc& e : ExposedArcs(d, pair)) {
      Point mid = PointOnUnitCircle(d.center, e.interval.start + 0.5 * e.interval.extent);
      int side = HalfplaneOf(g, mid);
      up |= side > 0;
      down |= side < 0;
    }
    if (up) plus.disks.push_back(d.id);
    if (down) minus.disks.push_back(d.id);
  }
  std::vector<ActiveRegion> out;
  if (!plus.disks.empty()) out.push_back(std::move(plus));
  if (!minus.disks.empty()) out.push_back(std::move(minus));
  return out;
}

GadgetSet BuildGadgets(std::span<const Disk> disks, std::span<const int> pool,
                       const SquareGrid& grid) {
  GadgetSet out;
  out.grid = grid;
  std::map<SquareKey, std::vector<Disk>> squares;
  for (int id : pool) squares[grid.SquareOf(disks[id].center)].push_back(disks[id]);
  out.gadget_of_disk.assign(disks.size(), -1);
  for (auto& [key, members] : squares) {
    std::optional<Gadget> g = BuildGadget(members, key);
    int index = static_cast<int>(out.gadgets.size());
    out.by_square[key] = index;
    for (int id : g->members) out.gadget_of_disk[id] = index;
    out.gadgets.push_back(std::move(*g));
  }
  return out;
}

}  // namespace udc
