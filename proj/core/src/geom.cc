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

#include "udc/geom.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace udc {

double Dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double Cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double Norm(Point a) { return std::hypot(a.x, a.y); }
double Dist(Point a, Point b) { return Norm(a - b); }

double NormalizeAngle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double AngleOf(Point center, Point p) {
  return NormalizeAngle(std::atan2(p.y - center.y, p.x - center.x));
}

Point PointOnUnitCircle(Point center, double theta) {
  return {center.x + std::cos(theta), center.y + std::sin(theta)};
}

double AngularInterval::end() const { return NormalizeAngle(start + extent); }

double AngularInterval::OffsetOf(double theta) const {
  return NormalizeAngle(theta - start);
}

bool AngularInterval::Contains(double theta, double tol) const {
  if (extent >= kTwoPi - tol) return true;
  double off = OffsetOf(theta);
  return off <= extent + tol || off >= kTwoPi - tol;
}

CircleIntersection CircleIntersections(const Disk& a, const Disk& b) {
  CircleIntersection out;
  Point delta = b.center - a.center;
  double d = Norm(delta);
  if (d < kTol) {
    out.coincident = true;
    return out;
  }
  if (d > 2.0 + kTol) return out;
  Point mid = a.center + 0.5 * delta;
  if (std::abs(d - 2.0) <= kTol) {
    out.points.push_back(mid);
    return out;
  }
  double h = std::sqrt(std::max(0.0, 1.0 - 0.25 * d * d));
  Point perp{-delta.y / d, delta.x / d};
  Point p1 = mid + h * perp;
  Point p2 = mid - h * perp;
  if (AngleOf(a.center, p2) < AngleOf(a.center, p1)) std::swap(p1, p2);
  out.points = {p1, p2};
  return out;
}

bool PointInDisk(Point p, const Disk& d, double tol) {
  return Dist(p, d.center) <= 1.0 + tol;
}

bool PointStrictlyInDisk(Point p, const Disk& d, double tol) {
  return Dist(p, d.center) < 1.0 - tol;
}

double CentralAngle(const AngularInterval& interval) { return interval.extent; }

int SideOfLine(Point a, Point b, Point p, double tol) {
  Point dir = b - a;
  double len = Norm(dir);
  if (len == 0.0) return 0;
  double c = Cross(dir, p - a) / len;
  if (c > tol) return 1;
  if (c < -tol) return -1;
  return 0;
}

namespace {

struct Cover {
  double start;  // may be negative before normalization
  double end;
  int disk;
  int end_disk;
};

}  // namespace

std::vector<ExposedArc> ExposedArcs(const Disk& d,
                                    std::span<const Disk> others) {
  std::vector<Cover> covers;
  for (const Disk& o : others) {
    if (o.id == d.id) continue;
    double dist = Dist(d.center, o.center);
    if (dist < kTol) {
      throw DegenerateArrangement("coincident disks " + std::to_string(d.id) +
                                  " and " + std::to_string(o.id));
    }
    if (std::abs(dist - 2.0) <= kTol) {
      throw DegenerateArrangement("tangent disks " + std::to_string(d.id) +
                                  " and " + std::to_string(o.id));
    }
    if (dist > 2.0) continue;
    double phi = AngleOf(d.center, o.center);
    double hw = std::acos(dist / 2.0);
    double s = NormalizeAngle(phi - hw);
    covers.push_back({s, s + 2.0 * hw, o.id, o.id});
  }
  if (covers.empty()) {
    return {ExposedArc{{d.id, 0.0, kTwoPi}, -1, -1}};
  }
  std::sort(covers.begin(), covers.end(), [](const Cover& a, const Cover& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.disk < b.disk;
  });

  // Merge on the line first, then fold the wraparound.
  std::vector<Cover> merged;
  for (const Cover& c : covers) {
    if (!merged.empty() && c.start <= merged.back().end + kTol) {
      Cover& m = merged.back();
      if (std::abs(c.start - m.start) <= kTol && c.disk != m.disk) {
        throw DegenerateArrangement("concurrent circles on disk " +
                                    std::to_string(d.id));
      }
      if (std::abs(c.end - m.end) <= kTol && c.disk != m.end_disk) {
        throw DegenerateArrangement("concurrent circles on disk " +
                                    std::to_string(d.id));
      }
      if (c.end > m.end) {
        m.end = c.end;
        m.end_disk = c.disk;
      }
    } else {
      merged.push_back(c);
    }
  }
  while (merged.size() > 1 &&
         merged.back().end - kTwoPi >= merged.front().start - kTol) {
    Cover last = merged.back();
    merged.pop_back();
    Cover& first = merged.front();
    first.start = last.start - kTwoPi;
    first.disk = last.disk;
    if (last.end - kTwoPi > first.end) {
      first.end = last.end - kTwoPi;
      first.end_disk = last.end_disk;
    }
    while (merged.size() > 1 && merged[1].start <= first.end + kTol) {
      if (merged[1].end > first.end) {
        first.end = merged[1].end;
        first.end_disk = merged[1].end_disk;
      }
      merged.erase(merged.begin() + 1);
    }
  }
  if (merged.size() == 1 && merged[0].end - merged[0].start >= kTwoPi - kTol) {
    return {};
  }
  std::vector<ExposedArc> out;
  for (size_t i = 0; i < merged.size(); ++i) {
    const Cover& cur = merged[i];
    const Cover& next = merged[(i + 1) % merged.size()];
    double gap_start = cur.end;
    double gap_end = next.start + (i + 1 == merged.size() ? kTwoPi : 0.0);
    double extent = gap_end - gap_start;
    if (extent <= kTol) {
      throw DegenerateArrangement("vanishing exposed arc on disk " +
                                  std::to_string(d.id));
    }
    out.push_back(
        {{d.id, NormalizeAngle(gap_start), extent}, cur.end_disk, next.disk});
  }
  std::sort(out.begin(), out.end(), [](const ExposedArc& a, const ExposedArc& b) {
    return a.interval.start < b.interval.start;
  });
  return out;
}

std::vector<BoundaryCurve> UnionBoundary(std::span<const Disk> disks) {
  struct Node {
    int disk_index;
    ExposedArc arc;
    int next = -1;
  };
  std::vector<Node> nodes;
  std::vector<int> index_of_id;
  for (size_t i = 0; i < disks.size(); ++i) {
    int id = disks[i].id;
    if (id >= static_cast<int>(index_of_id.size())) index_of_id.resize(id + 1, -1);
    index_of_id[id] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> by_disk(disks.size());
  for (size_t i = 0; i < disks.size(); ++i) {
    for (ExposedArc& a : ExposedArcs(disks[i], disks)) {
      by_disk[i].push_back(static_cast<int>(nodes.size()));
      nodes.push_back({static_cast<int>(i), a});
    }
  }
  for (Node& n : nodes) {
    if (n.arc.exit_disk < 0) continue;
    const Disk& own = disks[n.disk_index];
    Point x = PointOnUnitCircle(own.center, n.arc.interval.end());
    int j = index_of_id[n.arc.exit_disk];
    double best = 1e-6;
    for (int cand : by_disk[j]) {
      const Node& c = nodes[cand];
      if (c.arc.enter_disk != own.id) continue;
      double gap = Dist(x, PointOnUnitCircle(disks[j].center, c.arc.interval.start));
      if (gap < best) {
        best = gap;
        n.next = cand;
      }
    }
    if (n.next < 0) {
      throw DegenerateArrangement("cannot link boundary at disk " +
                                  std::to_string(own.id));
    }
  }
  std::vector<BoundaryCurve> curves;
  std::vector<bool> seen(nodes.size(), false);
  for (size_t start = 0; start < nodes.size(); ++start) {
    if (seen[start]) continue;
    BoundaryCurve curve;
    int cur = static_cast<int>(start);
    while (!seen[cur]) {
      seen[cur] = true;
      curve.pieces.push_back({nodes[cur].arc.interval, curve.length});
      curve.length += nodes[cur].arc.interval.extent;
      if (nodes[cur].next < 0) break;
      cur = nodes[cur].next;
    }
    if (nodes[cur].next >= 0 && cur != static_cast<int>(start) &&
        nodes[cur].next != static_cast<int>(start)) {
      throw DegenerateArrangement("boundary walk did not close");
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

CurveLocation LocateOnBoundary(std::span<const BoundaryCurve> curves,
                               const Disk& disk, Point p, double tol) {
  CurveLocation best;
  double best_gap = std::numeric_limits<double>::infinity();
  double theta = AngleOf(disk.center, p);
  if (std::abs(Dist(disk.center, p) - 1.0) > tol) return best;
  for (size_t c = 0; c < curves.size(); ++c) {
    const BoundaryCurve& curve = curves[c];
    for (size_t k = 0; k < curve.pieces.size(); ++k) {
      const BoundaryPiece& piece = curve.pieces[k];
      if (piece.interval.disk_id != disk.id) continue;
      double off = piece.interval.OffsetOf(theta);
      double gap = 0.0;
      if (off > piece.interval.extent) {
        // Distance along the circle to the nearer endpoint.
        gap = std::min(off - piece.interval.extent, kTwoPi - off);
        if (gap > tol) continue;
        off = (kTwoPi - off < off - piece.interval.extent) ? 0.0
                                                            : piece.interval.extent;
      }
      if (gap < best_gap) {
        best_gap = gap;
        best.curve = static_cast<int>(c);
        best.piece = static_cast<int>(k);
        best.position = piece.offset + off;
      }
    }
  }
  return best;
}

Point JitterFor(int id, int attempt, double scale) {
  auto mix = [](uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  uint64_t h = mix((static_cast<uint64_t>(id) << 8) ^ static_cast<uint64_t>(attempt));
  double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  double v = static_cast<double>(mix(h) >> 11) * 0x1.0p-53;
  return {scale * (2.0 * u - 1.0), scale * (2.0 * v - 1.0)};
}

}  // namespace udc
