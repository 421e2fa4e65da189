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

// Planar primitives for unit circles. Every tolerance decision goes through
// the helpers in this header.

#ifndef UDC_GEOM_H_
#define UDC_GEOM_H_

#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace udc {

inline constexpr double kTol = 1e-9;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

double Dot(Point a, Point b);
double Cross(Point a, Point b);
double Norm(Point a);
double Dist(Point a, Point b);

struct Disk {
  int id = 0;
  Point center;
  double weight = 0.0;
};

// Counterclockwise angular range on the unit circle of `disk_id`. A full
// circle is represented with extent == 2*pi and only appears on boundary
// curves of isolated disks.
struct AngularInterval {
  int disk_id = -1;
  double start = 0.0;
  double extent = 0.0;

  double end() const;
  // Offset of `theta` from `start` going counterclockwise, in [0, 2*pi).
  double OffsetOf(double theta) const;
  bool Contains(double theta, double tol = kTol) const;
};

class DegenerateArrangement : public std::runtime_error {
 public:
  explicit DegenerateArrangement(const std::string& what)
      : std::runtime_error(what) {}
};

double NormalizeAngle(double theta);
double AngleOf(Point center, Point p);
Point PointOnUnitCircle(Point center, double theta);

struct CircleIntersection {
  std::vector<Point> points;
  bool coincident = false;
};

// Sorted by angle around a.center. One point only within kTol of tangency.
CircleIntersection CircleIntersections(const Disk& a, const Disk& b);

bool PointInDisk(Point p, const Disk& d, double tol = kTol);
// Strictly inside: distance < 1 - tol.
bool PointStrictlyInDisk(Point p, const Disk& d, double tol = kTol);

double CentralAngle(const AngularInterval& interval);

// +1 if p is left of the directed line a->b, -1 if right, 0 within tol.
int SideOfLine(Point a, Point b, Point p, double tol = kTol);

// A maximal part of a circle not covered by the other disks. `enter_disk` is
// the disk whose coverage ends at the start, `exit_disk` the one whose
// coverage begins at the end; both are -1 for an uncovered full circle.
struct ExposedArc {
  AngularInterval interval;
  int enter_disk = -1;
  int exit_disk = -1;
};

// Exposed arcs of `d` against `others` (entries with d.id are ignored).
// Throws DegenerateArrangement on tangency, coincident centers or endpoint
// ties.
std::vector<ExposedArc> ExposedArcs(const Disk& d, std::span<const Disk> others);

struct BoundaryPiece {
  AngularInterval interval;
  double offset = 0.0;  // arclength from the curve start
};

// One component of the union boundary. Pieces run counterclockwise around
// their own disks, so the union lies to the left of the traversal.
struct BoundaryCurve {
  std::vector<BoundaryPiece> pieces;
  double length = 0.0;
};

std::vector<BoundaryCurve> UnionBoundary(std::span<const Disk> disks);

struct CurveLocation {
  int curve = -1;
  int piece = -1;
  double position = 0.0;
};

// Finds where `p`, a point on circle `disk_id`, sits on the boundary.
// Returns curve == -1 when no piece of that disk passes within `tol`.
CurveLocation LocateOnBoundary(std::span<const BoundaryCurve> curves,
                               const Disk& disk, Point p, double tol = 1e-7);

// Deterministic id-seeded offset of magnitude <= scale in each coordinate.
Point JitterFor(int id, int attempt, double scale = 1e-7);

}  // namespace udc

#endif  // UDC_GEOM_H_
