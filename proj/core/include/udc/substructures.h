// Uncovered arcs, baselines and substructures of the region outside the
// helper set H, plus the arc order, adjacency and envelope queries over them.

#ifndef UDC_SUBSTRUCTURES_H_
#define UDC_SUBSTRUCTURES_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "udc/gadgets.h"
#include "udc/geom.h"
#include "udc/pointset.h"

namespace udc {

class BrokenChain : public std::runtime_error {
 public:
  BrokenChain(int sub, int arc, const std::string& what)
      : std::runtime_error(what), sub(sub), arc(arc) {}
  int sub;
  int arc;  // arc whose successor should have crossed it
};

struct UncoveredArc {
  int disk = -1;
  int halfplane = 0;  // side of the disk's own gadget axis
  AngularInterval span;
  Point a, b;  // endpoints on the boundary of H, counterclockwise order
  int curve = -1;
  double foot_start = 0.0;  // position of a on the curve
  double foot_length = 0.0;
  int sub = -1;
  double start = 0.0;  // footprint relative to the baseline start
  double end = 0.0;
  PointSet points;  // remaining points in the arc's region
};

struct Baseline {
  int curve = -1;
  double start = 0.0;  // position on the curve
  double length = 0.0;
  bool cyclic = false;
};

struct Substructure {
  int id = -1;
  Baseline baseline;
  std::vector<int> arcs;  // ascending by footprint start
  bool reversed = false;  // clockwise orientation
};

enum class AnomalyKind {
  kWideArc,          // central angle reaches pi
  kAxisCrossing,     // an exposed piece straddles the gadget axis
  kUnlocated,        // endpoint not found on the boundary
  kSplitEndpoints,   // endpoints on different boundary curves
  kWrappedFootprint  // footprint runs around most of its curve
};
const char* AnomalyName(AnomalyKind kind);

struct Anomaly {
  int disk = -1;
  AnomalyKind kind;
};

struct LayoutInput {
  std::span<const Disk> disks;  // disks[i].id == i
  std::span<const Point> points;
  PointSet done;                // points already covered by the guess
  std::vector<int> h;           // disk ids in H
  std::vector<int> pool;        // candidate arc disks, disjoint from h
  const GadgetSet* gadgets = nullptr;
};

struct Layout {
  std::vector<int> h;
  std::vector<BoundaryCurve> curves;
  std::vector<double> curve_length;
  PointSet remaining;  // not covered by the guess or H
  std::vector<int> arc_disks;  // pool disks covering a remaining point
  std::vector<UncoveredArc> arcs;
  std::vector<Baseline> baselines;
  std::vector<Substructure> subs;
  std::vector<Anomaly> anomalies;
  // Remaining points inside some pool disk but in no arc region.
  std::vector<int> unclaimed;
  // Remaining points no pool disk covers.
  std::vector<int> orphans;
};

// Throws DegenerateArrangement from the geometry layer.
Layout BuildLayout(const LayoutInput& input);

// Footprint ends after orientation, in [0, baseline length].
double OrientedStart(const Layout& layout, int arc);
double OrientedEnd(const Layout& layout, int arc);
// Parameter of an angle along the arc, measured in the oriented direction.
double OrientedParam(const Layout& layout, int arc, double theta);

enum class ArcRelation { kEarlier, kLater, kIncomparable };
// Relation of a to c inside one substructure.
ArcRelation ArcOrder(const Layout& layout, int a, int c);

struct ArcCrossing {
  Point point;
  double param_a = 0.0;  // oriented parameter along a
  double param_c = 0.0;
};
// Intersections of the two circles lying on both arcs.
std::vector<ArcCrossing> ArcCrossings(const Layout& layout,
                                      std::span<const Disk> disks, int a, int c);
bool Adjacent(const Layout& layout, std::span<const Disk> disks, int a, int c);

// Later arc whose crossing with a comes first after `from_param`; -1 if none.
int FirstAdjacentSuccessor(const Layout& layout, std::span<const Disk> disks,
                           int a, double from_param);

// Greedy chain of first adjacent successors. Throws BrokenChain.
std::vector<int> Envelope(const Layout& layout, std::span<const Disk> disks,
                          int sub);

// Region test straight from the geometry: inside the arc's disk, outside H,
// and within the arc's angular span.
bool PointCoveredByArc(const Layout& layout, std::span<const Disk> disks,
                       Point p, int arc, double tol = kTol);

// Remaining points claimed by the arcs of a substructure.
PointSet SubstructurePoints(const Layout& layout, int sub);

}  // namespace udc

#endif  // UDC_SUBSTRUCTURES_H_
