#include "udc/substructures.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace udc {

const char* AnomalyName(AnomalyKind kind) {
  switch (kind) {
    case AnomalyKind::kWideArc: return "wide_arc";
    case AnomalyKind::kAxisCrossing: return "axis_crossing";
    case AnomalyKind::kUnlocated: return "unlocated";
    case AnomalyKind::kSplitEndpoints: return "split_endpoints";
    case AnomalyKind::kWrappedFootprint: return "wrapped_footprint";
  }
  return "?";
}

namespace {

double Wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  return r;
}

// Angles where the circle around c meets the line s->t, or empty.
std::vector<double> LineCrossings(Point c, Point s, Point t) {
  Point dir = t - s;
  double len = Norm(dir);
  if (len < kTol) return {};
  Point u = (1.0 / len) * dir;
  double along = Dot(c - s, u);
  Point foot = s + along * u;
  double h = Dist(c, foot);
  if (h >= 1.0) return {};
  double half = std::sqrt(1.0 - h * h);
  return {AngleOf(c, foot + half * u), AngleOf(c, foot - half * u)};
}

// Halfplane portion of a circle: its counterclockwise start angle.
double PortionStart(const Disk& d, const Gadget& g, int side) {
  std::vector<double> xs = LineCrossings(d.center, g.s, g.t);
  if (xs.size() < 2) return 0.0;
  for (double x : xs) {
    double probe = x + 1e-4;
    if (HalfplaneOf(g, PointOnUnitCircle(d.center, probe)) == side) return x;
  }
  return xs[0];
}

struct Footprint {
  int arc;
  double start;
  double length;
};

}  // namespace

Layout BuildLayout(const LayoutInput& in) {
  Layout out;
  out.h = in.h;
  std::sort(out.h.begin(), out.h.end());
  std::vector<Disk> hdisks;
  for (int id : out.h) hdisks.push_back(in.disks[id]);
  out.curves = hdisks.empty() ? std::vector<BoundaryCurve>{} : UnionBoundary(hdisks);
  for (const BoundaryCurve& c : out.curves) out.curve_length.push_back(c.length);

  int m = static_cast<int>(in.points.size());
  out.remaining = PointSet(m);
  for (int i = 0; i < m; ++i) {
    if (in.done.capacity() == m && in.done.Test(i)) continue;
    bool covered = false;
    for (const Disk& d : hdisks) {
      if (PointInDisk(in.points[i], d)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.remaining.Set(i);
  }
  std::vector<int> remaining = out.remaining.Elements();

  PointSet claimable(m);
  std::vector<int> pool = in.pool;
  std::sort(pool.begin(), pool.end());
  for (int id : pool) {
    const Disk& d = in.disks[id];
    bool useful = false;
    for (int p : remaining) {
      if (PointInDisk(in.points[p], d)) {
        useful = true;
        claimable.Set(p);
      }
    }
    if (useful) out.arc_disks.push_back(id);
  }

  for (int id : out.arc_disks) {
    const Disk& d = in.disks[id];
    std::vector<ExposedArc> exposed = ExposedArcs(d, hdisks);
    if (exposed.empty()) continue;
    int gi = in.gadgets ? in.gadgets->gadget_of_disk[id] : -1;
    const Gadget* g = gi >= 0 ? &in.gadgets->gadgets[gi] : nullptr;
    if (g == nullptr || g->singleton || exposed[0].enter_disk < 0) {
      out.anomalies.push_back({id, AnomalyKind::kUnlocated});
      continue;
    }
    std::vector<double> axis = LineCrossings(d.center, g->s, g->t);
    bool bad = false;
    std::vector<ExposedArc> side_arcs[2];
    for (const ExposedArc& e : exposed) {
      for (double x : axis) {
        double off = e.interval.OffsetOf(x);
        if (off > kTol && off < e.interval.extent - kTol) bad = true;
      }
      Point mid = PointOnUnitCircle(d.center, e.interval.start + 0.5 * e.interval.extent);
      int side = HalfplaneOf(*g, mid);
      if (side == 0) bad = true;
      side_arcs[side > 0 ? 0 : 1].push_back(e);
    }
    if (bad) {
      out.anomalies.push_back({id, AnomalyKind::kAxisCrossing});
      continue;
    }
    for (int k = 0; k < 2; ++k) {
      if (side_arcs[k].empty()) continue;
      int side = k == 0 ? 1 : -1;
      double base = PortionStart(d, *g, side);
      const ExposedArc* first = &side_arcs[k][0];
      const ExposedArc* last = &side_arcs[k][0];
      double first_off = kTwoPi, last_off = -1.0;
      for (const ExposedArc& e : side_arcs[k]) {
        double s = Wrap(e.interval.start - base, kTwoPi);
        double t = s + e.interval.extent;
        if (s < first_off) {
          first_off = s;
          first = &e;
        }
        if (t > last_off) {
          last_off = t;
          last = &e;
        }
      }
      UncoveredArc arc;
      arc.disk = id;
      arc.halfplane = side;
      arc.span = {id, first->interval.start, last_off - first_off};
      if (arc.span.extent >= kPi) {
        out.anomalies.push_back({id, AnomalyKind::kWideArc});
        continue;
      }
      arc.a = PointOnUnitCircle(d.center, arc.span.start);
      arc.b = PointOnUnitCircle(d.center, arc.span.end());
      CurveLocation la = LocateOnBoundary(out.curves, in.disks[first->enter_disk], arc.a);
      CurveLocation lb = LocateOnBoundary(out.curves, in.disks[last->exit_disk], arc.b);
      if (la.curve < 0 || lb.curve < 0) {
        out.anomalies.push_back({id, AnomalyKind::kUnlocated});
        continue;
      }
      if (la.curve != lb.curve) {
        out.anomalies.push_back({id, AnomalyKind::kSplitEndpoints});
        continue;
      }
      double len = out.curve_length[la.curve];
      arc.curve = la.curve;
      arc.foot_start = la.position;
      arc.foot_length = Wrap(lb.position - la.position, len);
      if (arc.foot_length > 0.75 * len) {
        out.anomalies.push_back({id, AnomalyKind::kWrappedFootprint});
        continue;
      }
      arc.points = PointSet(m);
      for (int p : remaining) {
        const Point& x = in.points[p];
        if (PointInDisk(x, d) && arc.span.Contains(AngleOf(d.center, x), 1e-12)) {
          arc.points.Set(p);
        }
      }
      out.arcs.push_back(std::move(arc));
    }
  }

  PointSet claimed(m);
  for (const UncoveredArc& a : out.arcs) claimed |= a.points;
  for (int p : remaining) {
    if (!claimable.Test(p)) {
      out.orphans.push_back(p);
    } else if (!claimed.Test(p)) {
      out.unclaimed.push_back(p);
    }
  }

  // Baselines: maximal unions of footprints on each curve.
  std::vector<std::vector<Footprint>> per_curve(out.curves.size());
  for (int i = 0; i < static_cast<int>(out.arcs.size()); ++i) {
    const UncoveredArc& a = out.arcs[i];
    per_curve[a.curve].push_back({i, a.foot_start, a.foot_length});
  }
  for (size_t c = 0; c < per_curve.size(); ++c) {
    auto& fps = per_curve[c];
    if (fps.empty()) continue;
    double len = out.curve_length[c];
    std::sort(fps.begin(), fps.end(), [](const Footprint& x, const Footprint& y) {
      if (x.start != y.start) return x.start < y.start;
      return x.arc < y.arc;
    });
    // Find a point no footprint covers by sweeping two laps.
    double reach = -1.0;
    double gap = -1.0;
    for (int lap = 0; lap < 2 && gap < 0; ++lap) {
      for (const Footprint& f : fps) {
        double s = f.start + lap * len;
        if (reach >= 0 && s > reach + kTol) {
          gap = Wrap(reach, len);
          break;
        }
        reach = std::max(reach, s + f.length);
      }
    }
    if (gap < 0) {
      // Every point of the curve is covered.
      Baseline b{static_cast<int>(c), fps[0].start, len, true};
      out.baselines.push_back(b);
      Substructure st;
      st.id = static_cast<int>(out.subs.size());
      st.baseline = b;
      for (const Footprint& f : fps) st.arcs.push_back(f.arc);
      out.subs.push_back(std::move(st));
      continue;
    }
    std::vector<Footprint> rel = fps;
    for (Footprint& f : rel) {
      f.start = Wrap(f.start - gap, len);
      if (f.start > len - kTol) f.start = 0.0;
    }
    std::sort(rel.begin(), rel.end(), [](const Footprint& x, const Footprint& y) {
      if (x.start != y.start) return x.start < y.start;
      return x.arc < y.arc;
    });
    size_t i = 0;
    while (i < rel.size()) {
      double s = rel[i].start;
      double e = s + rel[i].length;
      std::vector<int> members = {rel[i].arc};
      size_t j = i + 1;
      while (j < rel.size() && rel[j].start <= e + kTol) {
        e = std::max(e, rel[j].start + rel[j].length);
        members.push_back(rel[j].arc);
        ++j;
      }
      Baseline b{static_cast<int>(c), Wrap(s + gap, len), e - s, false};
      out.baselines.push_back(b);
      Substructure st;
      st.id = static_cast<int>(out.subs.size());
      st.baseline = b;
      st.arcs = members;
      out.subs.push_back(std::move(st));
      i = j;
    }
  }
  for (Substructure& st : out.subs) {
    double len = out.curve_length[st.baseline.curve];
    for (int a : st.arcs) {
      UncoveredArc& arc = out.arcs[a];
      arc.sub = st.id;
      arc.start = Wrap(arc.foot_start - st.baseline.start, len);
      if (arc.start > st.baseline.length + kTol) arc.start = 0.0;
      arc.end = arc.start + arc.foot_length;
    }
    std::sort(st.arcs.begin(), st.arcs.end(), [&](int x, int y) {
      if (out.arcs[x].start != out.arcs[y].start) {
        return out.arcs[x].start < out.arcs[y].start;
      }
      return x < y;
    });
  }
  return out;
}

double OrientedStart(const Layout& layout, int arc) {
  const UncoveredArc& a = layout.arcs[arc];
  const Substructure& st = layout.subs[a.sub];
  return st.reversed ? st.baseline.length - a.end : a.start;
}

double OrientedEnd(const Layout& layout, int arc) {
  const UncoveredArc& a = layout.arcs[arc];
  const Substructure& st = layout.subs[a.sub];
  return st.reversed ? st.baseline.length - a.start : a.end;
}

double OrientedParam(const Layout& layout, int arc, double theta) {
  const UncoveredArc& a = layout.arcs[arc];
  double off = a.span.OffsetOf(theta);
  if (off > a.span.extent) off = (off - a.span.extent < kTwoPi - off) ? a.span.extent : 0.0;
  return layout.subs[a.sub].reversed ? a.span.extent - off : off;
}

ArcRelation ArcOrder(const Layout& layout, int a, int c) {
  if (a == c) return ArcRelation::kIncomparable;
  double as = OrientedStart(layout, a), ae = OrientedEnd(layout, a);
  double cs = OrientedStart(layout, c), ce = OrientedEnd(layout, c);
  if (as < cs && ae < ce) return ArcRelation::kEarlier;
  if (cs < as && ce < ae) return ArcRelation::kLater;
  return ArcRelation::kIncomparable;
}

std::vector<ArcCrossing> ArcCrossings(const Layout& layout,
                                      std::span<const Disk> disks, int a, int c) {
  const UncoveredArc& x = layout.arcs[a];
  const UncoveredArc& y = layout.arcs[c];
  std::vector<ArcCrossing> out;
  if (x.disk == y.disk) return out;
  CircleIntersection ci = CircleIntersections(disks[x.disk], disks[y.disk]);
  for (const Point& p : ci.points) {
    double tx = AngleOf(disks[x.disk].center, p);
    double ty = AngleOf(disks[y.disk].center, p);
    if (!x.span.Contains(tx) || !y.span.Contains(ty)) continue;
    out.push_back({p, OrientedParam(layout, a, tx), OrientedParam(layout, c, ty)});
  }
  std::sort(out.begin(), out.end(), [](const ArcCrossing& u, const ArcCrossing& v) {
    return u.param_a < v.param_a;
  });
  return out;
}

bool Adjacent(const Layout& layout, std::span<const Disk> disks, int a, int c) {
  return !ArcCrossings(layout, disks, a, c).empty();
}

int FirstAdjacentSuccessor(const Layout& layout, std::span<const Disk> disks,
                           int a, double from_param) {
  int best = -1;
  double best_param = std::numeric_limits<double>::infinity();
  for (int c : layout.subs[layout.arcs[a].sub].arcs) {
    if (ArcOrder(layout, a, c) != ArcRelation::kEarlier) continue;
    for (const ArcCrossing& x : ArcCrossings(layout, disks, a, c)) {
      if (x.param_a <= from_param + kTol) continue;
      if (x.param_a < best_param) {
        best_param = x.param_a;
        best = c;
      }
      break;
    }
  }
  return best;
}

std::vector<int> Envelope(const Layout& layout, std::span<const Disk> disks,
                          int sub) {
  const Substructure& st = layout.subs[sub];
  std::vector<int> path;
  if (st.arcs.empty()) return path;
  int cur = -1;
  for (int a : st.arcs) {
    if (cur < 0) {
      cur = a;
      continue;
    }
    double s = OrientedStart(layout, a), cs = OrientedStart(layout, cur);
    if (s < cs - kTol ||
        (std::abs(s - cs) <= kTol && OrientedEnd(layout, a) > OrientedEnd(layout, cur))) {
      cur = a;
    }
  }
  double from = 0.0;
  path.push_back(cur);
  for (size_t guard = 0; guard <= 4 * st.arcs.size() + 4; ++guard) {
    int next = FirstAdjacentSuccessor(layout, disks, cur, from);
    if (next >= 0) {
      for (const ArcCrossing& x : ArcCrossings(layout, disks, cur, next)) {
        if (x.param_a > from + kTol) {
          from = x.param_c;
          break;
        }
      }
      cur = next;
      path.push_back(cur);
      continue;
    }
    double end = OrientedEnd(layout, cur);
    if (end >= st.baseline.length - 1e-7 || st.baseline.cyclic) return path;
    int culprit = -1;
    for (int c : st.arcs) {
      if (OrientedStart(layout, c) <= end + kTol && OrientedEnd(layout, c) > end + kTol &&
          (culprit < 0 || OrientedStart(layout, c) < OrientedStart(layout, culprit))) {
        culprit = c;
      }
    }
    throw BrokenChain(sub, culprit >= 0 ? culprit : cur,
                      "envelope stops at " + std::to_string(end) + " of " +
                          std::to_string(st.baseline.length));
  }
  throw BrokenChain(sub, cur, "envelope does not terminate");
}

bool PointCoveredByArc(const Layout& layout, std::span<const Disk> disks, Point p,
                       int arc, double tol) {
  const UncoveredArc& a = layout.arcs[arc];
  const Disk& d = disks[a.disk];
  if (!PointInDisk(p, d, tol)) return false;
  for (int id : layout.h) {
    if (PointInDisk(p, disks[id], tol)) return false;
  }
  return a.span.Contains(AngleOf(d.center, p), tol);
}

PointSet SubstructurePoints(const Layout& layout, int sub) {
  PointSet out(layout.remaining.capacity());
  for (int a : layout.subs[sub].arcs) out |= layout.arcs[a].points;
  return out;
}

}  // namespace udc
