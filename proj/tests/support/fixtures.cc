#include "support/fixtures.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "udc/gadgets.h"

namespace udc::testing {
namespace {

// Raw draws so fixtures do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  double Unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  int Below(int n) { return static_cast<int>(gen_() % static_cast<uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
};

// Walking a cap left to right goes clockwise over the top, from the left
// foot at angle pi - asin(d) down to the right foot at asin(d).
double FootAngle(const Cap& c) { return kPi - std::asin(-c.center.y); }
double CapParam(const Cap& c, Point x) {
  return FootAngle(c) - NormalizeAngle(AngleOf(c.center, x));
}

Point SampleBox(Rng& rng, double x0, double x1, double y0, double y1) {
  return {x0 + (x1 - x0) * rng.Unit(), y0 + (y1 - y0) * rng.Unit()};
}

}  // namespace

Instance SmallInstance(uint64_t seed, int n, int m, double side) {
  return Generate(n, m, side, seed, ParseWeightSpec("uniform:1:10"));
}

Instance TwoBlockInstance(uint64_t seed, int n, int m) {
  Rng rng(seed);
  Instance inst;
  for (int i = 0; i < n; ++i) {
    inst.disks.push_back({i, {10.0 * rng.Unit(), 4.0 * rng.Unit()}, 1.0 + 9.0 * rng.Unit()});
  }
  // Points only where some disk reaches, so the instance is feasible.
  while (static_cast<int>(inst.points.size()) < m && n > 0) {
    const Disk& d = inst.disks[rng.Below(n)];
    double r = std::sqrt(rng.Unit()) * 0.999, th = kTwoPi * rng.Unit();
    inst.points.push_back({d.center.x + r * std::cos(th), d.center.y + r * std::sin(th)});
  }
  inst.meta["generator"] = "two_block";
  return inst;
}

Instance ClusteredInstance(uint64_t seed, int n, int m, double eps, double spread) {
  Rng rng(seed);
  Instance inst;
  std::vector<Point> centers;
  for (int i = 0; i < 3; ++i) centers.push_back({0.5 + 2.0 * rng.Unit(), 0.5 + 2.0 * rng.Unit()});
  for (int i = 0; i < n; ++i) {
    Point c = centers[i % 3];
    inst.disks.push_back({i,
                          {c.x + spread * (rng.Unit() - 0.5), c.y + spread * (rng.Unit() - 0.5)},
                          1.0 + std::floor(10.0 * rng.Unit())});
  }
  SquareGrid grid = BuildGrid(Box{-2, -2, 7}, eps);
  auto sample_in = [&](const Disk& d) {
    double r = std::sqrt(rng.Unit()) * 0.999, th = kTwoPi * rng.Unit();
    return Point{d.center.x + r * std::cos(th), d.center.y + r * std::sin(th)};
  };
  // Dropping a disk can change the gadgets, so repeat until every disk keeps
  // a point.
  for (int round = 0; round < 50; ++round) {
    std::vector<int> pool;
    for (const Disk& d : inst.disks) pool.push_back(d.id);
    GadgetSet gadgets = BuildGadgets(inst.disks, pool, grid);
    std::vector<char> in_gadget(inst.disks.size(), 0);
    for (const Gadget& g : gadgets.gadgets) in_gadget[g.ds] = in_gadget[g.dt] = 1;
    auto outside = [&](Point p) {
      for (size_t i = 0; i < in_gadget.size(); ++i) {
        if (in_gadget[i] && PointInDisk(p, inst.disks[i], 1e-6)) return false;
      }
      return true;
    };
    std::vector<Point> points;
    std::vector<Disk> kept;
    bool dropped = false;
    for (const Disk& d : inst.disks) {
      bool found = false;
      for (int t = 0; t < 400 && !found; ++t) {
        Point p = sample_in(d);
        if (in_gadget[d.id] || outside(p)) {
          points.push_back(p);
          found = true;
        }
      }
      if (found) {
        kept.push_back(d);
      } else {
        dropped = true;
      }
    }
    for (int t = 0; t < 4000 && static_cast<int>(points.size()) < m; ++t) {
      Point p = sample_in(inst.disks[rng.Below(static_cast<int>(inst.disks.size()))]);
      if (outside(p)) points.push_back(p);
    }
    inst.points = points;
    if (!dropped) break;
    for (size_t i = 0; i < kept.size(); ++i) kept[i].id = static_cast<int>(i);
    inst.disks = kept;
  }
  inst.meta["generator"] = "clustered";
  return inst;
}

std::vector<Vertex> RandomUdg(uint64_t seed, int n, double side) {
  Rng rng(seed);
  std::vector<Vertex> v;
  for (int i = 0; i < n; ++i) {
    v.push_back({{side * rng.Unit(), side * rng.Unit()}, 1.0 + std::floor(9.0 * rng.Unit())});
  }
  return v;
}

DpSubstructure CapSubstructure(const std::vector<Cap>& caps,
                              const std::vector<std::pair<int, Point>>& points) {
  DpSubstructure sub;
  std::vector<Cap> used;
  for (const Cap& c : caps) {
    if (!(c.center.y < 0.0 && c.center.y > -1.0)) continue;
    double half = std::sqrt(1.0 - c.center.y * c.center.y);
    DpArc a;
    a.disk = c.disk;
    a.weight = c.weight;
    a.start = c.center.x - half;
    a.end = c.center.x + half;
    a.length = kPi - 2.0 * std::asin(-c.center.y);
    for (const auto& [id, p] : points) {
      if (p.y > 0.0 && Dist(p, c.center) <= 1.0) a.points.push_back(id);
    }
    sub.arcs.push_back(a);
    used.push_back(c);
  }
  int n = static_cast<int>(used.size());
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      if (!ArcPrecedes(sub.arcs[a], sub.arcs[c]) || !(sub.arcs[c].start < sub.arcs[a].end)) {
        continue;
      }
      Disk da{0, used[a].center, 0.0}, dc{1, used[c].center, 0.0};
      for (Point x : CircleIntersections(da, dc).points) {
        if (x.y <= 0.0) continue;
        sub.crossings.push_back({a, c, CapParam(used[a], x), CapParam(used[c], x)});
      }
    }
  }
  return sub;
}

DpSubstructure CapFixture(uint64_t seed, int arcs, int points, int first_disk,
                          int first_point) {
  Rng rng(seed);
  double width = 0.35 * arcs + 0.5;
  std::vector<Cap> caps;
  for (int i = 0; i < arcs; ++i) {
    caps.push_back({first_disk + i, 1.0 + rng.Below(9),
                    {width * rng.Unit(), -(0.15 + 0.7 * rng.Unit())}});
  }
  std::vector<std::pair<int, Point>> pts;
  for (int t = 0; t < 10000 && static_cast<int>(pts.size()) < points; ++t) {
    Point p = SampleBox(rng, -1.0, width + 1.0, 0.0, 1.0);
    bool in = false;
    for (const Cap& c : caps) in |= Dist(p, c.center) <= 1.0;
    if (in && p.y > 0.0) pts.push_back({first_point + static_cast<int>(pts.size()), p});
  }
  return CapSubstructure(caps, pts);
}

DpProblem OverlapFixture(uint64_t seed, int arcs_each, int points_each, int shared) {
  // Baseline A is y = 0 with caps above it; baseline B is y = gap with caps
  // hanging below it. B is stored mirrored into the standard frame.
  const double gap = 0.8;
  Rng rng(seed);
  double width = 0.35 * arcs_each + 0.5;
  std::vector<Cap> lower, upper;
  for (int i = 0; i < arcs_each; ++i) {
    lower.push_back({i, 1.0 + rng.Below(9), {width * rng.Unit(), -(0.15 + 0.7 * rng.Unit())}});
    upper.push_back(
        {100 + i, 1.0 + rng.Below(9), {width * rng.Unit(), gap + 0.15 + 0.7 * rng.Unit()}});
  }
  auto in_any = [](const std::vector<Cap>& caps, Point p) {
    for (const Cap& c : caps) {
      if (Dist(p, c.center) <= 1.0) return true;
    }
    return false;
  };
  std::vector<Point> pts;
  int want_a = points_each, want_b = points_each, want_shared = shared;
  for (int t = 0; t < 20000 && want_a + want_b + want_shared > 0; ++t) {
    Point p = SampleBox(rng, -1.0, width + 1.0, 0.0, gap);
    bool a = in_any(lower, p), b = in_any(upper, p);
    if (a && b && want_shared > 0) {
      --want_shared;
    } else if (a && !b && want_a > 0) {
      --want_a;
    } else if (b && !a && want_b > 0) {
      --want_b;
    } else {
      continue;
    }
    pts.push_back(p);
  }
  std::vector<std::pair<int, Point>> frame_a, frame_b;
  for (size_t i = 0; i < pts.size(); ++i) {
    frame_a.push_back({static_cast<int>(i), pts[i]});
    frame_b.push_back({static_cast<int>(i), {pts[i].x, gap - pts[i].y}});
  }
  std::vector<Cap> mirrored;
  for (const Cap& c : upper) mirrored.push_back({c.disk, c.weight, {c.center.x, gap - c.center.y}});
  DpProblem problem;
  problem.subs.push_back(CapSubstructure(lower, frame_a));
  problem.subs.push_back(CapSubstructure(mirrored, frame_b));
  return problem;
}

DpProblem SiblingFixture(uint64_t seed, int arcs_each) {
  // A strip -g < y < 0 is covered. The sibling disk pokes out on both sides
  // and alone covers one point on each side.
  const double g = 1.2;
  for (uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed * 1000 + attempt);
    double width = 0.35 * arcs_each + 0.5;
    std::vector<Cap> caps;
    caps.push_back({kSiblingDisk, 4.0, {width * (0.3 + 0.4 * rng.Unit()), -0.6}});
    // Other disks reach out on one side only.
    for (int i = 0; i < 2 * (arcs_each - 1); ++i) {
      double y = i % 2 == 0 ? -0.05 - 0.14 * rng.Unit() : -1.01 - 0.14 * rng.Unit();
      caps.push_back({i, 1.0 + rng.Below(9), {width * rng.Unit(), y}});
    }
    auto owners = [&](Point p) {
      std::vector<int> out;
      for (const Cap& c : caps) {
        if (Dist(p, c.center) <= 1.0) out.push_back(c.disk);
      }
      return out;
    };
    std::vector<Point> pts;
    bool ok = true;
    for (int side : {+1, -1}) {
      bool found = false;
      for (int t = 0; t < 2000 && !found; ++t) {
        Point p = side > 0 ? SampleBox(rng, 0.0, width, 0.0, 0.5)
                           : SampleBox(rng, 0.0, width, -g - 0.5, -g);
        if (owners(p) == std::vector<int>{kSiblingDisk}) {
          pts.push_back(p);
          found = true;
        }
      }
      ok &= found;
      for (int j = 0, t = 0; j < 3 && t < 2000; ++t) {
        Point p = side > 0 ? SampleBox(rng, -1.0, width + 1.0, 0.0, 1.0)
                           : SampleBox(rng, -1.0, width + 1.0, -g - 1.0, -g);
        if (!owners(p).empty()) {
          pts.push_back(p);
          ++j;
        }
      }
    }
    if (!ok) continue;
    std::vector<std::pair<int, Point>> above, below;
    for (size_t i = 0; i < pts.size(); ++i) {
      above.push_back({static_cast<int>(i), pts[i]});
      below.push_back({static_cast<int>(i), {pts[i].x, -g - pts[i].y}});
    }
    std::vector<Cap> flipped;
    for (const Cap& c : caps) flipped.push_back({c.disk, c.weight, {c.center.x, -g - c.center.y}});
    DpProblem problem;
    problem.subs.push_back(CapSubstructure(caps, above));
    problem.subs.push_back(CapSubstructure(flipped, below));
    return problem;
  }
}

}  // namespace udc::testing
