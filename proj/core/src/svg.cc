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

#include "udc/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace udc {
namespace {

class Canvas {
 public:
  Canvas(const Instance& instance, double scale) : scale_(scale) {
    bool any = false;
    auto grow = [&](Point p, double r) {
      if (!any) {
        x0_ = p.x - r, x1_ = p.x + r, y0_ = p.y - r, y1_ = p.y + r;
        any = true;
        return;
      }
      x0_ = std::min(x0_, p.x - r);
      x1_ = std::max(x1_, p.x + r);
      y0_ = std::min(y0_, p.y - r);
      y1_ = std::max(y1_, p.y + r);
    };
    for (const Disk& d : instance.disks) grow(d.center, 1.0);
    for (const Point& p : instance.points) grow(p, 0.0);
    if (!any) {
      x0_ = y0_ = -1.0;
      x1_ = y1_ = 1.0;
    }
    x0_ -= kMargin;
    y0_ -= kMargin;
    x1_ += kMargin;
    y1_ += kMargin;
  }

  std::string Num(double v) const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
  }
  std::string X(double x) const { return Num((x - x0_) * scale_); }
  std::string Y(double y) const { return Num((y1_ - y) * scale_); }
  std::string XY(Point p) const { return X(p.x) + " " + Y(p.y); }
  std::string Len(double r) const { return Num(r * scale_); }
  std::string Width() const { return Num((x1_ - x0_) * scale_); }
  std::string Height() const { return Num((y1_ - y0_) * scale_); }

  // Counterclockwise in the plane is clockwise on screen (y flipped).
  std::string ArcPath(Point center, double start, double extent) const {
    if (extent >= kTwoPi - 1e-12) {
      Point a = PointOnUnitCircle(center, start);
      Point b = PointOnUnitCircle(center, start + kPi);
      return "M " + XY(a) + " A " + Len(1) + " " + Len(1) + " 0 0 0 " + XY(b) +
             " A " + Len(1) + " " + Len(1) + " 0 0 0 " + XY(a);
    }
    Point a = PointOnUnitCircle(center, start);
    Point b = PointOnUnitCircle(center, start + extent);
    return "M " + XY(a) + " A " + Len(1) + " " + Len(1) + " 0 " +
           (extent > kPi ? "1" : "0") + " 0 " + XY(b);
  }

 private:
  static constexpr double kMargin = 0.25;
  double scale_;
  double x0_ = 0.0, x1_ = 0.0, y0_ = 0.0, y1_ = 0.0;
};

void Circle(std::ostringstream& out, const Canvas& c, Point center, const char* attrs) {
  out << "    <circle cx=\"" << c.X(center.x) << "\" cy=\"" << c.Y(center.y) << "\" r=\""
      << c.Len(1) << "\" " << attrs << "/>\n";
}

// Pieces of `curve` between arclength positions [lo, hi), hi <= length.
void CurveSpan(std::ostringstream& out, const Canvas& c, const Instance& instance,
               const BoundaryCurve& curve, double lo, double hi) {
  for (const BoundaryPiece& piece : curve.pieces) {
    double a = std::max(lo, piece.offset);
    double b = std::min(hi, piece.offset + piece.interval.extent);
    if (b - a <= 1e-12) continue;
    Point center = instance.disks[piece.interval.disk_id].center;
    out << "    <path d=\""
        << c.ArcPath(center, piece.interval.start + (a - piece.offset), b - a)
        << "\"/>\n";
  }
}

void ActiveRegionLayer(std::ostringstream& out, const Canvas& c, const Instance& instance,
                       const GadgetSet& gadgets) {
  std::ostringstream defs, body;
  for (size_t i = 0; i < gadgets.gadgets.size(); ++i) {
    const Gadget& g = gadgets.gadgets[i];
    for (const ActiveRegion& region :
         ActiveRegions(g, static_cast<int>(i), instance.disks)) {
      std::string id = "ar" + std::to_string(i) + (region.halfplane > 0 ? "p" : "m");
      Point u = (1.0 / Dist(g.s, g.t)) * (g.t - g.s);
      Point n = static_cast<double>(region.halfplane) * Point{-u.y, u.x};
      const double far = 100.0;
      Point q1 = g.s - far * u, q2 = g.t + far * u;
      Point q3 = q2 + far * n, q4 = q1 + far * n;
      defs << "    <mask id=\"" << id << "\" maskUnits=\"userSpaceOnUse\">\n"
           << "      <polygon points=\"" << c.X(q1.x) << "," << c.Y(q1.y) << " "
           << c.X(q2.x) << "," << c.Y(q2.y) << " " << c.X(q3.x) << "," << c.Y(q3.y)
           << " " << c.X(q4.x) << "," << c.Y(q4.y) << "\" fill=\"white\"/>\n";
      for (Point center : {g.s, g.t}) {
        defs << "      <circle cx=\"" << c.X(center.x) << "\" cy=\"" << c.Y(center.y)
             << "\" r=\"" << c.Len(1) << "\" fill=\"black\"/>\n";
      }
      defs << "    </mask>\n";
      body << "    <g mask=\"url(#" << id << ")\">\n";
      for (int d : region.disks) {
        body << "  ";
        Circle(body, c, instance.disks[d].center, "");
      }
      body << "    </g>\n";
    }
  }
  if (defs.str().empty()) return;
  out << "  <defs>\n" << defs.str() << "  </defs>\n";
  out << "  <g id=\"active-regions\" fill=\"#f4c542\" fill-opacity=\"0.45\" stroke=\"none\">\n"
      << body.str() << "  </g>\n";
}

}  // namespace

std::string RenderSvg(const Instance& instance, const RenderOptions& options) {
  Canvas c(instance, options.scale);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.Width()
      << "\" height=\"" << c.Height() << "\" viewBox=\"0 0 " << c.Width() << " "
      << c.Height() << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const HResult* h = options.h;
  if (h) ActiveRegionLayer(out, c, instance, h->gadgets);

  out << "  <g id=\"disks\" fill=\"none\" stroke=\"#9aa5b1\" stroke-width=\"1\">\n";
  for (const Disk& d : instance.disks) Circle(out, c, d.center, "");
  out << "  </g>\n";

  if (h) {
    out << "  <g id=\"helper\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6 4\">\n";
    for (int id : h->HDisks()) Circle(out, c, instance.disks[id].center, "");
    out << "  </g>\n";

    const Layout& layout = h->layout;
    out << "  <g id=\"baselines\" fill=\"none\" stroke=\"#2e7d32\" stroke-width=\"4\" "
           "stroke-opacity=\"0.6\">\n";
    for (const Baseline& b : layout.baselines) {
      const BoundaryCurve& curve = layout.curves[b.curve];
      if (b.cyclic) {
        CurveSpan(out, c, instance, curve, 0.0, curve.length);
        continue;
      }
      double end = b.start + b.length;
      CurveSpan(out, c, instance, curve, b.start, std::min(end, curve.length));
      if (end > curve.length) CurveSpan(out, c, instance, curve, 0.0, end - curve.length);
    }
    out << "  </g>\n";

    std::set<int> on_envelope;
    for (const Substructure& st : layout.subs) {
      try {
        for (int a : Envelope(layout, instance.disks, st.id)) on_envelope.insert(a);
      } catch (const BrokenChain&) {
        // Drawn as plain arcs.
      }
    }
    out << "  <g id=\"arcs\" fill=\"none\" stroke=\"#c62828\" stroke-width=\"1\">\n";
    for (size_t a = 0; a < layout.arcs.size(); ++a) {
      if (on_envelope.count(static_cast<int>(a))) continue;
      const UncoveredArc& arc = layout.arcs[a];
      out << "    <path d=\""
          << c.ArcPath(instance.disks[arc.disk].center, arc.span.start, arc.span.extent)
          << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g id=\"envelopes\" fill=\"none\" stroke=\"#c62828\" stroke-width=\"3\">\n";
    for (int a : on_envelope) {
      const UncoveredArc& arc = layout.arcs[a];
      out << "    <path d=\""
          << c.ArcPath(instance.disks[arc.disk].center, arc.span.start, arc.span.extent)
          << "\"/>\n";
    }
    out << "  </g>\n";
  }

  if (options.solution) {
    out << "  <g id=\"solution\" fill=\"#1565c0\" fill-opacity=\"0.08\" stroke=\"#1565c0\" "
           "stroke-width=\"2\">\n";
    for (int id : options.solution->disk_ids) {
      if (id >= 0 && id < instance.num_disks()) Circle(out, c, instance.disks[id].center, "");
    }
    out << "  </g>\n";
  }

  out << "  <g id=\"points\" fill=\"black\">\n";
  for (const Point& p : instance.points) {
    out << "    <circle cx=\"" << c.X(p.x) << "\" cy=\"" << c.Y(p.y) << "\" r=\"2.5\"/>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace udc
