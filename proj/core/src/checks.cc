#include "udc/checks.h"

#include <algorithm>
#include <set>

namespace udc {

bool OrderSeparable(const Layout& layout, std::span<const int> first,
                    std::span<const int> second) {
  for (int a : first) {
    for (int b : second) {
      if (ArcOrder(layout, a, b) != ArcRelation::kEarlier) return false;
    }
  }
  return true;
}

std::vector<SelfIntersection> FindSelfIntersections(const Layout& layout,
                                                    std::span<const Disk> disks,
                                                    int sub) {
  std::vector<SelfIntersection> out;
  const auto& arcs = layout.subs[sub].arcs;
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const UncoveredArc& a = layout.arcs[arcs[i]];
      const UncoveredArc& c = layout.arcs[arcs[j]];
      if (a.disk == c.disk || !a.points.Intersects(c.points)) continue;
      if (Adjacent(layout, disks, arcs[i], arcs[j])) continue;
      out.push_back({sub, arcs[i], arcs[j], (a.points & c.points).First()});
    }
  }
  return out;
}

std::vector<DoubleCrossing> FindDoubleCrossings(const Layout& layout,
                                                std::span<const Disk> disks,
                                                int sub) {
  std::vector<DoubleCrossing> out;
  const auto& arcs = layout.subs[sub].arcs;
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      int outside = 0;
      for (const ArcCrossing& x : ArcCrossings(layout, disks, arcs[i], arcs[j])) {
        bool inside_h = false;
        for (int id : layout.h) {
          if (PointStrictlyInDisk(x.point, disks[id])) {
            inside_h = true;
            break;
          }
        }
        if (!inside_h) ++outside;
      }
      if (outside > 1) out.push_back({sub, arcs[i], arcs[j]});
    }
  }
  return out;
}

std::vector<std::vector<int>> PointOwners(const Layout& layout) {
  std::vector<std::vector<int>> owners(layout.remaining.capacity());
  for (const Substructure& st : layout.subs) {
    for (int p : SubstructurePoints(layout, st.id).Elements()) {
      owners[p].push_back(st.id);
    }
  }
  return owners;
}

std::optional<OrderViolation> FindPointOrderViolation(const Layout& layout, int s,
                                                      int t) {
  PointSet shared = SubstructurePoints(layout, s) & SubstructurePoints(layout, t);
  std::vector<int> pts = shared.Elements();
  auto covering = [&](int sub, int p) {
    std::vector<int> out;
    for (int a : layout.subs[sub].arcs) {
      if (layout.arcs[a].points.Test(p)) out.push_back(a);
    }
    return out;
  };
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      int p1 = pts[i], p2 = pts[j];
      std::vector<int> s1 = covering(s, p1), s2 = covering(s, p2);
      std::vector<int> t1 = covering(t, p1), t2 = covering(t, p2);
      for (int a1 : s1) {
        if (layout.arcs[a1].points.Test(p2)) continue;
        for (int a2 : s2) {
          if (layout.arcs[a2].points.Test(p1)) continue;
          ArcRelation ra = ArcOrder(layout, a1, a2);
          if (ra == ArcRelation::kIncomparable) continue;
          for (int b1 : t1) {
            if (layout.arcs[b1].points.Test(p2)) continue;
            for (int b2 : t2) {
              if (layout.arcs[b2].points.Test(p1)) continue;
              ArcRelation rb = ArcOrder(layout, b1, b2);
              if (rb == ArcRelation::kIncomparable || rb == ra) continue;
              return OrderViolation{s, t, p1, p2, a1, a2, b1, b2};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<int> EnvelopeLabels(const Layout& layout, std::span<const int> envelope,
                                std::span<const int> others) {
  std::vector<PointSet> foreign;
  for (int o : others) foreign.push_back(SubstructurePoints(layout, o));
  std::vector<int> labels;
  for (int a : envelope) {
    int label = 0;
    for (size_t k = 0; k < foreign.size(); ++k) {
      if (!layout.arcs[a].points.Intersects(foreign[k])) continue;
      label = label == 0 ? static_cast<int>(k) + 1 : -1;
    }
    labels.push_back(label);
  }
  return labels;
}

std::vector<int> CompressLabels(std::span<const int> labels) {
  std::vector<int> out;
  size_t n = labels.size();
  for (size_t j = 0; j < n;) {
    int l = labels[j];
    size_t last = j;
    if (l != 0) {
      // Fold the longest stretch of l and 0 that ends on l.
      for (size_t t = j + 1; t < n && (labels[t] == 0 || labels[t] == l); ++t) {
        if (labels[t] == l) last = t;
      }
    }
    if (out.empty() || out.back() != l) out.push_back(l);
    j = last + 1;
  }
  return out;
}

bool HasAbabPattern(std::span<const int> compressed) {
  // Any two distinct nonzero letters alternating twice.
  std::set<int> letters;
  for (int l : compressed) {
    if (l != 0) letters.insert(l);
  }
  for (int x : letters) {
    for (int y : letters) {
      if (x == y) continue;
      int stage = 0;  // matched prefix of x y x y
      for (int l : compressed) {
        int want = (stage % 2 == 0) ? x : y;
        if (l == want && ++stage == 4) return true;
      }
    }
  }
  return false;
}

bool CheckReport::ok() const { return failures() == 0; }

int CheckReport::failures() const {
  int n = 0;
  for (const CheckResult& r : results) n += static_cast<int>(r.failures.size());
  return n;
}

CheckReport CheckHResult(const HResult& result, std::span<const Disk> disks, int K) {
  const Layout& layout = result.layout;
  CheckReport report;

  CheckResult angle{"central_angle", 0, {}};
  for (const UncoveredArc& a : layout.arcs) {
    ++angle.checked;
    if (!(a.span.extent < kPi)) {
      angle.failures.push_back("disk " + std::to_string(a.disk) + " arc angle " +
                               std::to_string(a.span.extent));
    }
  }
  report.results.push_back(angle);

  CheckResult p1{"P1_region_uniqueness", 0, {}};
  for (size_t s = 0; s < result.regions.size(); ++s) {
    ++p1.checked;
    if (result.regions[s].size() > 1) {
      p1.failures.push_back("substructure " + std::to_string(s) + " holds " +
                            std::to_string(result.regions[s].size()) + " regions");
    }
  }
  report.results.push_back(p1);

  CheckResult p2{"P2_non_self_intersection", 0, {}};
  CheckResult single{"single_intersection", 0, {}};
  for (const Substructure& st : layout.subs) {
    ++p2.checked;
    ++single.checked;
    for (const SelfIntersection& v : FindSelfIntersections(layout, disks, st.id)) {
      p2.failures.push_back("substructure " + std::to_string(st.id) + " arcs " +
                            std::to_string(v.a) + "," + std::to_string(v.c) +
                            " share point " + std::to_string(v.point));
    }
    for (const DoubleCrossing& v : FindDoubleCrossings(layout, disks, st.id)) {
      single.failures.push_back("substructure " + std::to_string(st.id) + " arcs " +
                                std::to_string(v.a) + "," + std::to_string(v.c));
    }
    if (st.baseline.cyclic) {
      p2.failures.push_back("substructure " + std::to_string(st.id) + " is cyclic");
    }
  }
  report.results.push_back(p2);
  report.results.push_back(single);

  // The graph is rebuilt here rather than trusted from the builder.
  RelationGraph g = BuildRelationGraph(layout);
  CheckResult p3{"P3_acyclic_2_matching", 1, {}};
  auto matching = [&](const std::vector<std::pair<int, int>>& edges, const char* color) {
    std::vector<int> deg(g.num_nodes, 0);
    for (auto [a, b] : edges) {
      if (++deg[a] > 1 || ++deg[b] > 1) {
        p3.failures.push_back(std::string(color) + " edges not a matching at " +
                              std::to_string(a) + "-" + std::to_string(b));
      }
    }
  };
  matching(g.blue, "blue");
  matching(g.red, "red");
  std::vector<std::pair<int, int>> all = g.blue;
  all.insert(all.end(), g.red.begin(), g.red.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (!FindCycle(g.num_nodes, all).empty()) p3.failures.push_back("relation graph has a cycle");
  if (g.blue != result.graph.blue || g.red != result.graph.red) {
    p3.failures.push_back("builder graph differs from recomputed graph");
  }
  report.results.push_back(p3);

  CheckResult p4{"P4_point_order", 0, {}};
  std::vector<std::vector<int>> owners = PointOwners(layout);
  for (size_t p = 0; p < owners.size(); ++p) {
    if (owners[p].empty()) continue;
    ++p4.checked;
    if (owners[p].size() > 2) {
      p4.failures.push_back("point " + std::to_string(p) + " in " +
                            std::to_string(owners[p].size()) + " substructures");
    }
  }
  for (auto [s, t] : g.red) {
    ++p4.checked;
    if (auto v = FindPointOrderViolation(layout, s, t)) {
      p4.failures.push_back("points " + std::to_string(v->p1) + "," +
                            std::to_string(v->p2) + " ordered oppositely in " +
                            std::to_string(s) + "," + std::to_string(t));
    }
  }
  report.results.push_back(p4);

  CheckResult ledger{"ledger_bound", 1, {}};
  if (result.ledger.total > 64 * K * K) {
    ledger.failures.push_back("ledger " + std::to_string(result.ledger.total) +
                              " exceeds 64*K^2 = " + std::to_string(64 * K * K));
  }
  report.results.push_back(ledger);
  return report;
}

}  // namespace udc
