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

#include "udc/hbuilder.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "udc/checks.h"

namespace udc {

void CutLedger::Add(CutRecord record) {
  counts[record.op] += static_cast<int>(record.disks.size());
  total += static_cast<int>(record.disks.size());
  records.push_back(std::move(record));
}

std::vector<std::vector<int>> RelationGraph::Neighbors() const {
  std::vector<std::set<int>> adj(num_nodes);
  for (const auto* edges : {&blue, &red}) {
    for (auto [a, b] : *edges) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  std::vector<std::vector<int>> out(num_nodes);
  for (int i = 0; i < num_nodes; ++i) out[i].assign(adj[i].begin(), adj[i].end());
  return out;
}

RelationGraph BuildRelationGraph(const Layout& layout) {
  RelationGraph g;
  g.num_nodes = static_cast<int>(layout.subs.size());
  std::set<std::pair<int, int>> blue, red;
  std::map<int, std::set<int>> subs_of_disk;
  for (const UncoveredArc& a : layout.arcs) subs_of_disk[a.disk].insert(a.sub);
  for (const auto& [disk, subs] : subs_of_disk) {
    for (int x : subs) {
      for (int y : subs) {
        if (x < y) blue.insert({x, y});
      }
    }
  }
  std::vector<PointSet> pts;
  for (const Substructure& st : layout.subs) pts.push_back(SubstructurePoints(layout, st.id));
  for (int x = 0; x < g.num_nodes; ++x) {
    for (int y = x + 1; y < g.num_nodes; ++y) {
      if (pts[x].Intersects(pts[y])) red.insert({x, y});
    }
  }
  g.blue.assign(blue.begin(), blue.end());
  g.red.assign(red.begin(), red.end());
  return g;
}

std::vector<int> FindCycle(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<int>> tree(num_nodes);
  for (auto [a, b] : edges) {
    if (find(a) != find(b)) {
      parent[find(a)] = find(b);
      tree[a].push_back(b);
      tree[b].push_back(a);
      continue;
    }
    // Tree path from a to b closes the cycle.
    std::vector<int> prev(num_nodes, -1);
    std::queue<int> q;
    q.push(a);
    prev[a] = a;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : tree[u]) {
        if (prev[v] < 0) {
          prev[v] = u;
          q.push(v);
        }
      }
    }
    std::vector<int> cycle;
    for (int v = b; v != a; v = prev[v]) cycle.push_back(v);
    cycle.push_back(a);
    return cycle;
  }
  return {};
}

std::vector<bool> OrientPaths(const RelationGraph& graph) {
  std::vector<std::vector<int>> adj = graph.Neighbors();
  std::vector<bool> reversed(graph.num_nodes, false);
  std::vector<bool> seen(graph.num_nodes, false);
  auto walk = [&](int start) {
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        reversed[v] = !reversed[u];
        q.push(v);
      }
    }
  };
  for (int i = 0; i < graph.num_nodes; ++i) {
    if (!seen[i] && adj[i].size() <= 1) walk(i);
  }
  for (int i = 0; i < graph.num_nodes; ++i) {
    if (!seen[i]) walk(i);
  }
  return reversed;
}

std::vector<int> HResult::HDisks() const {
  std::vector<int> out = gadget_disks;
  out.insert(out.end(), cut_disks.begin(), cut_disks.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::map<RegionKey, std::vector<int>> RegionArcs(const Layout& layout,
                                                 std::span<const Disk> disks,
                                                 const GadgetSet& gadgets) {
  std::map<RegionKey, std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(layout.arcs.size()); ++i) {
    const UncoveredArc& a = layout.arcs[i];
    int gi = gadgets.gadget_of_disk[a.disk];
    if (gi < 0) continue;
    const Gadget& g = gadgets.gadgets[gi];
    if (g.singleton || a.disk == g.ds || a.disk == g.dt) continue;
    if (!InCoreCentral(disks[a.disk].center, g)) continue;
    out[MakeRegionKey(gi, a.halfplane)].push_back(i);
  }
  return out;
}

namespace {

class Builder {
 public:
  Builder(const HInput& in, const HBuilderConfig& cfg, HResult& r)
      : in_(in), cfg_(cfg), r_(r), in_h_(in.disks.size(), 0) {}

  void Run();

 private:
  Layout Rebuild() const;
  // Adds the disks not yet in H; false if all were there already.
  bool Add(std::vector<int> disks, const std::string& op, std::vector<int> subs);
  // Add, falling back to the lightest unused arc disk of `subs` so every
  // round makes progress.
  void AddOrFallback(const Layout& L, std::vector<int> disks, const std::string& op,
                     std::vector<int> subs);
  void LabelCut(const Layout& L, int sub, const std::vector<int>& first,
                const std::vector<int>& second, const std::string& op);
  int LightestCovering(const Layout& L, int point) const;
  int WidestArc(const Layout& L, const std::vector<int>& arcs) const;

  bool Anomalies(const Layout& L);
  bool Coverage(const Layout& L);
  bool Cycles(const Layout& L);
  bool Chains(const Layout& L);
  bool Regions(const Layout& L);
  bool SelfIntersections(const Layout& L);
  bool DoubleCrossings(const Layout& L);
  bool Overlaps(const Layout& L, const RelationGraph& g);
  bool PointOrder(const Layout& L, const RelationGraph& g);
  void Finish(Layout L, RelationGraph g);
  void Diagnose(const Layout& L);

  const HInput& in_;
  const HBuilderConfig& cfg_;
  HResult& r_;
  std::vector<char> in_h_;
  std::vector<std::vector<int>> envelopes_;
  std::vector<std::vector<RegionKey>> classes_;
  std::map<RegionKey, std::vector<int>> region_arcs_;
  std::set<RegionKey> isolated_;
};

Layout Builder::Rebuild() const {
  LayoutInput li;
  li.disks = in_.disks;
  li.points = in_.points;
  li.done = in_.done;
  li.h = r_.HDisks();
  for (int id : in_.pool) {
    if (!in_h_[id]) li.pool.push_back(id);
  }
  li.gadgets = &r_.gadgets;
  return BuildLayout(li);
}

bool Builder::Add(std::vector<int> disks, const std::string& op, std::vector<int> subs) {
  std::sort(disks.begin(), disks.end());
  disks.erase(std::unique(disks.begin(), disks.end()), disks.end());
  std::vector<int> fresh;
  for (int d : disks) {
    if (d >= 0 && !in_h_[d]) {
      in_h_[d] = 1;
      fresh.push_back(d);
      r_.cut_disks.push_back(d);
    }
  }
  if (fresh.empty()) return false;
  r_.ledger.Add({op, fresh, std::move(subs)});
  return true;
}

void Builder::AddOrFallback(const Layout& L, std::vector<int> disks,
                            const std::string& op, std::vector<int> subs) {
  if (Add(disks, op, subs)) return;
  std::vector<int> scope = subs;
  if (scope.empty()) {
    for (const Substructure& st : L.subs) scope.push_back(st.id);
  }
  int best = -1;
  for (int s : scope) {
    for (int a : L.subs[s].arcs) {
      int d = L.arcs[a].disk;
      if (in_h_[d]) continue;
      if (best < 0 || in_.disks[d].weight < in_.disks[best].weight ||
          (in_.disks[d].weight == in_.disks[best].weight && d < best)) {
        best = d;
      }
    }
  }
  if (best < 0 || !Add({best}, op, subs)) {
    throw std::logic_error("hbuilder made no progress in " + op);
  }
}

int Builder::LightestCovering(const Layout& L, int point) const {
  int best = -1;
  for (int d : L.arc_disks) {
    if (in_h_[d] || !PointInDisk(in_.points[point], in_.disks[d])) continue;
    if (best < 0 || in_.disks[d].weight < in_.disks[best].weight) best = d;
  }
  return best;
}

int Builder::WidestArc(const Layout& L, const std::vector<int>& arcs) const {
  int best = -1;
  for (int a : arcs) {
    if (best < 0 || L.arcs[a].foot_length > L.arcs[best].foot_length) best = a;
  }
  return best;
}

void Builder::LabelCut(const Layout& L, int sub, const std::vector<int>& first,
                       const std::vector<int>& second, const std::string& op) {
  const std::vector<int>& env = envelopes_[sub];
  std::set<int> labeled(first.begin(), first.end());
  labeled.insert(second.begin(), second.end());
  // One envelope arc strictly between the two sets is enough.
  for (int e : env) {
    if (labeled.count(e)) continue;
    bool between = true;
    for (int a : first) between &= ArcOrder(L, a, e) == ArcRelation::kEarlier;
    for (int b : second) between &= ArcOrder(L, e, b) == ArcRelation::kEarlier;
    if (between) {
      AddOrFallback(L, {L.arcs[e].disk}, op, {sub});
      return;
    }
  }
  // Otherwise the two consecutive envelope arcs at the label change.
  int k = -1;
  for (int i = 0; i < static_cast<int>(env.size()); ++i) {
    if (std::find(first.begin(), first.end(), env[i]) != first.end()) k = i;
  }
  std::vector<int> disks;
  if (k >= 0 && k + 1 < static_cast<int>(env.size())) {
    disks = {L.arcs[env[k]].disk, L.arcs[env[k + 1]].disk};
  } else if (!second.empty()) {
    disks = {L.arcs[WidestArc(L, second)].disk};
  }
  AddOrFallback(L, disks, op, {sub});
}

bool Builder::Anomalies(const Layout& L) {
  if (L.anomalies.empty()) return false;
  std::vector<int> disks;
  for (const Anomaly& a : L.anomalies) disks.push_back(a.disk);
  AddOrFallback(L, disks, "anomaly", {});
  return true;
}

bool Builder::Coverage(const Layout& L) {
  if (L.unclaimed.empty()) return false;
  AddOrFallback(L, {LightestCovering(L, L.unclaimed.front())}, "coverage", {});
  return true;
}

bool Builder::Cycles(const Layout& L) {
  for (const Substructure& st : L.subs) {
    if (!st.baseline.cyclic) continue;
    std::set<int> region;
    for (const auto& [key, arcs] : region_arcs_) region.insert(arcs.begin(), arcs.end());
    std::vector<int> plain, all = st.arcs;
    for (int a : st.arcs) {
      if (!region.count(a)) plain.push_back(a);
    }
    int pick = WidestArc(L, plain.empty() ? all : plain);
    AddOrFallback(L, {L.arcs[pick].disk}, "cycle", {st.id});
    return true;
  }
  return false;
}

bool Builder::Chains(const Layout& L) {
  envelopes_.assign(L.subs.size(), {});
  for (const Substructure& st : L.subs) {
    try {
      envelopes_[st.id] = Envelope(L, in_.disks, st.id);
    } catch (const BrokenChain& e) {
      AddOrFallback(L, {L.arcs[e.arc].disk}, "broken_chain", {st.id});
      return true;
    }
  }
  return false;
}

bool Builder::Regions(const Layout& L) {
  int n = static_cast<int>(L.subs.size());
  std::vector<std::map<RegionKey, std::vector<int>>> per_sub(n);
  for (const auto& [key, arcs] : region_arcs_) {
    for (int a : arcs) per_sub[L.arcs[a].sub][key].push_back(a);
  }
  std::map<RegionKey, RegionKey> parent;
  std::function<RegionKey(RegionKey)> find = [&](RegionKey k) {
    if (!parent.count(k)) parent[k] = k;
    return parent[k] == k ? k : parent[k] = find(parent[k]);
  };
  auto mixed = [&](int s, RegionKey x, RegionKey y) {
    auto ix = per_sub[s].find(x), iy = per_sub[s].find(y);
    if (ix == per_sub[s].end() || iy == per_sub[s].end()) return false;
    return !OrderSeparable(L, ix->second, iy->second) &&
           !OrderSeparable(L, iy->second, ix->second);
  };
  for (int s = 0; s < n; ++s) {
    for (const auto& [x, ax] : per_sub[s]) {
      for (const auto& [y, ay] : per_sub[s]) {
        if (x >= y || x / 2 == y / 2 || !mixed(s, x, y)) continue;
        // Mixed here; a double mixture is mixed on the other side as well.
        bool other = false;
        for (int t = 0; t < n && !other; ++t) other = mixed(t, x ^ 1, y ^ 1);
        if (!other) {
          std::vector<int> both = ax;
          both.insert(both.end(), ay.begin(), ay.end());
          AddOrFallback(L, {L.arcs[WidestArc(L, both)].disk}, "mixture", {s});
          return true;
        }
        if (find(x) != find(y)) {
          ++r_.diag.double_mixtures;
          const Gadget& g1 = r_.gadgets.gadgets[x / 2];
          const Gadget& g2 = r_.gadgets.gadgets[y / 2];
          if (std::abs(g1.square.first - g2.square.first) > 1 ||
              std::abs(g1.square.second - g2.square.second) > 1) {
            ++r_.diag.mixture_adjacency_failures;
          }
          double a1 = std::atan2(g1.t.y - g1.s.y, g1.t.x - g1.s.x);
          double a2 = std::atan2(g2.t.y - g2.s.y, g2.t.x - g2.s.x);
          double diff = std::fmod(std::abs(a1 - a2), kPi);
          if (std::min(diff, kPi - diff) > r_.angle_cap) ++r_.diag.mixture_angle_failures;
        }
        parent[find(x)] = find(y);
        parent[find(x ^ 1)] = find(y ^ 1);
      }
    }
  }
  classes_.assign(n, {});
  for (int s = 0; s < n; ++s) {
    std::map<RegionKey, std::vector<int>> cls;
    for (const auto& [key, arcs] : per_sub[s]) {
      auto& v = cls[find(key)];
      v.insert(v.end(), arcs.begin(), arcs.end());
    }
    for (const auto& [key, arcs] : cls) classes_[s].push_back(key);
    if (cls.size() < 2) continue;
    std::vector<std::vector<int>> sets;
    for (auto& [key, arcs] : cls) {
      std::sort(arcs.begin(), arcs.end());
      sets.push_back(arcs);
    }
    for (size_t i = 0; i < sets.size(); ++i) {
      for (size_t j = 0; j < sets.size(); ++j) {
        if (i != j && OrderSeparable(L, sets[i], sets[j])) {
          LabelCut(L, s, sets[i], sets[j], "label_cut");
          return true;
        }
      }
    }
    std::vector<int> all;
    for (const auto& v : sets) all.insert(all.end(), v.begin(), v.end());
    AddOrFallback(L, {L.arcs[WidestArc(L, all)].disk}, "mixture", {s});
    return true;
  }
  if (cfg_.isolate_regions) {
    for (int s = 0; s < n; ++s) {
      if (classes_[s].size() != 1 || isolated_.count(classes_[s][0])) continue;
      std::vector<int> region;
      for (const auto& [key, arcs] : per_sub[s]) region.insert(region.end(), arcs.begin(), arcs.end());
      std::vector<int> before, after;
      for (int a : L.subs[s].arcs) {
        if (std::find(region.begin(), region.end(), a) != region.end()) continue;
        std::vector<int> one = {a};
        if (OrderSeparable(L, one, region)) before.push_back(a);
        if (OrderSeparable(L, region, one)) after.push_back(a);
      }
      isolated_.insert(classes_[s][0]);
      if (!before.empty()) {
        LabelCut(L, s, before, region, "isolation");
        return true;
      }
      if (!after.empty()) {
        LabelCut(L, s, region, after, "isolation");
        return true;
      }
    }
  }
  return false;
}

bool Builder::SelfIntersections(const Layout& L) {
  for (const Substructure& st : L.subs) {
    std::vector<SelfIntersection> found = FindSelfIntersections(L, in_.disks, st.id);
    if (found.empty()) continue;
    double x = std::numeric_limits<double>::infinity();
    for (const SelfIntersection& v : found) {
      x = std::min(x, std::max(OrientedStart(L, v.a), OrientedStart(L, v.c)));
    }
    // First envelope arc still running past the earliest failure.
    for (int e : envelopes_[st.id]) {
      if (OrientedEnd(L, e) > x) {
        AddOrFallback(L, {L.arcs[e].disk}, "self_intersection", {st.id});
        return true;
      }
    }
    AddOrFallback(L, {L.arcs[found[0].a].disk}, "self_intersection", {st.id});
    return true;
  }
  return false;
}

bool Builder::DoubleCrossings(const Layout& L) {
  for (const Substructure& st : L.subs) {
    std::vector<DoubleCrossing> found = FindDoubleCrossings(L, in_.disks, st.id);
    if (found.empty()) continue;
    int pick = WidestArc(L, {found[0].a, found[0].c});
    AddOrFallback(L, {L.arcs[pick].disk}, "single_intersection", {st.id});
    return true;
  }
  return false;
}

bool Builder::Overlaps(const Layout& L, const RelationGraph& g) {
  std::vector<std::vector<int>> owners = PointOwners(L);
  for (size_t p = 0; p < owners.size(); ++p) {
    if (owners[p].size() > 2) {
      AddOrFallback(L, {LightestCovering(L, static_cast<int>(p))}, "triple", owners[p]);
      return true;
    }
  }
  int n = g.num_nodes;
  std::vector<std::vector<int>> blue(n), red(n);
  for (auto [a, b] : g.blue) {
    blue[a].push_back(b);
    blue[b].push_back(a);
  }
  for (auto [a, b] : g.red) {
    red[a].push_back(b);
    red[b].push_back(a);
  }
  for (int s = 0; s < n; ++s) {
    if (blue[s].size() < 2) continue;
    std::sort(blue[s].begin(), blue[s].end());
    int t = blue[s][1];
    std::set<int> here, there;
    for (int a : L.subs[s].arcs) here.insert(L.arcs[a].disk);
    std::vector<int> shared;
    for (int a : L.subs[t].arcs) {
      if (here.count(L.arcs[a].disk)) shared.push_back(L.arcs[a].disk);
    }
    AddOrFallback(L, shared, "blue", {s, t});
    return true;
  }
  for (int s = 0; s < n; ++s) {
    if (red[s].size() < 2) continue;
    std::sort(red[s].begin(), red[s].end());
    std::vector<int> labels = EnvelopeLabels(L, envelopes_[s], red[s]);
    if (HasAbabPattern(CompressLabels(labels))) ++r_.diag.ds2_violations;
    PointSet p1 = SubstructurePoints(L, red[s][0]);
    PointSet p2 = SubstructurePoints(L, red[s][1]);
    std::vector<int> a1, a2;
    for (int a : L.subs[s].arcs) {
      bool x = L.arcs[a].points.Intersects(p1), y = L.arcs[a].points.Intersects(p2);
      if (x && !y) a1.push_back(a);
      if (y && !x) a2.push_back(a);
    }
    if (!a1.empty() && !a2.empty()) {
      if (OrderSeparable(L, a1, a2)) {
        LabelCut(L, s, a1, a2, "l_segment");
        return true;
      }
      if (OrderSeparable(L, a2, a1)) {
        LabelCut(L, s, a2, a1, "l_segment");
        return true;
      }
    }
    int best = -1, best_count = -1;
    for (int a : L.subs[s].arcs) {
      int c = L.arcs[a].points.CountAnd(p2);
      if (c > best_count) {
        best = a;
        best_count = c;
      }
    }
    AddOrFallback(L, {L.arcs[best].disk}, "l_segment", {s, red[s][1]});
    return true;
  }
  return false;
}

bool Builder::PointOrder(const Layout& L, const RelationGraph& g) {
  for (auto [s, t] : g.red) {
    std::optional<OrderViolation> v = FindPointOrderViolation(L, s, t);
    if (!v) continue;
    // Cut the side without an active region.
    bool cut_s = classes_[s].empty() || !classes_[t].empty();
    int sub = cut_s ? s : t;
    int lo = cut_s ? v->a1 : v->b1;
    int hi = cut_s ? v->a2 : v->b2;
    if (ArcOrder(L, hi, lo) == ArcRelation::kEarlier) std::swap(lo, hi);
    int pick = -1;
    for (int c : L.subs[sub].arcs) {
      if (c == lo || c == hi) continue;
      if (ArcOrder(L, lo, c) == ArcRelation::kEarlier &&
          ArcOrder(L, c, hi) == ArcRelation::kEarlier) {
        pick = c;
        break;
      }
    }
    if (pick < 0) pick = hi;
    AddOrFallback(L, {L.arcs[pick].disk}, "point_order", {s, t});
    return true;
  }
  return false;
}

void Builder::Diagnose(const Layout& L) {
  for (size_t s = 0; s < classes_.size(); ++s) {
    for (RegionKey key : classes_[s]) {
      const Gadget& g = r_.gadgets.gadgets[key / 2];
      int side = (key & 1) ? 1 : -1;
      DomeRegion dome = Dome(g, side);
      double axis = std::atan2(g.t.y - g.s.y, g.t.x - g.s.x);
      for (int a : region_arcs_[key]) {
        if (L.arcs[a].sub != static_cast<int>(s)) continue;
        const UncoveredArc& arc = L.arcs[a];
        const Disk& d = in_.disks[arc.disk];
        ++r_.diag.dome_checks;
        Point mid = PointOnUnitCircle(d.center, arc.span.start + 0.5 * arc.span.extent);
        if (!dome.Contains(mid, 1e-7)) ++r_.diag.dome_failures;
        ++r_.diag.parallel_checks;
        double tangent = arc.span.start + 0.5 * arc.span.extent + 0.5 * kPi;
        double diff = std::fmod(std::abs(tangent - axis), kPi);
        if (arc.span.extent > r_.angle_cap || std::min(diff, kPi - diff) > r_.angle_cap) {
          ++r_.diag.parallel_failures;
        }
      }
    }
  }
}

void Builder::Finish(Layout L, RelationGraph g) {
  Diagnose(L);
  std::vector<std::vector<int>> adj = g.Neighbors();
  std::vector<bool> seen(g.num_nodes, false);
  for (int i = 0; i < g.num_nodes; ++i) {
    if (seen[i] || adj[i].size() > 1) continue;
    std::vector<int> path;
    int prev = -1, cur = i;
    while (cur >= 0 && !seen[cur]) {
      seen[cur] = true;
      path.push_back(cur);
      int next = -1;
      for (int v : adj[cur]) {
        if (v != prev && !seen[v]) next = v;
      }
      prev = cur;
      cur = next;
    }
    r_.components.push_back(std::move(path));
  }
  r_.regions = classes_;
  r_.graph = std::move(g);
  r_.layout = std::move(L);
}

void Builder::Run() {
  r_.gadgets = BuildGadgets(in_.disks, in_.pool, in_.grid);
  r_.angle_cap = cfg_.angle_cap > 0 ? cfg_.angle_cap : 8.0 * in_.grid.mu;
  for (const Gadget& g : r_.gadgets.gadgets) {
    for (int d : {g.ds, g.dt}) {
      if (!in_h_[d]) {
        in_h_[d] = 1;
        r_.gadget_disks.push_back(d);
      }
    }
  }
  std::sort(r_.gadget_disks.begin(), r_.gadget_disks.end());
  if (!in_.forced.empty()) Add(in_.forced, "dp_repair", {});

  for (int round = 0; round < cfg_.max_rounds; ++round) {
    r_.diag.rounds = round + 1;
    Layout L = Rebuild();
    if (!L.orphans.empty()) {
      throw NoFeasiblePath("point " + std::to_string(L.orphans.front()) +
                           " is covered by no allowed disk");
    }
    if (Anomalies(L) || Coverage(L)) continue;
    region_arcs_ = RegionArcs(L, in_.disks, r_.gadgets);
    if (Cycles(L) || Chains(L) || Regions(L) || SelfIntersections(L) ||
        DoubleCrossings(L)) {
      continue;
    }
    RelationGraph g = BuildRelationGraph(L);
    if (Overlaps(L, g)) continue;
    std::vector<std::pair<int, int>> edges = g.blue;
    edges.insert(edges.end(), g.red.begin(), g.red.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<int> cycle = FindCycle(g.num_nodes, edges);
    if (!cycle.empty()) {
      CycleDetected err(cycle, "relation graph has a cycle of length " +
                                   std::to_string(cycle.size()));
      for (int s : cycle) {
        const UncoveredArc& a = L.arcs[L.subs[s].arcs.front()];
        err.polygon.push_back(PointOnUnitCircle(in_.disks[a.disk].center,
                                                a.span.start + 0.5 * a.span.extent));
      }
      throw err;
    }
    std::vector<bool> rev = OrientPaths(g);
    for (size_t s = 0; s < L.subs.size(); ++s) L.subs[s].reversed = rev[s];
    if (PointOrder(L, g)) continue;
    Finish(std::move(L), std::move(g));
    return;
  }
  throw std::logic_error("hbuilder exceeded its round limit");
}

}  // namespace

HResult BuildH(const HInput& input, const HBuilderConfig& config) {
  HResult result;
  Builder(input, config, result).Run();
  return result;
}

DpProblem ToDpProblem(const HResult& result, std::span<const Disk> disks,
                      const std::vector<int>& component) {
  const Layout& L = result.layout;
  DpProblem problem;
  for (int s : component) {
    DpSubstructure sub;
    std::vector<int> arcs = L.subs[s].arcs;
    std::sort(arcs.begin(), arcs.end(), [&](int x, int y) {
      double sx = OrientedStart(L, x), sy = OrientedStart(L, y);
      if (sx != sy) return sx < sy;
      return x < y;
    });
    for (int a : arcs) {
      const UncoveredArc& arc = L.arcs[a];
      sub.arcs.push_back({arc.disk, disks[arc.disk].weight, OrientedStart(L, a),
                          OrientedEnd(L, a), arc.span.extent, arc.points.Elements()});
    }
    for (size_t i = 0; i < arcs.size(); ++i) {
      for (size_t j = 0; j < arcs.size(); ++j) {
        if (ArcOrder(L, arcs[i], arcs[j]) != ArcRelation::kEarlier) continue;
        for (const ArcCrossing& x : ArcCrossings(L, disks, arcs[i], arcs[j])) {
          sub.crossings.push_back({static_cast<int>(i), static_cast<int>(j),
                                   x.param_a, x.param_c});
        }
      }
    }
    problem.subs.push_back(std::move(sub));
  }
  return problem;
}

}  // namespace udc
