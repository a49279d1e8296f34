#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "spherecurves/curve_map.hpp"
#include "spherecurves/errors.hpp"
#include "spherecurves/rational.hpp"

namespace spherecurves {

inline int crossing_sign(const CurveMap& m, int v) { return m.sign[v]; }

// Traversal coordinates: visit t sits at 2t, a point at fraction f inside
// edge j sits at 2j + 2f; the circle has total length 4n.
inline Rational visit_coord(int t) { return Rational(2 * t); }
inline Rational edge_point_coord(int edge, const Rational& f) {
  return Rational(2 * edge) + Rational(2) * f;
}

// Index of the open arc running from coordinate `from` to coordinate `to`
// (endpoints excluded): the sum of signs of the crossings both of whose
// visits lie strictly inside, each sign taken relative to the arc's own
// visit order. Crossing ids in `excludes` are skipped entirely.
inline int arc_index(const CurveMap& m, const Rational& from,
                     const Rational& to,
                     const std::vector<int>& excludes = {}) {
  Rational len(4 * m.n);
  auto rel = [&](const Rational& p) {
    Rational d = p - from;
    return (d < Rational(0)) ? d + len : d;
  };
  Rational span = (to == from) ? len : rel(to);
  int sum = 0;
  for (int w = 0; w < m.n; ++w) {
    if (std::find(excludes.begin(), excludes.end(), w) != excludes.end())
      continue;
    Rational r1 = rel(visit_coord(m.visits[w][0]));
    Rational r2 = rel(visit_coord(m.visits[w][1]));
    bool in1 = Rational(0) < r1 && r1 < span;
    bool in2 = Rational(0) < r2 && r2 < span;
    if (in1 && in2) sum += (r1 < r2) ? m.sign[w] : -m.sign[w];
  }
  return sum;
}

// The (a, b) type of a crossing: indices of the two exterior arcs, the first
// being the loop the positively-oriented frame's first tangent leads to. For
// sign +1 that is the loop from the first departure to the second arrival.
inline std::pair<int, int> exterior_indices(const CurveMap& m, int v) {
  Rational c1 = visit_coord(m.visits[v][0]);
  Rational c2 = visit_coord(m.visits[v][1]);
  int first_loop = arc_index(m, c1, c2, {v});
  int second_loop = arc_index(m, c2, c1, {v});
  if (m.sign[v] > 0) return {first_loop, second_loop};
  return {second_loop, first_loop};
}

// Oriented smoothing of every crossing: disjoint embedded circles and the
// complementary regions they cut the sphere into.
struct Smoothing {
  int n_circles = 0;
  std::vector<int> circle_of_edge;
  int n_regions = 0;
  std::vector<int> region_of_face;
  std::vector<int> circle_left, circle_right;  // region on each side
  std::vector<int> region_d;
  std::vector<int> region_chi;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

inline Smoothing smooth(const CurveMap& m) {
  Smoothing s;
  if (m.n == 0) {
    s.n_circles = 1;
    s.n_regions = 2;
    s.region_of_face = {0, 1};
    s.circle_left = {0};
    s.circle_right = {1};
    s.region_d = {1, -1};
    s.region_chi = {1, 1};
    return s;
  }

  int ne = m.edges();

  // Circles: after smoothing, an edge's successor leaves the crossing by the
  // other strand's out-dart, the unique out-dart adjacent to the in-dart in
  // the rotation.
  auto next_edge = [&m](int j) {
    int i = m.alpha[CurveMap::out_dart(j)];
    int cand = m.sigma[i];
    if (!CurveMap::is_out(cand)) cand = m.sigma_inv[i];
    require(CurveMap::is_out(cand), "smoothing: no out-dart adjacent");
    return CurveMap::visit_of(cand);
  };
  s.circle_of_edge.assign(ne, -1);
  for (int j = 0; j < ne; ++j) {
    if (s.circle_of_edge[j] >= 0) continue;
    int id = s.n_circles++;
    for (int cur = j; s.circle_of_edge[cur] < 0; cur = next_edge(cur))
      s.circle_of_edge[cur] = id;
  }

  // Regions: at each crossing the corner between the two out-darts and the
  // corner between the two in-darts join across the smoothed vertex.
  detail::UnionFind uf(m.face_count());
  for (int v = 0; v < m.n; ++v) {
    int oo = -1, ii = -1;
    for (int visit : {m.visits[v][0], m.visits[v][1]}) {
      for (int d : {CurveMap::out_dart(visit), CurveMap::in_dart(visit)}) {
        bool d_out = CurveMap::is_out(d);
        bool p_out = CurveMap::is_out(m.sigma_inv[d]);
        if (d_out && p_out) oo = d;
        if (!d_out && !p_out) ii = d;
      }
    }
    require(oo >= 0 && ii >= 0, "smoothing: corner pattern missing");
    uf.unite(m.faces.face_of[oo], m.faces.face_of[ii]);
  }
  s.region_of_face.assign(m.face_count(), -1);
  for (int f = 0; f < m.face_count(); ++f) {
    int root = uf.find(f);
    if (s.region_of_face[root] < 0) s.region_of_face[root] = s.n_regions++;
    s.region_of_face[f] = s.region_of_face[root];
  }

  // Each circle separates the sphere; record the region on each side.
  s.circle_left.assign(s.n_circles, -1);
  s.circle_right.assign(s.n_circles, -1);
  for (int j = 0; j < ne; ++j) {
    int c = s.circle_of_edge[j];
    int lf = s.region_of_face[m.edge_left_face(j)];
    int rf = s.region_of_face[m.edge_right_face(j)];
    if (s.circle_left[c] < 0) {
      s.circle_left[c] = lf;
      s.circle_right[c] = rf;
    } else {
      require(s.circle_left[c] == lf && s.circle_right[c] == rf,
              "smoothing: circle sides disagree along the circle");
    }
  }
  for (int c = 0; c < s.n_circles; ++c)
    require(s.circle_left[c] != s.circle_right[c],
            "smoothing: circle fails to separate");

  // The region adjacency graph (vertices regions, edges circles) is a tree.
  require(s.n_circles == s.n_regions - 1, "smoothing: region graph not tree");

  // d(E) = sum over circles of +1 if E lies on the circle's left, else -1.
  // chi(E) = 2 - number of boundary circles.
  std::vector<std::vector<std::pair<int, int>>> adj(s.n_regions);
  for (int c = 0; c < s.n_circles; ++c) {
    adj[s.circle_left[c]].push_back({s.circle_right[c], c});
    adj[s.circle_right[c]].push_back({s.circle_left[c], c});
  }
  s.region_d.assign(s.n_regions, 0);
  s.region_chi.assign(s.n_regions, 2);
  for (int r = 0; r < s.n_regions; ++r)
    s.region_chi[r] -= static_cast<int>(adj[r].size());
  for (int c = 0; c < s.n_circles; ++c) {
    // BFS from the left region without crossing circle c marks its left side.
    std::vector<char> left_side(s.n_regions, 0);
    std::vector<int> stack = {s.circle_left[c]};
    left_side[s.circle_left[c]] = 1;
    while (!stack.empty()) {
      int r = stack.back();
      stack.pop_back();
      for (auto [nb, via] : adj[r]) {
        if (via == c || left_side[nb]) continue;
        left_side[nb] = 1;
        stack.push_back(nb);
      }
    }
    for (int r = 0; r < s.n_regions; ++r)
      s.region_d[r] += left_side[r] ? 1 : -1;
  }
  return s;
}

// d(R) for every face: the anchor face's label comes exactly from the
// smoothing decomposition, the rest by propagation (crossing the curve from
// its left face to its right face lowers d by 2).
struct RegionLabels {
  std::vector<int> d_of_face;
};

inline RegionLabels region_labels(const CurveMap& m) {
  RegionLabels labels;
  if (m.n == 0) {
    labels.d_of_face = {1, -1};
    return labels;
  }
  Smoothing s = smooth(m);
  labels.d_of_face.assign(m.face_count(), 0);
  std::vector<char> known(m.face_count(), 0);
  labels.d_of_face[0] = s.region_d[s.region_of_face[0]];
  known[0] = 1;
  std::vector<int> stack = {0};
  std::vector<std::vector<std::pair<int, int>>> nbr(m.face_count());
  for (int j = 0; j < m.edges(); ++j) {
    int lf = m.edge_left_face(j), rf = m.edge_right_face(j);
    nbr[lf].push_back({rf, -2});
    nbr[rf].push_back({lf, +2});
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (auto [g, delta] : nbr[f]) {
      int dg = labels.d_of_face[f] + delta;
      if (!known[g]) {
        known[g] = 1;
        labels.d_of_face[g] = dg;
        stack.push_back(g);
      } else {
        require(labels.d_of_face[g] == dg,
                "region labels: propagation inconsistent");
      }
    }
  }
  for (int f = 0; f < m.face_count(); ++f)
    require(known[f], "region labels: face graph disconnected");
  return labels;
}

// The cyclic tuple of region labels around crossing v, read counterclockwise
// starting from the corner between the two outgoing darts.
inline std::array<int, 4> crossing_d_tuple(const CurveMap& m,
                                           const RegionLabels& labels, int v) {
  int oo = -1;
  for (int visit : {m.visits[v][0], m.visits[v][1]}) {
    for (int d : {CurveMap::out_dart(visit), CurveMap::in_dart(visit)}) {
      if (CurveMap::is_out(d) && CurveMap::is_out(m.sigma_inv[d])) oo = d;
    }
  }
  require(oo >= 0, "crossing_d_tuple: no out-out corner");
  std::array<int, 4> tuple{};
  int d = oo;
  for (int k = 0; k < 4; ++k) {
    tuple[k] = labels.d_of_face[m.faces.face_of[d]];
    d = m.sigma[d];
  }
  return tuple;
}

// Empirical Figure-1b table: (a,b) -> the adjacent-label tuple. Throws
// InconsistentTable if two crossings of equal type disagree.
inline std::map<std::pair<int, int>, std::array<int, 4>> figure1b_table(
    const std::vector<CurveMap>& corpus) {
  std::map<std::pair<int, int>, std::array<int, 4>> table;
  for (const CurveMap& m : corpus) {
    RegionLabels labels = region_labels(m);
    for (int v = 0; v < m.n; ++v) {
      auto ab = exterior_indices(m, v);
      auto tuple = crossing_d_tuple(m, labels, v);
      auto [it, inserted] = table.emplace(ab, tuple);
      if (!inserted && it->second != tuple)
        throw InconsistentTable(
            "type (" + std::to_string(ab.first) + "," +
            std::to_string(ab.second) + ") has two distinct d-tuples");
    }
  }
  return table;
}

}  // namespace spherecurves
