#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "spherecurves/errors.hpp"
#include "spherecurves/gauss_code.hpp"

namespace spherecurves {

// Faces of the map: orbits of the corner permutation d -> alpha(sigma^-1(d)).
// Dart d stands for the corner (angular sector) between rays sigma^-1(d) and
// d at its crossing. Face ids are assigned by increasing minimum dart.
struct FaceTable {
  std::vector<std::vector<int>> faces;  // face id -> corner darts in walk order
  std::vector<int> face_of;             // dart -> face id

  int count() const { return static_cast<int>(faces.size()); }
};

// Oriented combinatorial map of a stable spherical curve.
//
// Darts are edge ends. Visit j of the traversal owns out-dart 2j (start of
// edge j, which runs from visit j to visit j+1) and in-dart 2j+1 (end of
// edge j-1). sigma is the counterclockwise cyclic order of the four darts at
// each crossing, alpha the edge-end involution. At a crossing of sign +1 the
// counterclockwise order is (first-visit out, second-visit out, first-visit
// in, second-visit in); at sign -1 it is (first out, second in, first in,
// second out). The traversal direction is part of the data: reversing it is
// a different curve.
//
// The embedded circle (n = 0) is a special value: no darts, two synthetic
// faces, face 0 on the circle's left and face 1 on its right.
struct CurveMap {
  int n = 0;                                  // crossings
  std::vector<int> word;                      // visit -> crossing id (0-based)
  std::vector<std::array<int, 2>> visits;     // crossing -> its two positions
  std::vector<int> sigma, sigma_inv, alpha;   // permutations on darts
  std::vector<int> sign;                      // crossing -> +1/-1
  FaceTable faces;

  int darts() const { return 4 * n; }
  int edges() const { return 2 * n; }

  static int out_dart(int visit) { return 2 * visit; }
  static int in_dart(int visit) { return 2 * visit + 1; }
  static int visit_of(int dart) { return dart / 2; }
  static bool is_out(int dart) { return (dart & 1) == 0; }

  // Edge j starts at visit j (out-dart 2j) and ends at visit j+1.
  int edge_of_dart(int dart) const {
    int v = visit_of(dart);
    return is_out(dart) ? v : (v - 1 + edges()) % edges();
  }

  int edge_left_face(int edge) const {
    return n == 0 ? 0 : faces.face_of[alpha[out_dart(edge)]];
  }
  int edge_right_face(int edge) const {
    return n == 0 ? 1 : faces.face_of[out_dart(edge)];
  }

  int face_count() const { return n == 0 ? 2 : faces.count(); }
};

namespace detail {

inline FaceTable trace_faces(const std::vector<int>& sigma_inv,
                             const std::vector<int>& alpha) {
  int nd = static_cast<int>(alpha.size());
  FaceTable table;
  table.face_of.assign(nd, -1);
  for (int d = 0; d < nd; ++d) {
    if (table.face_of[d] >= 0) continue;
    int id = table.count();
    std::vector<int> orbit;
    int cur = d;
    do {
      table.face_of[cur] = id;
      orbit.push_back(cur);
      cur = alpha[sigma_inv[cur]];
    } while (cur != d);
    table.faces.push_back(std::move(orbit));
  }
  return table;
}

// Recover the crossing sign from the rotation cycle.
inline int read_sign(const CurveMap& m, int v) {
  int o1 = CurveMap::out_dart(m.visits[v][0]);
  int o2 = CurveMap::out_dart(m.visits[v][1]);
  int i2 = CurveMap::in_dart(m.visits[v][1]);
  if (m.sigma[o1] == o2) return 1;
  if (m.sigma[o1] == i2) return -1;
  throw AssertionFailure("rotation cycle at crossing is not transverse");
}

inline void finalize(CurveMap& m) {
  int nd = m.darts();
  m.sigma_inv.assign(nd, 0);
  for (int d = 0; d < nd; ++d) m.sigma_inv[m.sigma[d]] = d;
  m.faces = trace_faces(m.sigma_inv, m.alpha);
  m.sign.assign(m.n, 0);
  for (int v = 0; v < m.n; ++v) m.sign[v] = read_sign(m, v);
}

}  // namespace detail

// Builds the map without the sphericity gate (for genus probing).
inline CurveMap build_map_unchecked(const SignedGaussCode& code) {
  validate_code(code);
  CurveMap m;
  m.n = code.crossings();
  if (m.n == 0) return m;

  // Relabel crossings 0..n-1 by first occurrence.
  std::map<int, int> id_of;
  std::vector<int> declared_sign;
  m.word.reserve(code.word.size());
  for (int label : code.word) {
    auto it = id_of.find(label);
    if (it == id_of.end()) {
      it = id_of.emplace(label, static_cast<int>(id_of.size())).first;
      declared_sign.push_back(code.signs.at(label));
    }
    m.word.push_back(it->second);
  }
  m.visits.assign(m.n, {-1, -1});
  for (int j = 0; j < 2 * m.n; ++j) {
    auto& vs = m.visits[m.word[j]];
    (vs[0] < 0 ? vs[0] : vs[1]) = j;
  }

  int nd = m.darts();
  m.alpha.assign(nd, 0);
  for (int j = 0; j < m.edges(); ++j) {
    int a = CurveMap::out_dart(j);
    int b = CurveMap::in_dart((j + 1) % m.edges());
    m.alpha[a] = b;
    m.alpha[b] = a;
  }

  m.sigma.assign(nd, 0);
  for (int v = 0; v < m.n; ++v) {
    int o1 = CurveMap::out_dart(m.visits[v][0]);
    int i1 = CurveMap::in_dart(m.visits[v][0]);
    int o2 = CurveMap::out_dart(m.visits[v][1]);
    int i2 = CurveMap::in_dart(m.visits[v][1]);
    std::array<int, 4> cycle = declared_sign[v] > 0
                                   ? std::array<int, 4>{o1, o2, i1, i2}
                                   : std::array<int, 4>{o1, i2, i1, o2};
    for (int k = 0; k < 4; ++k) m.sigma[cycle[k]] = cycle[(k + 1) % 4];
  }

  detail::finalize(m);
  return m;
}

// Genus of the closed oriented surface the map embeds in: 0 iff spherical.
inline int genus(const CurveMap& m) {
  if (m.n == 0) return 0;
  return (2 - m.n + m.edges() - m.face_count()) / 2;
}

inline CurveMap build_map(const SignedGaussCode& code) {
  CurveMap m = build_map_unchecked(code);
  if (m.face_count() != m.n + 2)
    throw NotRealizable("face count " + std::to_string(m.face_count()) +
                        " != n+2 = " + std::to_string(m.n + 2) +
                        " (genus " + std::to_string(genus(m)) + ")");
  return m;
}

enum class HomotopyClass { EV, OD };

inline const char* to_string(HomotopyClass c) {
  return c == HomotopyClass::EV ? "ev" : "od";
}

// EV iff the number of double points is odd.
inline HomotopyClass regular_homotopy_class(const CurveMap& m) {
  return (m.n % 2 != 0) ? HomotopyClass::EV : HomotopyClass::OD;
}

// The signed code spelled by the stored traversal, labels 1..n.
inline SignedGaussCode to_code(const CurveMap& m) {
  SignedGaussCode code;
  for (int id : m.word) code.word.push_back(id + 1);
  for (int v = 0; v < m.n; ++v) code.signs[v + 1] = m.sign[v];
  return code;
}

namespace detail {

// The signed code read from the traversal starting at visit r. Crossings
// whose two visits straddle the new start swap first/second visit and so
// flip their sign.
inline std::vector<std::pair<int, int>> rotated_tokens(const CurveMap& m,
                                                       int r) {
  int len = 2 * m.n;
  std::vector<int> relabel(m.n, -1);
  int next = 0;
  std::vector<std::pair<int, int>> tokens;
  tokens.reserve(len);
  for (int k = 0; k < len; ++k) {
    int v = m.word[(k + r) % len];
    if (relabel[v] < 0) relabel[v] = next++;
    int t1 = m.visits[v][0], t2 = m.visits[v][1];
    bool flipped = (t1 < r && r <= t2);
    tokens.emplace_back(relabel[v], flipped ? -m.sign[v] : m.sign[v]);
  }
  return tokens;
}

}  // namespace detail

// Lexicographically minimal signed code over all traversal starting points.
// Two maps related by an orientation-preserving sphere homeomorphism give
// equal forms; mirror images generally do not.
inline SignedGaussCode canonical_form(const CurveMap& m) {
  SignedGaussCode code;
  if (m.n == 0) return code;
  std::vector<std::pair<int, int>> best;
  for (int r = 0; r < 2 * m.n; ++r) {
    auto tokens = detail::rotated_tokens(m, r);
    if (best.empty() || tokens < best) best = std::move(tokens);
  }
  for (auto& [label, sign] : best) {
    code.word.push_back(label + 1);
    code.signs[label + 1] = sign;
  }
  return code;
}

inline std::string canonical_key(const CurveMap& m) {
  return to_text(canonical_form(m));
}

// Orientation reversal of the sphere: rotation cycles reverse, traversal and
// edge pairing stay. Every crossing sign flips.
inline CurveMap mirror(const CurveMap& m) {
  CurveMap r = m;
  if (m.n == 0) return r;
  r.sigma = m.sigma_inv;
  detail::finalize(r);
  return r;
}

}  // namespace spherecurves
