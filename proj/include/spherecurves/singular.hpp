#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "spherecurves/curve_map.hpp"
#include "spherecurves/errors.hpp"
#include "spherecurves/indices.hpp"
#include "spherecurves/invariants.hpp"
#include "spherecurves/symbols.hpp"

namespace spherecurves {

// One side of one edge, with the point on it where a collision happens.
// left_side true means the collision face is the edge's left face. For the
// embedded circle the whole curve is virtual edge 0.
struct EdgeSide {
  int edge = 0;
  bool left_side = true;
  Rational pos = Rational(1, 2);  // fraction along the edge, in (0,1)
};

// Generator of a singular curve from a stable one.
//  - Tangency: two edge sides bordering a common face collide through it.
//    first == second (up to pos) gives a self-tangency of one edge.
//  - Triple: the edge side `strand` is pushed across the face onto the
//    crossing at the corner [sigma^-1(corner_dart), corner_dart].
struct SiteDescriptor {
  enum class Kind { Tangency, Triple };
  Kind kind = Kind::Tangency;
  EdgeSide first, second;  // tangency slots
  int corner_dart = -1;    // triple corner
  EdgeSide strand;         // triple colliding side
};

enum class Resolution { Pos, Neg };

namespace detail {

// One new visit spliced into the traversal: crossing `label` is passed at
// `pos` along `edge`, travelling in direction `angle` (degrees, in the local
// chart of the site).
struct Insertion {
  int edge = 0;
  Rational pos;
  int label = 0;
  int angle = 0;
};

struct SpliceResult {
  CurveMap map;
  std::vector<int> visit_pos;  // old visit index -> new word position
  std::vector<std::pair<Insertion, int>> placed;  // insertion -> word position
};

// +1 iff the ordered frame (a1, a2) is positively oriented.
inline int frame_sign(int a1, int a2) {
  int d = ((a2 - a1) % 360 + 360) % 360;
  require(d != 0 && d != 180, "frame_sign: tangent directions parallel");
  return d < 180 ? 1 : -1;
}

// Splices the insertions into the base traversal and rebuilds the map. New
// crossing signs come from the visit order and the recorded directions; old
// signs are unchanged because old visits keep their relative order.
inline SpliceResult splice_and_build(const CurveMap& base,
                                     std::vector<Insertion> ins) {
  std::stable_sort(ins.begin(), ins.end(),
                   [](const Insertion& a, const Insertion& b) {
                     if (a.edge != b.edge) return a.edge < b.edge;
                     return a.pos < b.pos;
                   });
  for (size_t i = 1; i < ins.size(); ++i)
    require(ins[i - 1].edge != ins[i].edge || ins[i - 1].pos != ins[i].pos,
            "splice: coincident insertion points");

  struct Token {
    int label;
    int angle;   // meaningful for new crossings only
    bool fresh;
  };
  std::vector<Token> tokens;
  std::vector<int> visit_pos(std::max(1, 2 * base.n), -1);
  std::vector<std::pair<Insertion, int>> placed;
  size_t cursor = 0;
  int n_edges = std::max(1, base.edges());  // the circle is one virtual edge
  for (int j = 0; j < n_edges; ++j) {
    if (base.n > 0) {
      visit_pos[j] = static_cast<int>(tokens.size());
      tokens.push_back({base.word[j], 0, false});
    }
    while (cursor < ins.size() && ins[cursor].edge == j) {
      placed.emplace_back(ins[cursor], static_cast<int>(tokens.size()));
      tokens.push_back({ins[cursor].label, ins[cursor].angle, true});
      ++cursor;
    }
  }
  require(cursor == ins.size(), "splice: insertion on missing edge");

  // Assemble the signed code. Labels are shifted to 1-based.
  SignedGaussCode code;
  std::map<int, std::pair<int, int>> first_seen;  // label -> (pos, angle)
  for (size_t p = 0; p < tokens.size(); ++p) {
    const Token& t = tokens[p];
    code.word.push_back(t.label + 1);
    if (!t.fresh) {
      code.signs[t.label + 1] = base.sign[t.label];
      continue;
    }
    auto it = first_seen.find(t.label);
    if (it == first_seen.end()) {
      first_seen.emplace(t.label, std::make_pair(static_cast<int>(p), t.angle));
    } else {
      code.signs[t.label + 1] = frame_sign(it->second.second, t.angle);
    }
  }

  SpliceResult out;
  try {
    out.map = build_map(code);
  } catch (const NotRealizable& e) {
    throw AssertionFailure(std::string("surgery produced a non-spherical "
                                       "curve: ") +
                           e.what());
  }
  out.visit_pos = std::move(visit_pos);
  out.placed = std::move(placed);
  return out;
}

inline int face_of_side(const CurveMap& m, const EdgeSide& s) {
  return s.left_side ? m.edge_left_face(s.edge) : m.edge_right_face(s.edge);
}

// Local chart of a tangency: strand 1 along y=0 with the collision face
// above it, strand 2 along y=2 with the face below; strand 1 bumps north
// through strand 2, creating crossing r (first along strand 1) and s.
inline std::vector<Insertion> tangency_insertions(const SiteDescriptor& site,
                                                  int label_base) {
  bool east1 = site.first.left_side;    // face above => left side faces it
  bool east2 = !site.second.left_side;  // face below => right side faces it
  int r = label_base, s = label_base + 1;
  Rational delta(1, 1000);
  std::vector<Insertion> ins;
  ins.push_back({site.first.edge, site.first.pos - delta, r, east1 ? 45 : 135});
  ins.push_back({site.first.edge, site.first.pos + delta, s, east1 ? 315 : 225});
  int a2 = east2 ? 0 : 180;
  bool parallel = (east1 == east2);
  ins.push_back(
      {site.second.edge, site.second.pos - delta, parallel ? r : s, a2});
  ins.push_back(
      {site.second.edge, site.second.pos + delta, parallel ? s : r, a2});
  return ins;
}

// Local chart of a triple collision: the corner's rays sit at -30 and +30
// degrees, their straight-through continuations at 150 and 210; the pushed
// strand runs vertically through the chart. `near_side` keeps the small
// triangle in the original corner, the other choice carries it across.
inline Insertion end_insertion(const CurveMap& m, int ray, int label,
                               int travel_angle, const Rational& dist) {
  // A new crossing on the ray's edge at the given offset from the crossing.
  int edge = m.edge_of_dart(ray);
  Rational pos = CurveMap::is_out(ray) ? dist : Rational(1) - dist;
  return {edge, pos, label, travel_angle};
}

// Labels of the four crossings a triple surgery inserts: germ_a/germ_b flip
// across the two resolutions, arm_a/arm_b persist on the corner rays.
struct TripleLabels {
  int germ_a, germ_b, arm_a, arm_b;
  explicit TripleLabels(int base)
      : germ_a(base), germ_b(base + 1), arm_a(base + 2), arm_b(base + 3) {}
};

// Local chart of the collision: the corner's rays r1, r2 sit at -30 and +30
// degrees, their straight-through continuations at 150 and 210, the slot
// point p due east inside the corner's face. The pushed strand is a U whose
// tip carries the germ through the crossing, tangent vertical. The U's arms
// wrap across the corner rays once each (crossings arm_a on r1, arm_b on
// r2, present in both resolutions); the germ crosses the two strands at the
// corner rays (near side) or at their continuations (far side).
inline std::vector<Insertion> triple_insertions(const CurveMap& m,
                                                const SiteDescriptor& site,
                                                bool near_side,
                                                int label_base) {
  int r1 = m.sigma_inv[site.corner_dart];
  int r2 = site.corner_dart;
  TripleLabels labels(label_base);
  bool north = site.strand.left_side;  // germ runs at 90, else at 270
  Rational eps(1, 1000);               // germ scale
  Rational w(2, 1000);                 // arm scale
  std::vector<Insertion> ins;

  int dir1 = CurveMap::is_out(r1) ? 330 : 150;
  int dir2 = CurveMap::is_out(r2) ? 30 : 210;
  ins.push_back(end_insertion(m, r1, labels.arm_a, dir1, w));
  ins.push_back(end_insertion(m, r2, labels.arm_b, dir2, w));

  const Rational& p = site.strand.pos;
  int e3 = site.strand.edge;
  if (near_side) {
    // Germ crossings on the corner rays themselves, inside the arm ones.
    ins.push_back(end_insertion(m, r1, labels.germ_a, dir1, eps));
    ins.push_back(end_insertion(m, r2, labels.germ_b, dir2, eps));
    if (north) {
      // South arm (clockwise, 240 at r1), germ northbound, north arm (300).
      ins.push_back({e3, p - Rational(2) * eps, labels.arm_a, 240});
      ins.push_back({e3, p - eps, labels.germ_a, 90});
      ins.push_back({e3, p + eps, labels.germ_b, 90});
      ins.push_back({e3, p + Rational(2) * eps, labels.arm_b, 300});
    } else {
      ins.push_back({e3, p - Rational(2) * eps, labels.arm_b, 120});
      ins.push_back({e3, p - eps, labels.germ_b, 270});
      ins.push_back({e3, p + eps, labels.germ_a, 270});
      ins.push_back({e3, p + Rational(2) * eps, labels.arm_a, 60});
    }
  } else {
    // Germ carried across the crossing: its crossings move to the
    // straight-through rays; the arms stay.
    int f1 = m.sigma[m.sigma[r1]];
    int f2 = m.sigma[m.sigma[r2]];
    int fdir1 = CurveMap::is_out(f1) ? 150 : 330;
    int fdir2 = CurveMap::is_out(f2) ? 210 : 30;
    ins.push_back(end_insertion(m, f1, labels.germ_a, fdir1, eps));
    ins.push_back(end_insertion(m, f2, labels.germ_b, fdir2, eps));
    if (north) {
      // Northbound germ at x < 0 meets strand 2's continuation first.
      ins.push_back({e3, p - Rational(2) * eps, labels.arm_a, 240});
      ins.push_back({e3, p - eps, labels.germ_b, 90});
      ins.push_back({e3, p + eps, labels.germ_a, 90});
      ins.push_back({e3, p + Rational(2) * eps, labels.arm_b, 300});
    } else {
      ins.push_back({e3, p - Rational(2) * eps, labels.arm_b, 120});
      ins.push_back({e3, p - eps, labels.germ_a, 270});
      ins.push_back({e3, p + eps, labels.germ_b, 270});
      ins.push_back({e3, p + Rational(2) * eps, labels.arm_a, 60});
    }
  }
  return ins;
}

inline int new_dart(const SpliceResult& sr, int old_dart) {
  int visit = CurveMap::visit_of(old_dart);
  int pos = sr.visit_pos[visit];
  require(pos >= 0, "surgery: lost track of a visit");
  return CurveMap::is_out(old_dart) ? CurveMap::out_dart(pos)
                                    : CurveMap::in_dart(pos);
}

// The label of the small triangle face cut off at the tracked corner.
inline int triangle_label(const SpliceResult& sr, int ray1, int ray2) {
  int c1 = new_dart(sr, ray1);
  int c2 = new_dart(sr, ray2);
  const CurveMap& m = sr.map;
  require(m.sigma_inv[c2] == c1, "surgery: corner not preserved");
  int face = m.faces.face_of[c2];
  require(m.faces.faces[face].size() == 3,
          "surgery: collapsed corner is not a triangle");
  return region_labels(m).d_of_face[face];
}

}  // namespace detail

// A curve with one designated generic singularity, materialized through its
// two resolutions.
struct SingularCurve {
  CurveMap base;
  SiteDescriptor site;
  Symbol symbol;
  CurveMap pos, neg;
};

namespace detail {

inline Rational side_coord(const CurveMap& m, const EdgeSide& s) {
  (void)m;
  return edge_point_coord(s.edge, s.pos);
}

inline Symbol classify_tangency(const CurveMap& m, const SiteDescriptor& site) {
  Rational c1 = side_coord(m, site.first);
  Rational c2 = side_coord(m, site.second);
  int i1 = arc_index(m, c1, c2);
  int i2 = arc_index(m, c2, c1);
  if (site.first.left_side != site.second.left_side)
    return Symbol::jplus(i1, i2);
  // Both-left collisions are J^B, both-right J^A; pinned against the
  // published F^(1) formulas over the corpus.
  return site.first.left_side ? Symbol::jb(i1, i2) : Symbol::ja(i1, i2);
}

// Classification data lives on the near resolution: the singular curve is
// the near map with the two germ crossings shrunk back into the singular
// point, so exterior-arc indices sum over everything except the host
// crossing and the germ pair (the arm crossings do count).
inline Symbol classify_triple(const CurveMap& base, const SiteDescriptor& site,
                              const SpliceResult& near) {
  int r1 = base.sigma_inv[site.corner_dart];
  int r2 = site.corner_dart;
  require(base.word[CurveMap::visit_of(r1)] ==
              base.word[CurveMap::visit_of(r2)],
          "triple site: corner rays at different crossings");

  // The two germ visits along the pushed strand sit at pos +- eps of the
  // slot point; they are adjacent in the spliced word.
  Rational eps(1, 1000);
  int q1 = -1, q2 = -1;
  for (const auto& [ins, pos] : near.placed) {
    if (ins.edge != site.strand.edge) continue;
    if (ins.pos == site.strand.pos - eps) q1 = pos;
    if (ins.pos == site.strand.pos + eps) q2 = pos;
  }
  require(q1 >= 0 && q2 == q1 + 1, "triple site: germ visits not adjacent");

  const CurveMap& nm = near.map;
  int host = nm.word[near.visit_pos[CurveMap::visit_of(r1)]];
  std::vector<int> excludes = {host, nm.word[q1], nm.word[q2]};

  struct Cut {
    Rational pos;
    int dir;
  };
  std::array<Cut, 3> cuts = {
      Cut{visit_coord(near.visit_pos[CurveMap::visit_of(r1)]),
          CurveMap::is_out(r1) ? 330 : 150},
      Cut{visit_coord(near.visit_pos[CurveMap::visit_of(r2)]),
          CurveMap::is_out(r2) ? 30 : 210},
      Cut{Rational(2 * q1 + 1), site.strand.left_side ? 90 : 270}};
  std::sort(cuts.begin(), cuts.end(),
            [](const Cut& a, const Cut& b) { return a.pos < b.pos; });

  std::array<int, 3> idx;
  std::array<bool, 3> hat;
  for (int k = 0; k < 3; ++k) {
    const Cut& from = cuts[k];
    const Cut& to = cuts[(k + 1) % 3];
    idx[k] = arc_index(nm, from.pos, to.pos, excludes);
    // Hat iff the following pass's direction points right of the arc's
    // initial direction.
    hat[k] = frame_sign(from.dir, to.dir) < 0;
  }
  return Symbol::s(idx, hat);
}

}  // namespace detail

// Builds the singular curve at `site`: classification plus both resolutions.
inline SingularCurve make_singular(const CurveMap& m,
                                   const SiteDescriptor& site) {
  SingularCurve sc;
  sc.base = m;
  sc.site = site;

  auto check_pos = [](const EdgeSide& s) {
    if (!(Rational(0) < s.pos) || !(s.pos < Rational(1)))
      throw InvalidSite("collision point outside the open edge");
  };

  if (site.kind == SiteDescriptor::Kind::Tangency) {
    check_pos(site.first);
    check_pos(site.second);
    if (m.n == 0) {
      if (site.first.edge != 0 || site.second.edge != 0)
        throw InvalidSite("the circle has a single virtual edge");
      if (site.first.left_side != site.second.left_side)
        throw InvalidSite("circle self-tangency must stay on one face");
    } else {
      if (site.first.edge < 0 || site.first.edge >= m.edges() ||
          site.second.edge < 0 || site.second.edge >= m.edges())
        throw InvalidSite("edge out of range");
      if (detail::face_of_side(m, site.first) !=
          detail::face_of_side(m, site.second))
        throw InvalidSite("tangency slots border different faces");
    }
    bool same_point = site.first.edge == site.second.edge &&
                      site.first.left_side == site.second.left_side &&
                      site.first.pos == site.second.pos;
    if (same_point) throw InvalidSite("tangency slots coincide");

    sc.symbol = detail::classify_tangency(m, site);
    sc.neg = m;
    sc.pos = detail::splice_and_build(
                 m, detail::tangency_insertions(site, m.n))
                 .map;
    return sc;
  }

  // Triple site.
  check_pos(site.strand);
  if (m.n == 0) throw InvalidSite("the circle has no crossings");
  if (site.corner_dart < 0 || site.corner_dart >= m.darts())
    throw InvalidSite("corner dart out of range");
  int corner_face = m.faces.face_of[site.corner_dart];
  if (detail::face_of_side(m, site.strand) != corner_face)
    throw InvalidSite("strand does not border the corner's face");

  auto near = detail::splice_and_build(
      m, detail::triple_insertions(m, site, true, m.n));
  auto far = detail::splice_and_build(
      m, detail::triple_insertions(m, site, false, m.n));
  sc.symbol = detail::classify_triple(m, site, near);

  int r1 = m.sigma_inv[site.corner_dart];
  int r2 = site.corner_dart;
  int d_near = detail::triangle_label(near, r1, r2);
  int d_far =
      detail::triangle_label(far, m.sigma[m.sigma[r1]], m.sigma[m.sigma[r2]]);

  // Triangle-label rule: d(pos triangle) - d(neg triangle) is -6, -2, +2, +6
  // for hat count 0, 1, 2, 3.
  static constexpr int kTriangleJump[4] = {-6, -2, 2, 6};
  int expected = kTriangleJump[sc.symbol.hat_count()];
  if (d_far - d_near == expected) {
    sc.pos = std::move(far.map);
    sc.neg = std::move(near.map);
  } else {
    require(d_near - d_far == expected,
            "triple site: triangle labels do not match the jump rule");
    sc.pos = std::move(near.map);
    sc.neg = std::move(far.map);
  }
  return sc;
}

inline const CurveMap& resolve(const SingularCurve& sc, Resolution r) {
  return r == Resolution::Pos ? sc.pos : sc.neg;
}

inline Symbol classify(const SingularCurve& sc) { return sc.symbol; }

// First discrete derivative at a one-singularity curve.
inline XYVector f1(const SingularCurve& sc) {
  return F_of(sc.pos) - F_of(sc.neg);
}

// Edges that a site's surgeries split, over both resolutions.
inline std::set<int> touched_edges(const CurveMap& m,
                                   const SiteDescriptor& site) {
  std::set<int> edges;
  if (site.kind == SiteDescriptor::Kind::Tangency) {
    edges.insert(site.first.edge);
    edges.insert(site.second.edge);
  } else {
    edges.insert(site.strand.edge);
    int r1 = m.sigma_inv[site.corner_dart];
    int r2 = site.corner_dart;
    for (int ray : {r1, r2, m.sigma[m.sigma[r1]], m.sigma[m.sigma[r2]]})
      edges.insert(m.edge_of_dart(ray));
  }
  return edges;
}

inline std::set<int> touched_faces(const CurveMap& m,
                                   const SiteDescriptor& site) {
  std::set<int> faces;
  if (site.kind == SiteDescriptor::Kind::Tangency) {
    faces.insert(detail::face_of_side(m, site.first));
  } else {
    // The arms and the carried germ reach into every corner at the host
    // crossing.
    int d = site.corner_dart;
    for (int k = 0; k < 4; ++k) {
      faces.insert(m.faces.face_of[d]);
      d = m.sigma[d];
    }
  }
  return faces;
}

inline std::optional<int> site_crossing(const CurveMap& m,
                                        const SiteDescriptor& site) {
  if (site.kind != SiteDescriptor::Kind::Triple) return std::nullopt;
  return m.word[CurveMap::visit_of(site.corner_dart)];
}

// Two sites have disjoint local supports: disjoint split edges, disjoint
// face footprints, distinct host crossings.
inline bool sites_disjoint(const CurveMap& m, const SiteDescriptor& a,
                           const SiteDescriptor& b) {
  if (m.n == 0) {
    // Both sites live on the virtual edge; they are independent iff they use
    // different faces.
    return a.first.left_side != b.first.left_side;
  }
  auto ea = touched_edges(m, a), eb = touched_edges(m, b);
  for (int e : ea)
    if (eb.count(e)) return false;
  auto fa = touched_faces(m, a), fb = touched_faces(m, b);
  for (int f : fa)
    if (fb.count(f)) return false;
  auto ca = site_crossing(m, a), cb = site_crossing(m, b);
  if (ca && cb && *ca == *cb) return false;
  return true;
}

// Second discrete derivative over two disjoint sites: the alternating sum of
// F over the four joint resolutions. Order-1-ness of F makes it vanish.
inline XYVector f2(const CurveMap& m, const SiteDescriptor& site_a,
                   const SiteDescriptor& site_b) {
  if (!sites_disjoint(m, site_a, site_b))
    throw InvalidSite("f2 requires sites with disjoint local supports");

  SiteDescriptor a = site_a, b = site_b;
  if (m.n == 0) {
    // Separate the collision points along the circle.
    a.first.pos = Rational(1, 10);
    a.second.pos = Rational(2, 10);
    b.first.pos = Rational(6, 10);
    b.second.pos = Rational(7, 10);
  }

  auto insertions = [&m](const SiteDescriptor& s, bool positive,
                         int label_base) -> std::vector<detail::Insertion> {
    if (s.kind == SiteDescriptor::Kind::Tangency) {
      if (!positive) return {};
      return detail::tangency_insertions(s, label_base);
    }
    return detail::triple_insertions(m, s, positive, label_base);
  };

  XYVector sum;
  for (int mask = 0; mask < 4; ++mask) {
    bool pa = (mask & 1) == 0;
    bool pb = (mask & 2) == 0;
    auto ins = insertions(a, pa, m.n);
    auto more = insertions(b, pb, m.n + 4);
    ins.insert(ins.end(), more.begin(), more.end());
    XYVector f = F_of(detail::splice_and_build(m, ins).map);
    int parity = (pa ? 0 : 1) + (pb ? 0 : 1);
    if (parity % 2 == 0)
      sum += f;
    else
      sum -= f;
  }
  return sum;
}

// Every tangency pair of edge sides on a common face (self-pairs included)
// and every triple (corner, bordering side) pair.
inline std::vector<SiteDescriptor> enumerate_sites(const CurveMap& m) {
  std::vector<SiteDescriptor> sites;
  if (m.n == 0) {
    for (bool left : {true, false}) {
      SiteDescriptor s;
      s.kind = SiteDescriptor::Kind::Tangency;
      s.first = {0, left, Rational(2, 5)};
      s.second = {0, left, Rational(3, 5)};
      sites.push_back(s);
    }
    return sites;
  }

  std::vector<std::vector<EdgeSide>> slots_of_face(m.face_count());
  for (int j = 0; j < m.edges(); ++j) {
    slots_of_face[m.edge_left_face(j)].push_back({j, true, Rational(2, 5)});
    slots_of_face[m.edge_right_face(j)].push_back({j, false, Rational(2, 5)});
  }

  for (int f = 0; f < m.face_count(); ++f) {
    const auto& slots = slots_of_face[f];
    for (size_t i = 0; i < slots.size(); ++i) {
      for (size_t k = i; k < slots.size(); ++k) {
        SiteDescriptor s;
        s.kind = SiteDescriptor::Kind::Tangency;
        s.first = slots[i];
        s.second = slots[k];
        s.second.pos = Rational(3, 5);
        sites.push_back(s);
      }
    }
  }

  for (int d = 0; d < m.darts(); ++d) {
    int f = m.faces.face_of[d];
    for (const EdgeSide& slot : slots_of_face[f]) {
      SiteDescriptor s;
      s.kind = SiteDescriptor::Kind::Triple;
      s.corner_dart = d;
      s.strand = slot;
      s.strand.pos = Rational(1, 2);
      sites.push_back(s);
    }
  }
  return sites;
}

}  // namespace spherecurves
