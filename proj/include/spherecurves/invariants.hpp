#pragma once

#include <array>
#include <functional>
#include <utility>

#include "spherecurves/curve_map.hpp"
#include "spherecurves/indices.hpp"
#include "spherecurves/xy_vector.hpp"

namespace spherecurves {

// f^X(c) = sum over double points of X_{a(v),b(v)}.
inline XYVector f_x(const CurveMap& m) {
  XYVector v;
  for (int w = 0; w < m.n; ++w) {
    auto [a, b] = exterior_indices(m, w);
    v.add_x(a, b, 1);
  }
  return v;
}

// f^Y(c) = sum over complementary regions of Y_{d(R)}.
inline XYVector f_y(const CurveMap& m) {
  XYVector v;
  RegionLabels labels = region_labels(m);
  for (int d : labels.d_of_face) v.add_y(d, 1);
  return v;
}

// The universal order-1 invariant F = f^X + f^Y.
inline XYVector F_of(const CurveMap& m) { return f_x(m) + f_y(m); }

enum class ArnoldInvariant { JPlus, JMinus, St };

// Arnold's invariants up to the free constants on the two regular homotopy
// classes: (phi/4 or phi/24, plus k1 psi1 + k2 psi2) applied to F.
inline Rational arnold(const CurveMap& m, ArnoldInvariant which,
                       const Rational& k1 = 0, const Rational& k2 = 0) {
  XYVector f = F_of(m);
  Rational base;
  switch (which) {
    case ArnoldInvariant::JPlus:
      base = apply(phi_plus(), f) / 4;
      break;
    case ArnoldInvariant::JMinus:
      base = apply(phi_minus(), f) / 4;
      break;
    case ArnoldInvariant::St:
      base = apply(phi_st(), f) / 24;
      break;
  }
  return base + k1 * apply(psi(1), f) + k2 * apply(psi(2), f);
}

// Both sides of the smoothing identity H_h(F(c)) = sum_E chi(E) h(d(E)).
inline std::pair<Rational, Rational> h_form(
    const CurveMap& m, const std::function<Rational(int)>& h) {
  Rational lhs = apply(h_functional(h), F_of(m));
  Smoothing s = smooth(m);
  Rational rhs;
  for (int r = 0; r < s.n_regions; ++r)
    rhs += Rational(s.region_chi[r]) * h(s.region_d[r]);
  return {lhs, rhs};
}

struct InvariantReport {
  int crossings = 0;
  HomotopyClass cls = HomotopyClass::OD;
  XYVector F;
  std::array<Rational, 6> psi_values;
  std::array<Rational, 6> eta_values;
  Rational jplus, jminus, st;
};

// Full evaluation with the structural checks that hold for every stable
// spherical curve; their failure signals an implementation bug, never bad
// input.
inline InvariantReport universal_report(const CurveMap& m,
                                        const Rational& k1 = 0,
                                        const Rational& k2 = 0) {
  InvariantReport r;
  r.crossings = m.n;
  r.cls = regular_homotopy_class(m);
  r.F = F_of(m);
  for (int i = 1; i <= 6; ++i) {
    r.psi_values[i - 1] = apply(psi(i), r.F);
    r.eta_values[i - 1] = apply(eta(i), r.F);
  }
  for (int i = 3; i <= 6; ++i)
    require(r.psi_values[i - 1].is_zero(),
            "universal_report: psi" + std::to_string(i) + " nonzero");
  Rational p1 = r.psi_values[0], p2 = r.psi_values[1];
  if (r.cls == HomotopyClass::OD)
    require(p1 == Rational(2) && p2.is_zero(),
            "universal_report: (psi1,psi2) != (2,0) on od");
  else
    require(p1.is_zero() && p2 == Rational(2),
            "universal_report: (psi1,psi2) != (0,2) on ev");
  r.jplus = arnold(m, ArnoldInvariant::JPlus, k1, k2);
  r.jminus = arnold(m, ArnoldInvariant::JMinus, k1, k2);
  r.st = arnold(m, ArnoldInvariant::St, k1, k2);
  return r;
}

}  // namespace spherecurves
