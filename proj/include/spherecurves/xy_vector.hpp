#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "spherecurves/errors.hpp"
#include "spherecurves/rational.hpp"

namespace spherecurves {

// Finitely supported rational vector in the space spanned by the basis
// symbols X_{a,b} ((a,b) an ordered pair) and Y_d. Zero coefficients are
// never stored, so operator== is exact vector equality.
struct XYVector {
  std::map<std::pair<int, int>, Rational> x;
  std::map<int, Rational> y;

  void add_x(int a, int b, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = x.find(key);
    if (it == x.end()) {
      x.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) x.erase(it);
    }
  }

  void add_y(int d, const Rational& c) {
    if (c.is_zero()) return;
    auto it = y.find(d);
    if (it == y.end()) {
      y.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) y.erase(it);
    }
  }

  Rational x_coeff(int a, int b) const {
    auto it = x.find({a, b});
    return it == x.end() ? Rational(0) : it->second;
  }
  Rational y_coeff(int d) const {
    auto it = y.find(d);
    return it == y.end() ? Rational(0) : it->second;
  }

  XYVector& operator+=(const XYVector& o) {
    for (const auto& [k, c] : o.x) add_x(k.first, k.second, c);
    for (const auto& [d, c] : o.y) add_y(d, c);
    return *this;
  }
  XYVector& operator-=(const XYVector& o) {
    for (const auto& [k, c] : o.x) add_x(k.first, k.second, -c);
    for (const auto& [d, c] : o.y) add_y(d, -c);
    return *this;
  }
  friend XYVector operator+(XYVector a, const XYVector& b) { return a += b; }
  friend XYVector operator-(XYVector a, const XYVector& b) { return a -= b; }
  friend XYVector operator*(const Rational& s, const XYVector& v) {
    XYVector r;
    for (const auto& [k, c] : v.x) r.add_x(k.first, k.second, s * c);
    for (const auto& [d, c] : v.y) r.add_y(d, s * c);
    return r;
  }

  bool operator==(const XYVector& o) const { return x == o.x && y == o.y; }
  bool operator!=(const XYVector& o) const { return !(*this == o); }
  bool is_zero() const { return x.empty() && y.empty(); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    auto term = [&s](const Rational& c, const std::string& sym) {
      if (!s.empty()) s += " + ";
      if (c == Rational(1))
        s += sym;
      else
        s += c.str() + "*" + sym;
    };
    for (const auto& [k, c] : x)
      term(c, "X[" + std::to_string(k.first) + "," +
                  std::to_string(k.second) + "]");
    for (const auto& [d, c] : y) term(c, "Y[" + std::to_string(d) + "]");
    return s;
  }
};

inline XYVector unit_x(int a, int b) {
  XYVector v;
  v.add_x(a, b, 1);
  return v;
}
inline XYVector unit_y(int d) {
  XYVector v;
  v.add_y(d, 1);
  return v;
}

// A linear functional on X ⊕ Y, given by its value on basis elements.
struct Functional {
  std::string name;
  std::function<Rational(int, int)> on_x;  // value on X_{a,b}
  std::function<Rational(int)> on_y;       // value on Y_d
};

inline Rational apply(const Functional& f, const XYVector& v) {
  Rational r;
  for (const auto& [k, c] : v.x) r += c * f.on_x(k.first, k.second);
  for (const auto& [d, c] : v.y) r += c * f.on_y(d);
  return r;
}

inline bool odd(int n) { return n % 2 != 0; }
inline bool even(int n) { return n % 2 == 0; }

// The six functionals cutting out the image of F. Unmentioned basis
// elements map to 0.
inline Functional psi(int i) {
  switch (i) {
    case 1:
      return {"psi1",
              [](int a, int b) { return Rational(odd(a + b) ? -1 : 0); },
              [](int d) { return Rational(odd(d) ? 1 : 0); }};
    case 2:
      return {"psi2",
              [](int a, int b) { return Rational(even(a + b) ? -1 : 0); },
              [](int d) { return Rational(even(d) ? 1 : 0); }};
    case 3:
      return {"psi3",
              [](int a, int b) { return Rational(odd(a + b) ? -(a + b) : 0); },
              [](int d) { return Rational(odd(d) ? d : 0); }};
    case 4:
      return {"psi4",
              [](int a, int b) { return Rational(even(a + b) ? -(a + b) : 0); },
              [](int d) { return Rational(even(d) ? d : 0); }};
    case 5:
      return {"psi5",
              [](int a, int b) {
                int s = a + b;
                if (!odd(s)) return Rational(0);
                long long den = static_cast<long long>(s) * (s * s - 4);
                require(den != 0, "psi5: zero denominator on odd a+b");
                return Rational(4 * (a - b + 1) - s * s, den);
              },
              [](int d) {
                if (!odd(d)) return Rational(0);
                return Rational(1, d);
              }};
    case 6:
      return {"psi6",
              [](int a, int b) {
                int s = a + b;
                if (s == 0) return Rational(b - a - 1);
                if (s == 2 || s == -2) return Rational(a - b, 2);
                return Rational(0);
              },
              [](int d) { return Rational(d == 0 ? 1 : 0); }};
    default:
      throw AssertionFailure("psi index out of range");
  }
}

// The six J-invariant functionals.
inline Functional eta(int i) {
  switch (i) {
    case 1:
      return {"eta1",
              [](int a, int b) {
                int s = a + b;
                return Rational(odd(s) ? s * s : 0);
              },
              [](int d) { return Rational(odd(d) ? -d * d : 0); }};
    case 2:
      return {"eta2",
              [](int a, int b) {
                int s = a + b;
                return Rational(even(s) ? s * s : 0);
              },
              [](int d) { return Rational(even(d) ? -d * d : 0); }};
    case 3:
      return {"eta3",
              [](int a, int b) { return Rational(even(a) && odd(b) ? 1 : 0); },
              [](int) { return Rational(0); }};
    case 4:
      return {"eta4",
              [](int a, int b) { return Rational(even(a) && even(b) ? 1 : 0); },
              [](int) { return Rational(0); }};
    case 5:
      return {"eta5",
              [](int a, int b) { return Rational(odd(a) && even(b) ? 1 : 0); },
              [](int) { return Rational(0); }};
    case 6:
      return {"eta6",
              [](int a, int b) { return Rational(odd(a) && odd(b) ? 1 : 0); },
              [](int) { return Rational(0); }};
    default:
      throw AssertionFailure("eta index out of range");
  }
}

inline Functional phi_plus() {
  return {"phi+",
          [](int a, int b) { return Rational(4 + (a + b) * (a + b)); },
          [](int d) { return Rational(-d * d); }};
}

inline Functional phi_minus() {
  return {"phi-",
          [](int a, int b) { return Rational((a + b) * (a + b)); },
          [](int d) { return Rational(-d * d); }};
}

// The strangeness functional: vanishes on every Z_{a,b}, d^2 on Y_d.
inline Functional phi_st() {
  return {"phi",
          [](int a, int b) { return Rational(4 * (a - b) - (a + b) * (a + b)); },
          [](int d) { return Rational(d * d); }};
}

// H-form functional: Y_d -> h(d), X_{a,b} -> -h(a+b).
inline Functional h_functional(std::function<Rational(int)> h,
                               const std::string& name = "H") {
  auto hy = h;
  return {name,
          [h](int a, int b) { return -h(a + b); },
          [hy](int d) { return hy(d); }};
}

// Φ_{a,b} = (a-b)/2 Y_{a+b-2} + (b-a-1) Y_{a+b} + (a-b)/2 Y_{a+b+2}.
inline XYVector phi_vector(int a, int b) {
  XYVector v;
  Rational half(a - b, 2);
  v.add_y(a + b - 2, half);
  v.add_y(a + b, Rational(b - a - 1));
  v.add_y(a + b + 2, half);
  return v;
}

// Z_{a,b} = X_{a,b} - Φ_{a,b}, expressed in the X/Y basis.
inline XYVector z_vector(int a, int b) {
  XYVector v = unit_x(a, b);
  v -= phi_vector(a, b);
  return v;
}

// Coordinates of v in the {Z_{a,b}, Y_d} basis, stored as an XYVector whose
// x part holds the Z coefficients. Since X_{a,b} = Z_{a,b} + Φ_{a,b}, the Y
// coordinates pick up Σ x_{a,b} Φ_{a,b}.
inline XYVector to_z(const XYVector& v) {
  XYVector r = v;
  for (const auto& [k, c] : v.x) r += c * phi_vector(k.first, k.second);
  return r;
}

inline XYVector from_z(const XYVector& v) {
  XYVector r = v;
  for (const auto& [k, c] : v.x) r -= c * phi_vector(k.first, k.second);
  return r;
}

// P_Z: X_{a,b} -> Φ_{a,b}, Y_d -> Y_d. The image has empty X part.
inline XYVector project_pz(const XYVector& v) {
  XYVector r;
  r.y = v.y;
  for (const auto& [k, c] : v.x) r += c * phi_vector(k.first, k.second);
  return r;
}

// Orientation reversal of the ambient sphere: X_{a,b} -> X_{-b,-a},
// Y_d -> Y_{-d}.
inline XYVector mirror_xy(const XYVector& v) {
  XYVector r;
  for (const auto& [k, c] : v.x) r.add_x(-k.second, -k.first, c);
  for (const auto& [d, c] : v.y) r.add_y(-d, c);
  return r;
}

}  // namespace spherecurves
