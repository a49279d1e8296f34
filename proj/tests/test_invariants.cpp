#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spherecurves/invariants.hpp"
#include "spherecurves/json_report.hpp"

using namespace spherecurves;

namespace {

CurveMap gamma(int k) {
  SignedGaussCode code;
  for (int v = 1; v <= k; ++v) {
    code.word.push_back(v);
    code.word.push_back(v);
    code.signs[v] = 1;
  }
  return build_map(code);
}

XYVector gamma_closed_form(int k) {
  XYVector want;
  want.add_x(0, k - 1, k);
  want.add_y(k - 3, k);
  want.add_y(k - 1, 1);
  want.add_y(k + 1, 1);
  return want;
}

}  // namespace

TEST_CASE("F on the curl chain family") {
  XYVector f0 = F_of(gamma(0));
  XYVector want0 = unit_y(-1) + unit_y(1);
  CHECK(f0 == want0);

  XYVector f1v = F_of(gamma(1));
  XYVector want1 = unit_x(0, 0) + unit_y(-2) + unit_y(0) + unit_y(2);
  CHECK(f1v == want1);

  CHECK(F_of(gamma(5)) == gamma_closed_form(5));
}

TEST_CASE("psi values on the two base curves") {
  XYVector f0 = F_of(gamma(0));
  XYVector f1v = F_of(gamma(1));
  for (int i = 1; i <= 6; ++i) {
    CHECK(apply(psi(i), f0) == Rational(i == 1 ? 2 : 0));
    CHECK(apply(psi(i), f1v) == Rational(i == 2 ? 2 : 0));
  }
  CHECK(apply(psi(5), unit_y(3)) == Rational(1, 3));
}

TEST_CASE("Z basis change") {
  CHECK(phi_vector(0, 0) == Rational(-1) * unit_y(0));

  XYVector expected_z = unit_x(0, 0) + unit_y(-2) + unit_y(2);
  CHECK(to_z(F_of(gamma(1))) == expected_z);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> idx(-8, 8);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    XYVector v;
    for (int t = 0; t < 4; ++t) {
      v.add_x(idx(rng), idx(rng), Rational(num(rng), den(rng)));
      v.add_y(idx(rng), Rational(num(rng), den(rng)));
    }
    CHECK(from_z(to_z(v)) == v);
    CHECK(to_z(from_z(v)) == v);
  }
}

TEST_CASE("P_Z projection") {
  CHECK(project_pz(unit_x(0, 0)) == Rational(-1) * unit_y(0));
  CHECK(project_pz(unit_y(7)) == unit_y(7));
  XYVector img = project_pz(F_of(gamma(1)));
  CHECK(img == unit_y(-2) + unit_y(2));
  CHECK(img.x.empty());
}

TEST_CASE("arnold invariant examples") {
  CHECK(arnold(gamma(1), ArnoldInvariant::St) == Rational(1, 3));
  CHECK(arnold(gamma(0), ArnoldInvariant::JMinus) == Rational(-1, 2));
  // Constants shift by the class indicators.
  CHECK(arnold(gamma(0), ArnoldInvariant::JMinus, Rational(1), Rational(5)) ==
        Rational(-1, 2) + Rational(2));
}

TEST_CASE("h-form identity on small curves") {
  auto one = [](int) { return Rational(1); };
  auto [lhs0, rhs0] = h_form(gamma(0), one);
  CHECK(lhs0 == Rational(2));
  CHECK(rhs0 == Rational(2));
  auto sq = [](int d) { return Rational(d * d); };
  auto [lhs1, rhs1] = h_form(gamma(1), sq);
  CHECK(lhs1 == rhs1);
}

TEST_CASE("universal report asserts the image equations") {
  InvariantReport r0 = universal_report(gamma(0));
  CHECK(r0.psi_values ==
        std::array<Rational, 6>{2, 0, 0, 0, 0, 0});
  InvariantReport r1 = universal_report(gamma(1));
  CHECK(r1.psi_values ==
        std::array<Rational, 6>{0, 2, 0, 0, 0, 0});
}

TEST_CASE("psi vanish on Z vectors in a small window") {
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int i = 1; i <= 6; ++i)
        CHECK(apply(psi(i), z_vector(a, b)).is_zero());
}

TEST_CASE("json report matches the published base values") {
  std::string j0 = emit_json(universal_report(gamma(0)));
  CHECK(j0.find("\"Y\":[[-1,\"1\"],[1,\"1\"]]") != std::string::npos);
  CHECK(j0.find("\"X\":[]") != std::string::npos);
  CHECK(j0.find("\"class\":\"od\"") != std::string::npos);

  std::string j1 = emit_json(universal_report(gamma(1)));
  CHECK(j1.find("\"X\":[[0,0,\"1\"]]") != std::string::npos);
  CHECK(j1.find("\"Y\":[[-2,\"1\"],[0,\"1\"],[2,\"1\"]]") !=
        std::string::npos);

  // Emission is canonical: parse and re-dump is byte identical.
  CHECK(ordered_json::parse(j1).dump() == j1);
}
