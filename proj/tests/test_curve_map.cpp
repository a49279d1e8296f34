#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spherecurves/curve_map.hpp"
#include "spherecurves/gauss_code.hpp"

using namespace spherecurves;

namespace {

SignedGaussCode curl_chain(int k, int sign = 1) {
  SignedGaussCode code;
  for (int v = 1; v <= k; ++v) {
    code.word.push_back(v);
    code.word.push_back(v);
    code.signs[v] = sign;
  }
  return code;
}

}  // namespace

TEST_CASE("embedded circle") {
  CurveMap m = build_map(SignedGaussCode{});
  CHECK(m.n == 0);
  CHECK(m.face_count() == 2);
  CHECK(genus(m) == 0);
  CHECK(regular_homotopy_class(m) == HomotopyClass::OD);
  CHECK(canonical_form(m).word.empty());
}

TEST_CASE("curl has three faces") {
  for (int sign : {1, -1}) {
    CurveMap m = build_map(curl_chain(1, sign));
    CHECK(m.face_count() == 3);
    CHECK(genus(m) == 0);
    CHECK(regular_homotopy_class(m) == HomotopyClass::EV);
  }
}

TEST_CASE("both curl signs give the same curve") {
  CurveMap plus = build_map(curl_chain(1, 1));
  CurveMap minus = build_map(curl_chain(1, -1));
  CHECK(canonical_key(plus) == canonical_key(minus));
}

TEST_CASE("1 2 1 2 is not spherical for any signs") {
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      SignedGaussCode code;
      code.word = {1, 2, 1, 2};
      code.signs = {{1, s1}, {2, s2}};
      CHECK_THROWS_AS(build_map(code), NotRealizable);
      CHECK(genus(build_map_unchecked(code)) == 1);
    }
  }
}

TEST_CASE("curl chains are spherical with the expected face count") {
  for (int k = 2; k <= 6; ++k) {
    CurveMap m = build_map(curl_chain(k));
    CHECK(m.face_count() == k + 2);
    CHECK(genus(m) == 0);
  }
}

TEST_CASE("canonical form is idempotent and relabeling invariant") {
  std::mt19937 rng(11);
  CurveMap base = build_map(curl_chain(3));
  SignedGaussCode canon = canonical_form(base);
  CHECK(canonical_form(build_map(canon)) == canon);

  // Rotating the traversal start (with the induced sign flips) leaves the
  // canonical form unchanged.
  for (int r = 0; r < 2 * base.n; ++r) {
    SignedGaussCode rotated;
    int len = 2 * base.n;
    std::map<int, int> relabel;
    std::vector<std::pair<int, int>> vis(base.n, {-1, -1});
    for (int j = 0; j < len; ++j) {
      int v = base.word[(j + r) % len];
      auto it = relabel.find(v);
      if (it == relabel.end())
        it = relabel.emplace(v, static_cast<int>(relabel.size()) + 1).first;
      rotated.word.push_back(it->second);
      auto& p = vis[v];
      (p.first < 0 ? p.first : p.second) = j;
    }
    for (int v = 0; v < base.n; ++v) {
      bool flip = base.visits[v][0] < r && r <= base.visits[v][1];
      rotated.signs[relabel.at(v)] = flip ? -base.sign[v] : base.sign[v];
    }
    CHECK(canonical_form(build_map(rotated)) == canon);
  }
  (void)rng;
}

TEST_CASE("round trip through to_code preserves the curve") {
  for (int k = 1; k <= 4; ++k) {
    CurveMap m = build_map(curl_chain(k));
    CurveMap again = build_map(to_code(m));
    CHECK(canonical_key(m) == canonical_key(again));
  }
}

TEST_CASE("round trip over every realizable small code") {
  // Words of length up to 6 with every sign assignment.
  std::vector<std::vector<int>> words = {
      {1, 1},         {1, 1, 2, 2},    {1, 2, 1, 2},    {1, 2, 2, 1},
      {1, 1, 2, 2, 3, 3}, {1, 2, 1, 3, 2, 3}, {1, 2, 3, 1, 2, 3},
      {1, 2, 2, 3, 3, 1}, {1, 2, 3, 3, 2, 1}, {1, 2, 1, 2, 3, 3}};
  for (const auto& word : words) {
    int n = static_cast<int>(word.size()) / 2;
    for (int bits = 0; bits < (1 << n); ++bits) {
      SignedGaussCode code;
      code.word = word;
      for (int v = 1; v <= n; ++v)
        code.signs[v] = (bits >> (v - 1)) & 1 ? -1 : 1;
      CurveMap m;
      try {
        m = build_map(code);
      } catch (const NotRealizable&) {
        continue;
      }
      CurveMap again = build_map(to_code(m));
      CHECK(canonical_key(m) == canonical_key(again));
      CHECK(canonical_form(build_map(canonical_form(m))) ==
            canonical_form(m));
    }
  }
}

TEST_CASE("label names do not matter") {
  CurveMap a = build_map(parse_gauss("gc: 7+ 7+ 3- 3-"));
  CurveMap b = build_map(parse_gauss("gc: 1+ 1+ 2- 2-"));
  CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("mirror flips every crossing sign") {
  CurveMap m = build_map(curl_chain(3));
  CurveMap mm = mirror(m);
  for (int v = 0; v < m.n; ++v) CHECK(mm.sign[v] == -m.sign[v]);
  CHECK(mm.face_count() == m.face_count());
  CHECK(canonical_key(mirror(mm)) == canonical_key(m));
}
