#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spherecurves/symbols.hpp"

using namespace spherecurves;

TEST_CASE("f1 on the J families") {
  XYVector jp = f1_of_symbol(Symbol::jplus(0, 0));
  XYVector want = Rational(2) * unit_x(0, 0) + Rational(2) * unit_y(0);
  CHECK(jp == want);

  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      CHECK(f1_of_symbol(Symbol::jb(a + 1, b)) ==
            f1_of_symbol(Symbol::ja(a, b - 1)));
}

TEST_CASE("f1 of the S basis elements in Z coordinates") {
  for (int a = -5; a <= 5; ++a) {
    XYVector v =
        to_z(f1_of_symbol(Symbol::s({a, 0, 0}, {true, false, false})));
    XYVector want;
    want.add_x(0, a + 1, -2);
    want.add_x(-1, a, -1);
    want.add_x(1, a, 1);
    want.add_x(0, a - 1, 2);
    want.add_y(a - 3, Rational(-(a - 3), 2));
    want.add_y(a - 1, Rational(3 * (a - 1), 2));
    want.add_y(a + 1, Rational(-3 * (a + 1), 2));
    want.add_y(a + 3, Rational(a + 3, 2));
    CHECK(v == want);
  }
}

TEST_CASE("symbol parsing and printing") {
  for (const std::string text :
       {"J+[-1,2]", "JA[0,0]", "JB[2,3]", "S[0,0,0]", "S[0,0,3^]",
        "S[-2^,0^,1^]"}) {
    Symbol s = parse_symbol(text);
    CHECK(parse_symbol(s.str()) == s);
  }
  CHECK(parse_symbol("J+[2,-1]") == parse_symbol("J+[-1,2]"));
  CHECK(parse_symbol("S[1^,2,3]") == parse_symbol("S[3,1^,2]"));
  CHECK_THROWS_AS(parse_symbol("JQ[1,2]"), MalformedCode);
  CHECK_THROWS_AS(parse_symbol("S[1,2]"), MalformedCode);
  CHECK_THROWS_AS(parse_symbol("J+[1^,2]"), MalformedCode);
}

TEST_CASE("symbol parity classes") {
  CHECK(symbol_class(Symbol::jplus(1, 1)) == HomotopyClass::EV);
  CHECK(symbol_class(Symbol::jplus(0, 1)) == HomotopyClass::OD);
  CHECK(symbol_class(Symbol::ja(0, 0)) == HomotopyClass::OD);
  CHECK(symbol_class(Symbol::ja(0, 1)) == HomotopyClass::EV);
  CHECK(symbol_class(Symbol::s({0, 0, 0}, {false, false, false})) ==
        HomotopyClass::EV);
  CHECK(symbol_class(Symbol::s({0, 0, 0}, {true, false, false})) ==
        HomotopyClass::OD);
  CHECK(symbol_class(Symbol::s({1, 0, 0}, {true, true, false})) ==
        HomotopyClass::EV);
  CHECK(symbol_class(Symbol::s({1, 0, 0}, {true, true, true})) ==
        HomotopyClass::OD);
}

TEST_CASE("mirror symmetry of f1") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> idx(-5, 5);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 400; ++trial) {
    Symbol s;
    switch (trial % 4) {
      case 0:
        s = Symbol::jplus(idx(rng), idx(rng));
        break;
      case 1:
        s = Symbol::ja(idx(rng), idx(rng));
        break;
      case 2:
        s = Symbol::jb(idx(rng), idx(rng));
        break;
      default:
        s = Symbol::s({idx(rng), idx(rng), idx(rng)},
                      {bit(rng) == 1, bit(rng) == 1, bit(rng) == 1});
    }
    CHECK(f1_of_symbol(mirror_symbol(s)) == mirror_xy(f1_of_symbol(s)));
    CHECK(mirror_symbol(mirror_symbol(s)) == s);
  }
}

TEST_CASE("every psi vanishes on every f1") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> idx(-6, 6);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    Symbol s = trial % 2 == 0
                   ? Symbol::jplus(idx(rng), idx(rng))
                   : Symbol::s({idx(rng), idx(rng), idx(rng)},
                               {bit(rng) == 1, bit(rng) == 1, bit(rng) == 1});
    XYVector v = f1_of_symbol(s);
    for (int i = 1; i <= 6; ++i) CHECK(apply(psi(i), v).is_zero());
  }
}

TEST_CASE("symbol class matches the parity of the f1 Y-support") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> idx(-6, 6);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    Symbol s = trial % 3 == 0
                   ? Symbol::ja(idx(rng), idx(rng))
                   : Symbol::s({idx(rng), idx(rng), idx(rng)},
                               {bit(rng) == 1, bit(rng) == 1, bit(rng) == 1});
    XYVector v = f1_of_symbol(s);
    REQUIRE(!v.y.empty());
    // EV symbols resolve to curves with odd crossing number: even d support.
    bool want_even = symbol_class(s) == HomotopyClass::EV;
    for (const auto& [d, c] : v.y) CHECK(even(d) == want_even);
  }
}

TEST_CASE("reduction to the basis") {
  BasisCoords jb = reduce_to_basis(Symbol::jb(2, 3));
  REQUIRE(jb.size() == 1);
  CHECK(jb.begin()->first == Symbol::ja(1, 2));
  CHECK(jb.begin()->second == Rational(1));

  // Basis elements reduce to themselves.
  for (const Symbol& s : {Symbol::jplus(-2, 5), Symbol::ja(3, 3),
                          Symbol::s({4, 0, 0}, {true, false, false})}) {
    BasisCoords c = reduce_to_basis(s);
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->first == s);
    CHECK(c.begin()->second == Rational(1));
  }

  // The one- and two-hat symbols with equal index sum share their S part.
  BasisCoords one_hat = reduce_to_basis(parse_symbol("S[2^,1,-1]"));
  BasisCoords two_hat = reduce_to_basis(parse_symbol("S[2^,1^,-1]"));
  Symbol s_basis = Symbol::s({2, 0, 0}, {true, false, false});
  REQUIRE(one_hat.count(s_basis) == 1);
  REQUIRE(two_hat.count(s_basis) == 1);
  CHECK(one_hat.at(s_basis) == Rational(1));
  CHECK(two_hat.at(s_basis) == Rational(1));
}

TEST_CASE("relation sweep is clean") {
  RelationReport rep = verify_relations(3);
  CHECK(rep.ok());
  CHECK(rep.checked > 1000);
  CHECK_THROWS_AS(verify_relations(0), AssertionFailure);
}

TEST_CASE("reduction respects f1 exactly") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> idx(-6, 6);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    Symbol s = Symbol::s({idx(rng), idx(rng), idx(rng)},
                         {bit(rng) == 1, bit(rng) == 1, bit(rng) == 1});
    BasisCoords coords = reduce_to_basis(s);
    XYVector sum;
    for (const auto& [key, coef] : coords) sum += coef * f1_of_symbol(key);
    CHECK(sum == f1_of_symbol(s));
  }
}
