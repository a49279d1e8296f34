#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spherecurves/gauss_code.hpp"

using namespace spherecurves;

TEST_CASE("parses the embedded circle") {
  SignedGaussCode code = parse_gauss("gc:\n");
  CHECK(code.word.empty());
  CHECK(code.crossings() == 0);
}

TEST_CASE("parses a curl") {
  SignedGaussCode code = parse_gauss("# a curl\ngc: 1+ 1+\n");
  CHECK(code.word == std::vector<int>{1, 1});
  CHECK(code.signs.at(1) == 1);
}

TEST_CASE("rejects odd occurrences") {
  CHECK_THROWS_AS(parse_gauss("gc: 1+ 2- 1+"), MalformedCode);
}

TEST_CASE("rejects sign mismatch between occurrences") {
  CHECK_THROWS_AS(parse_gauss("gc: 1+ 2- 1- 2-"), MalformedCode);
}

TEST_CASE("rejects bad tokens with position info") {
  try {
    parse_gauss("gc: 1+ x3\n");
    FAIL("expected MalformedCode");
  } catch (const MalformedCode& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 8);
  }
  CHECK_THROWS_AS(parse_gauss("gc: 1\n"), MalformedCode);
  CHECK_THROWS_AS(parse_gauss("gc: 0+ 0+\n"), MalformedCode);
  CHECK_THROWS_AS(parse_gauss("hello\n"), MalformedCode);
  CHECK_THROWS_AS(parse_gauss(""), MalformedCode);
  CHECK_THROWS_AS(parse_gauss("gc: 1+ 1+\ngc: 2+ 2+\n"), MalformedCode);
}

TEST_CASE("text round trip") {
  std::string text = "gc: 1+ 2- 1+ 2-";
  CHECK(to_text(parse_gauss(text)) == text);
}

TEST_CASE("fuzzed inputs never crash") {
  std::mt19937 rng(7);
  const std::string alphabet = "gc: 123+-\n#x";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s += alphabet[pick(rng)];
    try {
      SignedGaussCode code = parse_gauss(s);
      validate_code(code);  // success must yield a well-formed code
    } catch (const MalformedCode&) {
    }
  }
}
