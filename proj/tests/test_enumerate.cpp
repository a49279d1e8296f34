#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "spherecurves/enumerate.hpp"
#include "spherecurves/invariants.hpp"

using namespace spherecurves;

namespace {

long classes_with(const Corpus& corpus, int n) {
  long count = 0;
  for (const auto& e : corpus.entries)
    if (e.map.n == n) ++count;
  return count;
}

}  // namespace

TEST_CASE("smallest corpora") {
  Corpus c0 = enumerate_curves(0, true);
  CHECK(c0.entries.size() == 1);
  CHECK(c0.entries[0].map.n == 0);

  Corpus c1 = enumerate_curves(1, true);
  CHECK(classes_with(c1, 1) == 1);
}

TEST_CASE("corpus counts are frozen regression constants") {
  // Derived by this enumerator, then frozen.
  Corpus c = enumerate_curves(4, true);
  CHECK(classes_with(c, 2) == 3);
  CHECK(classes_with(c, 3) == 9);
  CHECK(classes_with(c, 4) == 37);
}

TEST_CASE("every enumerated map is spherical and passes the report") {
  Corpus c = enumerate_curves(4, true);
  for (const auto& e : c.entries) {
    CHECK(e.map.face_count() == e.map.n + 2);
    CHECK(genus(e.map) == 0);
    CHECK_NOTHROW(universal_report(e.map));
  }
}

TEST_CASE("the curl chain appears in the corpus") {
  Corpus c = enumerate_curves(4, true);
  std::set<std::string> keys;
  for (const auto& e : c.entries) keys.insert(to_text(e.code));
  for (int k = 1; k <= 4; ++k) {
    SignedGaussCode code;
    for (int v = 1; v <= k; ++v) {
      code.word.push_back(v);
      code.word.push_back(v);
      code.signs[v] = 1;
    }
    CHECK(keys.count(canonical_key(build_map(code))) == 1);
  }
}

TEST_CASE("enumeration is deterministic") {
  Corpus a = enumerate_curves(3, true);
  Corpus b = enumerate_curves(3, true);
  REQUIRE(a.entries.size() == b.entries.size());
  for (size_t i = 0; i < a.entries.size(); ++i)
    CHECK(a.entries[i].code == b.entries[i].code);
}

TEST_CASE("dedup never increases the corpus") {
  Corpus all = enumerate_curves(3, false);
  Corpus classes = enumerate_curves(3, true);
  CHECK(all.entries.size() >= classes.entries.size());
  // Identical canonical key sets.
  std::set<std::string> from_all, from_classes;
  for (const auto& e : all.entries) from_all.insert(canonical_key(e.map));
  for (const auto& e : classes.entries)
    from_classes.insert(canonical_key(e.map));
  CHECK(from_all == from_classes);
}
