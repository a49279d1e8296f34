#pragma once

#include <set>
#include <string>
#include <vector>

#include "spherecurves/curve_map.hpp"
#include "spherecurves/gauss_code.hpp"
#include "spherecurves/invariants.hpp"
#include "spherecurves/singular.hpp"

namespace spherecurves {

struct CorpusEntry {
  SignedGaussCode code;  // canonical form
  CurveMap map;
};

struct Corpus {
  int n_max = 0;
  bool dedup = true;
  std::vector<CorpusEntry> entries;
};

namespace detail {

// All double-occurrence words of length 2n with first occurrences in
// increasing label order (one representative per chord diagram).
inline void gen_words(int n, std::vector<int>& word,
                      std::vector<std::vector<int>>& out) {
  int len = 2 * n;
  int pos = 0;
  while (pos < len && word[pos] != 0) ++pos;
  if (pos == len) {
    out.push_back(word);
    return;
  }
  int label = 1;
  for (int v : word) label = std::max(label, v + 1);
  word[pos] = label;
  for (int q = pos + 1; q < len; ++q) {
    if (word[q] != 0) continue;
    word[q] = label;
    gen_words(n, word, out);
    word[q] = 0;
  }
  word[pos] = 0;
}

// Keep one representative per rotation class (with first-occurrence
// relabeling applied after rotating).
inline bool rotation_canonical(const std::vector<int>& word) {
  int len = static_cast<int>(word.size());
  std::vector<int> relabel;
  for (int r = 1; r < len; ++r) {
    relabel.assign(len / 2 + 1, 0);
    int next = 1;
    bool smaller = false;
    for (int k = 0; k < len; ++k) {
      int v = word[(k + r) % len];
      if (relabel[v] == 0) relabel[v] = next++;
      if (relabel[v] != word[k]) {
        smaller = relabel[v] < word[k];
        break;
      }
    }
    if (smaller) return false;
  }
  return true;
}

}  // namespace detail

// Every stable spherical curve with up to n crossings. With dedup, one entry
// per orientation-preserving equivalence class; without, one entry per
// realizable signed code up to word rotation.
inline Corpus enumerate_curves(int n_max, bool dedup = true) {
  Corpus corpus;
  corpus.n_max = n_max;
  corpus.dedup = dedup;
  std::set<std::string> seen;
  for (int n = 0; n <= n_max; ++n) {
    if (n == 0) {
      CorpusEntry entry;
      entry.map = build_map(entry.code);
      corpus.entries.push_back(std::move(entry));
      continue;
    }
    std::vector<std::vector<int>> words;
    std::vector<int> scratch(2 * n, 0);
    detail::gen_words(n, scratch, words);
    for (const auto& word : words) {
      if (!detail::rotation_canonical(word)) continue;
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
        if (dedup) {
          std::string key = canonical_key(m);
          if (!seen.insert(key).second) continue;
          CorpusEntry entry{canonical_form(m), std::move(m)};
          corpus.entries.push_back(std::move(entry));
        } else {
          corpus.entries.push_back({code, std::move(m)});
        }
      }
    }
  }
  return corpus;
}

// One census row per equivalence class: canonical code plus the full
// invariant evaluation at k1 = k2 = 0.
struct CensusRow {
  SignedGaussCode code;
  InvariantReport report;
};

inline std::vector<CensusRow> census(int n_max) {
  std::vector<CensusRow> rows;
  for (const auto& e : enumerate_curves(n_max, true).entries)
    rows.push_back({e.code, universal_report(e.map)});
  return rows;
}

// Deterministic list of compatible (disjoint-support) site pairs on one
// curve, capped.
inline std::vector<std::pair<SiteDescriptor, SiteDescriptor>>
compatible_site_pairs(const CurveMap& m, long cap) {
  std::vector<std::pair<SiteDescriptor, SiteDescriptor>> pairs;
  auto sites = enumerate_sites(m);
  for (size_t i = 0; i < sites.size() && static_cast<long>(pairs.size()) < cap;
       ++i) {
    for (size_t k = i + 1;
         k < sites.size() && static_cast<long>(pairs.size()) < cap; ++k) {
      if (sites_disjoint(m, sites[i], sites[k]))
        pairs.emplace_back(sites[i], sites[k]);
    }
  }
  return pairs;
}

}  // namespace spherecurves
