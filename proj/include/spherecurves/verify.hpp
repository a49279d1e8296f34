#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spherecurves/enumerate.hpp"
#include "spherecurves/invariants.hpp"
#include "spherecurves/symbols.hpp"

namespace spherecurves {

enum class Suite { Main, Image, Fin, Symbols, Order2, Smoothing, Fig1b, Relations };

inline const char* to_string(Suite s) {
  switch (s) {
    case Suite::Main: return "main";
    case Suite::Image: return "image";
    case Suite::Fin: return "fin";
    case Suite::Symbols: return "symbols";
    case Suite::Order2: return "order2";
    case Suite::Smoothing: return "smoothing";
    case Suite::Fig1b: return "fig1b";
    case Suite::Relations: return "relations";
  }
  return "?";
}

inline Suite suite_from_name(const std::string& name) {
  for (Suite s : {Suite::Main, Suite::Image, Suite::Fin, Suite::Symbols,
                  Suite::Order2, Suite::Smoothing, Suite::Fig1b,
                  Suite::Relations})
    if (name == to_string(s)) return s;
  throw MalformedCode("unknown suite '" + name + "'");
}

struct Failure {
  std::string instance;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  long instances = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  void check(bool cond, const std::string& instance,
             const std::string& expected, const std::string& got) {
    ++instances;
    if (!cond) failures.push_back({instance, expected, got});
  }
};

namespace detail {

inline std::string entry_id(const CorpusEntry& e) { return to_text(e.code); }

// psi3..psi6 vanish on F of every stable spherical curve.
inline void run_main(SuiteReport& rep, const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    XYVector f = F_of(e.map);
    for (int i = 3; i <= 6; ++i) {
      Rational v = apply(psi(i), f);
      rep.check(v.is_zero(), entry_id(e) + " psi" + std::to_string(i), "0",
                v.str());
    }
  }
}

// (psi1, psi2) = (2,0) on od, (0,2) on ev; support parities follow the
// class: every a+b and every d is congruent to n+1 mod 2.
inline void run_image(SuiteReport& rep, const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    XYVector f = F_of(e.map);
    bool od = regular_homotopy_class(e.map) == HomotopyClass::OD;
    Rational p1 = apply(psi(1), f), p2 = apply(psi(2), f);
    rep.check(p1 == Rational(od ? 2 : 0) && p2 == Rational(od ? 0 : 2),
              entry_id(e) + " (psi1,psi2)", od ? "(2,0)" : "(0,2)",
              "(" + p1.str() + "," + p2.str() + ")");
    int want = (e.map.n + 1) % 2;
    bool parities = true;
    for (const auto& [k, c] : f.x)
      if (((k.first + k.second) % 2 + 2) % 2 != want) parities = false;
    for (const auto& [d, c] : f.y)
      if ((d % 2 + 2) % 2 != want) parities = false;
    rep.check(parities, entry_id(e) + " support parity",
              "a+b=d=n+1 mod 2", parities ? "ok" : "violated");
  }
}

// The two equalities of psi5 and psi6 written out over x_{a,b}, y_d, with
// the trivial side checked to be term-free.
inline void run_fin(SuiteReport& rep, const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    XYVector f = F_of(e.map);
    bool ev = regular_homotopy_class(e.map) == HomotopyClass::EV;

    Rational eq1;
    long terms1 = 0;
    for (const auto& [d, c] : f.y)
      if (odd(d)) {
        eq1 += c * Rational(1, d);
        ++terms1;
      }
    for (const auto& [k, c] : f.x) {
      int a = k.first, b = k.second, s = a + b;
      if (odd(s)) {
        eq1 += c * Rational(4 * (a - b + 1) - s * s,
                            static_cast<long long>(s) * (s * s - 4));
        ++terms1;
      }
    }
    rep.check(eq1.is_zero(), entry_id(e) + " equality(1)", "0", eq1.str());
    if (ev)
      rep.check(terms1 == 0, entry_id(e) + " equality(1) trivial on ev",
                "no terms", std::to_string(terms1) + " terms");

    Rational eq2;
    long terms2 = 0;
    {
      Rational y0 = f.y_coeff(0);
      if (!y0.is_zero()) ++terms2;
      eq2 += y0;
    }
    for (const auto& [k, c] : f.x) {
      int a = k.first, b = k.second, s = a + b;
      if (s == 0) {
        eq2 += c * Rational(b - a - 1);
        ++terms2;
      } else if (s == 2 || s == -2) {
        eq2 += c * Rational(a - b, 2);
        ++terms2;
      }
    }
    rep.check(eq2.is_zero(), entry_id(e) + " equality(2)", "0", eq2.str());
    if (!ev)
      rep.check(terms2 == 0, entry_id(e) + " equality(2) trivial on od",
                "no terms", std::to_string(terms2) + " terms");
  }
}

inline std::string j_parity_class(const Symbol& s) {
  // JB counts as its JA reduction for the parity table.
  int a = s.lo, b = s.hi;
  SymbolKind kind = s.kind;
  if (kind == SymbolKind::JB) {
    kind = SymbolKind::JA;
    a -= 1;
    b -= 1;
  }
  std::string name = kind == SymbolKind::JPlus ? "J+" : "JA";
  std::string pa = even(a) ? "e" : "o";
  std::string pb = even(b) ? "e" : "o";
  if (pa > pb) std::swap(pa, pb);  // unordered pair: "eo" canonical
  return name + pa + pb;
}

// eta values on the six J parity classes (rows eta1..eta6); everything else
// in the table is zero.
inline Rational eta_table(int i, const std::string& cls) {
  static const std::map<std::string, std::array<int, 6>> table = {
      // eta1, eta2, eta3, eta4, eta5, eta6
      {"J+eo", {0, 0, 1, 0, 1, 0}},
      {"JAee", {-8, 0, 2, 0, 0, 0}},
      {"JAoo", {-8, 0, 0, 0, 2, 0}},
      {"J+ee", {0, 0, 0, 2, 0, 0}},
      {"J+oo", {0, 0, 0, 0, 0, 2}},
      {"JAeo", {0, -8, 0, 1, 0, 1}},
  };
  return Rational(table.at(cls)[i - 1]);
}

struct SymbolsOutcome {
  std::map<SymbolKind, long> kind_counts;
  std::map<int, long> s_hat_counts;
};

// The central calibration contract plus the jump constants and eta table.
inline SymbolsOutcome run_symbols(SuiteReport& rep, const Corpus& corpus) {
  SymbolsOutcome out;
  for (const auto& e : corpus.entries) {
    auto sites = enumerate_sites(e.map);
    for (size_t i = 0; i < sites.size(); ++i) {
      SingularCurve sc = make_singular(e.map, sites[i]);
      std::string id =
          entry_id(e) + " site#" + std::to_string(i) + " " + sc.symbol.str();
      XYVector diff = f1(sc);
      XYVector formula = f1_of_symbol(sc.symbol);
      rep.check(diff == formula, id + " formula", formula.str(), diff.str());

      ++out.kind_counts[sc.symbol.kind];
      if (sc.symbol.kind == SymbolKind::S)
        ++out.s_hat_counts[sc.symbol.hat_count()];

      HomotopyClass cls = symbol_class(sc.symbol);
      rep.check(cls == regular_homotopy_class(sc.pos) &&
                    cls == regular_homotopy_class(sc.neg),
                id + " class", to_string(cls), "resolution class differs");

      bool is_j = sc.symbol.kind != SymbolKind::S;
      Rational jump_p = apply(phi_plus(), diff);
      Rational jump_m = apply(phi_minus(), diff);
      Rational jump_s = apply(phi_st(), diff);
      if (sc.symbol.kind == SymbolKind::JPlus) {
        rep.check(jump_p == Rational(8), id + " phi+ jump", "8", jump_p.str());
        rep.check(jump_m.is_zero(), id + " phi- jump", "0", jump_m.str());
      } else if (is_j) {
        rep.check(jump_p.is_zero(), id + " phi+ jump", "0", jump_p.str());
        rep.check(jump_m == Rational(-8), id + " phi- jump", "-8",
                  jump_m.str());
      }
      rep.check(jump_s == Rational(is_j ? 0 : 24), id + " phi_st jump",
                is_j ? "0" : "24", jump_s.str());

      if (is_j) {
        std::string cls_name = j_parity_class(sc.symbol);
        for (int k = 1; k <= 6; ++k) {
          Rational v = apply(eta(k), diff);
          Rational want = eta_table(k, cls_name);
          rep.check(v == want,
                    id + " eta" + std::to_string(k) + " on " + cls_name,
                    want.str(), v.str());
        }
      } else {
        for (int k = 1; k <= 6; ++k) {
          Rational v = apply(eta(k), diff);
          rep.check(v.is_zero(), id + " eta" + std::to_string(k) + " on S",
                    "0", v.str());
        }
      }

      for (int k = 1; k <= 6; ++k) {
        Rational v = apply(psi(k), diff);
        rep.check(v.is_zero(), id + " psi" + std::to_string(k) + " on f1",
                  "0", v.str());
      }
    }
  }
  return out;
}

inline void run_order2(SuiteReport& rep, const Corpus& corpus, long pair_cap) {
  long used = 0;
  for (const auto& e : corpus.entries) {
    if (used >= pair_cap) break;
    auto pairs = compatible_site_pairs(e.map, pair_cap - used);
    for (const auto& [a, b] : pairs) {
      XYVector v = f2(e.map, a, b);
      rep.check(v.is_zero(), entry_id(e) + " pair#" + std::to_string(used),
                "0", v.str());
      ++used;
    }
  }
}

inline void run_smoothing(SuiteReport& rep, const Corpus& corpus) {
  struct H {
    const char* name;
    std::function<Rational(int)> h;
  };
  const std::vector<H> hs = {
      {"1", [](int) { return Rational(1); }},
      {"d", [](int d) { return Rational(d); }},
      {"d^2", [](int d) { return Rational(d * d); }},
      {"odd", [](int d) { return Rational(odd(d) ? 1 : 0); }},
      {"even", [](int d) { return Rational(even(d) ? 1 : 0); }},
  };
  for (const auto& e : corpus.entries) {
    for (const auto& h : hs) {
      auto [lhs, rhs] = h_form(e.map, h.h);
      rep.check(lhs == rhs, entry_id(e) + " h=" + h.name, lhs.str(),
                rhs.str());
    }
  }
}

inline void run_fig1b(SuiteReport& rep, const Corpus& corpus) {
  std::map<std::pair<int, int>, std::array<int, 4>> table;
  for (const auto& e : corpus.entries) {
    RegionLabels labels = region_labels(e.map);
    for (int v = 0; v < e.map.n; ++v) {
      auto ab = exterior_indices(e.map, v);
      auto tuple = crossing_d_tuple(e.map, labels, v);
      auto [it, inserted] = table.emplace(ab, tuple);
      std::string id = entry_id(e) + " crossing " + std::to_string(v) +
                       " type(" + std::to_string(ab.first) + "," +
                       std::to_string(ab.second) + ")";
      auto fmt = [](const std::array<int, 4>& t) {
        return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + "," + std::to_string(t[3]) + ")";
      };
      rep.check(inserted || it->second == tuple, id, fmt(it->second),
                fmt(tuple));
    }
  }
}

inline void run_relations(SuiteReport& rep, int range) {
  RelationReport relations = verify_relations(range);
  rep.instances += relations.checked;
  for (const auto& id : relations.failures)
    rep.failures.push_back({id, "identity holds", "violated"});

  // Basis-reduction contract on pseudorandom symbols.
  std::mt19937 rng(20251108);
  std::uniform_int_distribution<int> pick_idx(-6, 6);
  std::uniform_int_distribution<int> pick_kind(0, 3);
  std::uniform_int_distribution<int> pick_bit(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    Symbol s;
    switch (pick_kind(rng)) {
      case 0:
        s = Symbol::jplus(pick_idx(rng), pick_idx(rng));
        break;
      case 1:
        s = Symbol::ja(pick_idx(rng), pick_idx(rng));
        break;
      case 2:
        s = Symbol::jb(pick_idx(rng), pick_idx(rng));
        break;
      default:
        s = Symbol::s({pick_idx(rng), pick_idx(rng), pick_idx(rng)},
                      {pick_bit(rng) == 1, pick_bit(rng) == 1,
                       pick_bit(rng) == 1});
        break;
    }
    BasisCoords coords = reduce_to_basis(s);
    XYVector recombined;
    bool keys_ok = true;
    for (const auto& [key, coef] : coords) {
      recombined += coef * f1_of_symbol(key);
      if (key.kind == SymbolKind::JB) keys_ok = false;
      if (key.kind == SymbolKind::S) {
        Symbol canon = Symbol::s({key.idx[0], key.idx[1], key.idx[2]},
                                 {key.hat[0], key.hat[1], key.hat[2]});
        int m = 0;
        for (int k = 0; k < 3; ++k)
          if (key.hat[k]) ++m;
        bool basis_form = m == 1;
        for (int k = 0; k < 3; ++k)
          if (!key.hat[k] && key.idx[k] != 0) basis_form = false;
        if (!basis_form || !(canon == key)) keys_ok = false;
      }
    }
    rep.check(keys_ok, "reduce keys " + s.str(), "A^J ∪ A^S only",
              "stray key");
    rep.check(recombined == f1_of_symbol(s), "reduce contract " + s.str(),
              f1_of_symbol(s).str(), recombined.str());
  }
}

}  // namespace detail

// Named verification suites over the enumerated corpus; failures are data.
inline SuiteReport run_suite(Suite suite, int max_crossings,
                             long order2_pairs = 2000) {
  SuiteReport rep;
  rep.suite = to_string(suite);
  if (suite == Suite::Relations) {
    detail::run_relations(rep, 6);
    return rep;
  }
  bool dedup = suite != Suite::Main && suite != Suite::Image &&
               suite != Suite::Fin;
  Corpus corpus = enumerate_curves(max_crossings, dedup);
  switch (suite) {
    case Suite::Main:
      detail::run_main(rep, corpus);
      break;
    case Suite::Image:
      detail::run_image(rep, corpus);
      break;
    case Suite::Fin:
      detail::run_fin(rep, corpus);
      break;
    case Suite::Symbols: {
      auto out = detail::run_symbols(rep, corpus);
      for (SymbolKind kind :
           {SymbolKind::JPlus, SymbolKind::JA, SymbolKind::JB}) {
        rep.check(out.kind_counts[kind] > 0, "coverage of J family",
                  "at least one site", "none");
      }
      for (int h = 0; h <= 3; ++h)
        rep.check(out.s_hat_counts[h] > 0,
                  "coverage of S family with " + std::to_string(h) + " hats",
                  "at least one site", "none");
      break;
    }
    case Suite::Order2:
      detail::run_order2(rep, corpus, order2_pairs);
      break;
    case Suite::Smoothing:
      detail::run_smoothing(rep, corpus);
      break;
    case Suite::Fig1b:
      detail::run_fig1b(rep, corpus);
      break;
    default:
      throw AssertionFailure("unhandled suite");
  }
  return rep;
}

}  // namespace spherecurves
