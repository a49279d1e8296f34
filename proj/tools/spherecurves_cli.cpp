#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spherecurves/enumerate.hpp"
#include "spherecurves/json_report.hpp"
#include "spherecurves/symbols.hpp"
#include "spherecurves/verify.hpp"

namespace {

using namespace spherecurves;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitNotRealizable = 2;
constexpr int kExitVerifyFailed = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedCode("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CurveMap load_map(const std::string& path) {
  return build_map(parse_gauss(read_file(path)));
}

void print_report_text(const InvariantReport& r, std::ostream& os) {
  os << "crossings: " << r.crossings << "\n";
  os << "class: " << to_string(r.cls) << "\n";
  os << "F: " << r.F.str() << "\n";
  os << "psi:";
  for (const auto& v : r.psi_values) os << " " << v;
  os << "\neta:";
  for (const auto& v : r.eta_values) os << " " << v;
  os << "\nJ+: " << r.jplus << "\nJ-: " << r.jminus << "\nSt: " << r.st
     << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial invariants of stable spherical curves"};
  app.require_subcommand(1);

  std::string in_path, out_path, suite_name, symbol_text, format = "json";
  int max_crossings = 4;
  bool dedup = true;
  long order2_pairs = 2000;
  std::string k1_str = "0", k2_str = "0";

  auto parse_rational = [](const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
  };

  auto* validate = app.add_subcommand("validate", "parse and realizability");
  validate->add_option("file", in_path)->required();

  auto* invariants =
      app.add_subcommand("invariants", "full invariant report of one curve");
  invariants->add_option("file", in_path)->required();
  invariants->add_option("--format", format)
      ->check(CLI::IsMember({"json", "text"}));
  invariants->add_option("--k1", k1_str, "psi1 constant");
  invariants->add_option("--k2", k2_str, "psi2 constant");

  auto* enumerate = app.add_subcommand("enumerate", "list realizable curves");
  enumerate->add_option("--max-crossings", max_crossings)->required();
  enumerate->add_flag("--dedup,!--no-dedup", dedup,
                      "one entry per equivalence class");

  auto* census =
      app.add_subcommand("census", "per-class invariant rows (JSON lines)");
  census->add_option("--max-crossings", max_crossings)->required();
  census->add_option("--out", out_path)->required();

  auto* symbol = app.add_subcommand("symbol", "singularity symbol calculus");
  symbol->require_subcommand(1);
  auto* sym_f1 = symbol->add_subcommand("f1", "F^(1) of a symbol");
  sym_f1->add_option("symbol", symbol_text)->required();
  auto* sym_reduce =
      symbol->add_subcommand("reduce", "coordinates in the A^J ∪ A^S basis");
  sym_reduce->add_option("symbol", symbol_text)->required();
  auto* sym_class = symbol->add_subcommand("class", "regular homotopy class");
  sym_class->add_option("symbol", symbol_text)->required();

  auto* verify = app.add_subcommand("verify", "corpus-wide identity suites");
  verify->add_option("--suite", suite_name)->required();
  verify->add_option("--max-crossings", max_crossings);
  verify->add_option("--pairs", order2_pairs, "order2 pair cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      CurveMap m = load_map(in_path);
      std::cout << to_text(canonical_form(m)) << "\n";
      return kExitOk;
    }
    if (*invariants) {
      CurveMap m = load_map(in_path);
      InvariantReport r =
          universal_report(m, parse_rational(k1_str), parse_rational(k2_str));
      if (format == "json")
        std::cout << emit_json(r) << "\n";
      else
        print_report_text(r, std::cout);
      return kExitOk;
    }
    if (*enumerate) {
      Corpus corpus = enumerate_curves(max_crossings, dedup);
      for (const auto& e : corpus.entries) std::cout << to_text(e.code) << "\n";
      std::cerr << corpus.entries.size() << " curves\n";
      return kExitOk;
    }
    if (*census) {
      auto rows = spherecurves::census(max_crossings);
      std::ofstream out(out_path);
      if (!out) throw MalformedCode("cannot open '" + out_path + "'");
      for (const auto& r : rows) {
        ordered_json row;
        row["code"] = to_text(r.code);
        row.update(report_to_json(r.report));
        out << row.dump() << "\n";
      }
      std::cerr << rows.size() << " rows\n";
      return kExitOk;
    }
    if (*symbol) {
      Symbol s = parse_symbol(symbol_text);
      if (*sym_f1) {
        std::cout << xy_to_json(f1_of_symbol(s)).dump() << "\n";
      } else if (*sym_reduce) {
        ordered_json rows = ordered_json::array();
        for (const auto& [key, coef] : reduce_to_basis(s))
          rows.push_back(ordered_json::array({key.str(), coef.str()}));
        std::cout << rows.dump() << "\n";
      } else {
        std::cout << to_string(symbol_class(s)) << "\n";
      }
      return kExitOk;
    }
    if (*verify) {
      SuiteReport rep =
          run_suite(suite_from_name(suite_name), max_crossings, order2_pairs);
      std::cout << "suite=" << rep.suite << " instances=" << rep.instances
                << " failures=" << rep.failures.size() << "\n";
      for (const auto& f : rep.failures)
        std::cout << "FAIL " << f.instance << " expected=" << f.expected
                  << " got=" << f.got << "\n";
      return rep.ok() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const MalformedCode& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const NotRealizable& e) {
    std::cerr << "not realizable: " << e.what() << "\n";
    return kExitNotRealizable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}
