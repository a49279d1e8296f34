#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "spherecurves/errors.hpp"

namespace spherecurves {

// A double-occurrence word with crossing signs. The empty word is the
// embedded circle.
struct SignedGaussCode {
  std::vector<int> word;     // labels, each appearing exactly twice
  std::map<int, int> signs;  // label -> +1 / -1

  int crossings() const { return static_cast<int>(signs.size()); }

  bool operator==(const SignedGaussCode& o) const {
    return word == o.word && signs == o.signs;
  }
};

// Each label occurs exactly twice and has a sign; throws MalformedCode.
inline void validate_code(const SignedGaussCode& code) {
  std::map<int, int> count;
  for (int label : code.word) ++count[label];
  for (const auto& [label, c] : count) {
    if (c != 2)
      throw MalformedCode("label " + std::to_string(label) + " occurs " +
                          std::to_string(c) + " time(s), expected 2");
    auto it = code.signs.find(label);
    if (it == code.signs.end())
      throw MalformedCode("label " + std::to_string(label) + " has no sign");
    if (it->second != 1 && it->second != -1)
      throw MalformedCode("label " + std::to_string(label) +
                          " has sign outside {+1,-1}");
  }
  if (code.signs.size() != count.size())
    throw MalformedCode("signs declared for absent labels");
}

// Grammar: optional '#' comment lines and blank lines, plus exactly one line
//   gc: <label><sign> <label><sign> ...
// where sign is '+' or '-' and both occurrences of a label carry the same
// sign. "gc:" alone is the embedded circle.
inline SignedGaussCode parse_gauss(const std::string& text) {
  SignedGaussCode code;
  bool seen_gc = false;
  int gc_lineno = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i == line.size() || line[i] == '#') continue;
    if (line.compare(i, 3, "gc:") != 0)
      throw MalformedCode("expected 'gc:' line", lineno,
                          static_cast<int>(i) + 1);
    if (seen_gc)
      throw MalformedCode("duplicate 'gc:' line", lineno,
                          static_cast<int>(i) + 1);
    seen_gc = true;
    gc_lineno = lineno;
    i += 3;
    while (i < line.size()) {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i == line.size()) break;
      size_t start = i;
      int col = static_cast<int>(start) + 1;
      if (!std::isdigit(static_cast<unsigned char>(line[i])))
        throw MalformedCode("bad token: expected a label", lineno, col);
      long value = 0;
      while (i < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[i]))) {
        value = value * 10 + (line[i] - '0');
        if (value > 1000000)
          throw MalformedCode("label too large", lineno, col);
        ++i;
      }
      if (value == 0) throw MalformedCode("labels start at 1", lineno, col);
      if (i == line.size() || (line[i] != '+' && line[i] != '-'))
        throw MalformedCode("bad token: expected '+' or '-' after label",
                            lineno, col);
      int sign = line[i] == '+' ? 1 : -1;
      ++i;
      int label = static_cast<int>(value);
      auto it = code.signs.find(label);
      if (it != code.signs.end() && it->second != sign)
        throw MalformedCode(
            "label " + std::to_string(label) + " has conflicting signs",
            lineno, col);
      code.signs.emplace(label, sign);
      code.word.push_back(label);
    }
  }
  if (!seen_gc) throw MalformedCode("no 'gc:' line found");
  try {
    validate_code(code);
  } catch (const MalformedCode& e) {
    throw MalformedCode(e.what(), gc_lineno, 1);
  }
  return code;
}

// Canonical one-line text form; inverse of parse_gauss on canonical input.
inline std::string to_text(const SignedGaussCode& code) {
  std::string s = "gc:";
  for (int label : code.word) {
    s += " " + std::to_string(label);
    s += code.signs.at(label) > 0 ? '+' : '-';
  }
  return s;
}

}  // namespace spherecurves
