#pragma once

#include <stdexcept>
#include <string>

namespace spherecurves {

// Input text violates the signed Gauss code grammar or occurrence rules.
struct MalformedCode : std::runtime_error {
  int line;
  int column;
  MalformedCode(const std::string& reason, int line_ = 0, int column_ = 0)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) +
                                           ", col " + std::to_string(column_) +
                                           ": " + reason
                                     : reason),
        line(line_),
        column(column_) {}
};

// The signed code has no genus-0 embedding (face count != n+2).
struct NotRealizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A site descriptor fails its incidence preconditions.
struct InvalidSite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two crossings of equal (a,b) type exhibited different adjacent-d tuples.
struct InconsistentTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal contract that valid inputs can never violate failed.
struct AssertionFailure : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw AssertionFailure(what);
}

}  // namespace spherecurves
