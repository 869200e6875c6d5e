#pragma once

#include <map>
#include <string>
#include <utility>

namespace qbafx {

/// Arguments are identified by non-empty string tokens (no whitespace, no commas).
using ArgumentId = std::string;

/// An edge is identified by its ordered (source, target) pair; a pair can carry
/// at most one polarity within a framework, so the pair alone is unambiguous.
using EdgeKey = std::pair<ArgumentId, ArgumentId>;

/// Strength and base-score assignments, keyed by argument id.
using StrengthMap = std::map<ArgumentId, double>;
using BaseScores = std::map<ArgumentId, double>;

/// "Natural" id comparison: maximal runs of digits are compared by numeric
/// value (so "s2" < "s10"), everything else byte-wise. Runs with equal value
/// order by run length ("1" before "01") to keep the order total. This is the
/// canonical ordering used for argument lists, table rows and tie-breaking.
bool natural_less(const std::string& a, const std::string& b);

/// Natural ordering for edge keys: by source, then target.
bool natural_edge_less(const EdgeKey& a, const EdgeKey& b);

struct NaturalLess {
  using is_transparent = void;
  bool operator()(const std::string& a, const std::string& b) const {
    return natural_less(a, b);
  }
};

}  // namespace qbafx
