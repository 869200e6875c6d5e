#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qbafx/qbaf.hpp"

namespace qbafx {

/// One source's report: "source says object has value".
struct Report {
  std::string source;
  std::string object;
  std::string value;
  friend auto operator<=>(const Report&, const Report&) = default;
};

/// Truth-discovery network: sources reporting values for objects. Per-source
/// functional consistency holds by construction (no source reports two
/// different values for the same object); domains are the observed values.
struct Tdn {
  std::set<std::string> sources;
  std::set<std::string> objects;
  std::map<std::string, std::set<std::string>> domains;  // object -> values
  std::vector<Report> reports;                           // deduplicated, sorted
};

/// Canonical argument id for the claim "object has value".
std::string claim_id(const std::string& object, const std::string& value);

/// Parses report CSV (header `source,object,value`, one report per row).
/// Fields must be valid id tokens (non-empty, no whitespace, no commas) since
/// they become argument-id material. Duplicate identical rows deduplicate.
/// Errors: ParseError (structure), InconsistentSource (a source reporting two
/// values for one object).
Tdn parse_reports(const std::string& text);

/// Induces the TD-QBAF: arguments are the sources plus one claim argument per
/// distinct (object, value) reported; every report contributes the support
/// pair (source, claim) and (claim, source); claims on the same object with
/// different values attack each other in both directions. Base scores: 0.5
/// for sources, 0 for claims. Errors: IdCollision when a source id equals a
/// canonical claim id (or two claims collide on one id).
Qbaf induce_qbaf(const Tdn& n);

}  // namespace qbafx
