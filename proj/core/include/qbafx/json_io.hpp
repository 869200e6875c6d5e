#pragma once

#include <string>

#include "qbafx/qbaf.hpp"

namespace qbafx {

/// Parses the canonical QBAF JSON document:
///   {"arguments": [{"id": "s0", "base_score": 0.5}, ...],
///    "attacks": [["c0", "c1"], ...],
///    "supports": [["s0", "c0"], ...]}
/// Argument order in the file is non-semantic. Unknown or missing fields are
/// rejected. Throws ParseError with 1-based line and field diagnostics on
/// malformed documents; build_qbaf validation errors propagate unchanged.
Qbaf parse_qbaf_json(const std::string& text);

/// Serializes a QBAF to the schema above: arguments in natural id order,
/// edges in canonical (source, target) order, numbers with up to 17
/// significant digits (shortest representation that round-trips exactly).
/// parse_qbaf_json(serialize_qbaf_json(q)) == q.
std::string serialize_qbaf_json(const Qbaf& q);

}  // namespace qbafx
