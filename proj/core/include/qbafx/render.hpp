#pragma once

#include <string>

#include "qbafx/attribution.hpp"
#include "qbafx/qbaf.hpp"

namespace qbafx {

/// Rendering knobs. Values with |value| < negligible_threshold are drawn
/// grey; everything else is colored on a 5-step blue (positive) or red
/// (negative) ramp with intensity linear in |value| / max displayed |value|,
/// normalized per report.
struct RenderSpec {
  double negligible_threshold = 1e-3;
};

/// Renders the framework with an attribution overlay as a DOT digraph.
/// Attack edges are solid, support edges dashed; the topic argument gets a
/// double border. Argument reports color node fills; edge reports color edge
/// strokes and scale penwidth linearly from 1 to 5 by normalized magnitude.
/// Output is deterministic (statements in natural id order). Errors:
/// TargetMismatch (report topic or a target not in q, duplicate targets, or
/// entries whose kind disagrees with the report's kind).
std::string render_dot(const Qbaf& q, const AttributionReport& report,
                       const RenderSpec& spec = {});

}  // namespace qbafx
