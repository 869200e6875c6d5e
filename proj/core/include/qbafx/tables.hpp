#pragma once

#include <string>

#include "qbafx/attribution.hpp"
#include "qbafx/semantics.hpp"

namespace qbafx {

/// Fixed 9-decimal rendering used by every table ("-0.000000000" normalizes
/// to "0.000000000").
std::string format_fixed9(double v);

/// Strengths table: header `argument,strength`, one row per argument in
/// natural id order, strengths with 9 decimals.
std::string strengths_to_csv(const StrengthMap& strengths);

/// Attribution table: header `target,value,method,topic,samples,seed`; rows
/// in report order; edge targets rendered as "(src,dst)" (CSV-quoted);
/// samples/seed empty except for sampled reports.
std::string attribution_to_csv(const AttributionReport& report);

/// Inverse of attribution_to_csv (used by the render pipeline). Row order is
/// preserved. Throws ParseError with line diagnostics on malformed input or
/// on rows that disagree about kind, method, topic, samples or seed.
AttributionReport attribution_from_csv(const std::string& text);

}  // namespace qbafx
