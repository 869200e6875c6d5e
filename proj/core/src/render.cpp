#include "qbafx/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "qbafx/errors.hpp"

namespace qbafx {

namespace {

// ColorBrewer 5-class sequential ramps (light to dark).
constexpr const char* kBlues[5] = {"#eff3ff", "#bdd7e7", "#6baed6",
                                   "#3182bd", "#08519c"};
constexpr const char* kReds[5] = {"#fee5d9", "#fcae91", "#fb6a4a",
                                  "#de2d26", "#a50f15"};
constexpr const char* kGreyFill = "#d9d9d9";
constexpr const char* kGreyStroke = "#bdbdbd";

std::string quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int bucket_of(double t) {
  const int b = static_cast<int>(std::floor(t * 5.0));
  return std::clamp(b, 0, 4);
}

std::string penwidth_of(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 1.0 + 4.0 * t);
  return buf;
}

}  // namespace

std::string render_dot(const Qbaf& q, const AttributionReport& report,
                       const RenderSpec& spec) {
  if (!q.has_argument(report.topic)) {
    throw Error(ErrorCode::TargetMismatch,
                "report topic '" + report.topic +
                    "' is not an argument of the framework");
  }

  // Validate targets against the framework and index their values.
  std::map<ArgumentId, double> node_value;
  std::map<EdgeKey, double> edge_value;
  for (const AttributionEntry& e : report.entries) {
    if (e.target.kind != report.kind) {
      throw Error(ErrorCode::TargetMismatch,
                  "entry '" + e.target.display() +
                      "' disagrees with the report's target kind");
    }
    if (report.kind == TargetKind::Argument) {
      if (!q.has_argument(e.target.argument)) {
        throw Error(ErrorCode::TargetMismatch,
                    "explained argument '" + e.target.argument +
                        "' is not in the framework");
      }
      if (!node_value.emplace(e.target.argument, e.value).second) {
        throw Error(ErrorCode::TargetMismatch,
                    "duplicate explanation for argument '" +
                        e.target.argument + "'");
      }
    } else {
      if (!q.has_edge(e.target.edge.first, e.target.edge.second)) {
        throw Error(ErrorCode::TargetMismatch,
                    "explained edge " + e.target.display() +
                        " is not in the framework");
      }
      if (!edge_value.emplace(e.target.edge, e.value).second) {
        throw Error(ErrorCode::TargetMismatch,
                    "duplicate explanation for edge " + e.target.display());
      }
    }
  }

  // Per-report normalization: the darkest color marks the largest magnitude
  // that is displayed at all.
  double max_abs = 0.0;
  for (const AttributionEntry& e : report.entries) {
    const double a = std::abs(e.value);
    if (a >= spec.negligible_threshold) max_abs = std::max(max_abs, a);
  }

  const auto styling = [&](double v) -> std::pair<std::string, double> {
    // Returns (color, t) with t in [0,1]; empty color means negligible.
    const double a = std::abs(v);
    if (a < spec.negligible_threshold || max_abs == 0.0) return {"", 0.0};
    const double t = a / max_abs;
    const char* color =
        v > 0 ? kBlues[bucket_of(t)] : kReds[bucket_of(t)];
    return {color, t};
  };

  std::string out;
  out += "digraph qbafx {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=ellipse, style=filled, fillcolor=\"";
  out += kGreyFill;
  out += "\"];\n";

  for (const ArgumentId& id : q.arguments()) {
    std::string attrs;
    if (report.kind == TargetKind::Argument) {
      auto it = node_value.find(id);
      if (it != node_value.end()) {
        const auto [color, t] = styling(it->second);
        if (!color.empty()) {
          attrs += "fillcolor=\"" + color + "\"";
          if (bucket_of(t) >= 3) attrs += ", fontcolor=\"white\"";
        }
      }
    }
    if (id == report.topic) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "peripheries=2";
    }
    if (!attrs.empty()) {
      out += "  " + quote(id) + " [" + attrs + "];\n";
    } else {
      out += "  " + quote(id) + ";\n";
    }
  }

  for (const Edge& e : q.edges()) {
    std::string attrs;
    if (e.polarity == Polarity::Support) attrs = "style=dashed";
    if (report.kind == TargetKind::Edge) {
      auto it = edge_value.find(e.key());
      std::string color = kGreyStroke;
      double t = 0.0;
      if (it != edge_value.end()) {
        const auto [c, tt] = styling(it->second);
        if (!c.empty()) {
          color = c;
          t = tt;
        }
      }
      if (!attrs.empty()) attrs += ", ";
      attrs += "color=\"" + color + "\", penwidth=" + penwidth_of(t);
    }
    out += "  " + quote(e.source) + " -> " + quote(e.target);
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }

  out += "}\n";
  return out;
}

}  // namespace qbafx
