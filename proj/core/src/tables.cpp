#include "qbafx/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "qbafx/errors.hpp"

namespace qbafx {

namespace {

// RFC 4180 quoting: fields containing commas, quotes or newlines are wrapped
// in double quotes with inner quotes doubled. Only edge targets need it here.
std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits one CSV line into fields, honoring RFC 4180 quoting.
std::vector<std::string> split_csv_row(const std::string& line, int lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        continue;
      }
      cur += c;
      ++i;
      continue;
    }
    if (c == '"') {
      if (!cur.empty()) {
        throw ParseError("unexpected quote inside unquoted field", lineno);
      }
      quoted = true;
      ++i;
      continue;
    }
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
      ++i;
      continue;
    }
    cur += c;
    ++i;
  }
  if (quoted) throw ParseError("unterminated quoted field", lineno);
  fields.push_back(cur);
  return fields;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

double parse_double(const std::string& s, int lineno, const char* field) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError("cannot parse '" + s + "' as a number", lineno, field);
  }
}

AttributionTarget parse_target(const std::string& s, int lineno) {
  if (s.empty()) throw ParseError("empty target", lineno, "target");
  if (s.front() == '(') {
    if (s.back() != ')') {
      throw ParseError("edge target '" + s + "' is missing ')'", lineno,
                       "target");
    }
    const std::string inner = s.substr(1, s.size() - 2);
    const std::size_t comma = inner.find(',');
    if (comma == std::string::npos || inner.find(',', comma + 1) !=
                                          std::string::npos) {
      throw ParseError("edge target '" + s +
                           "' must name exactly two endpoints",
                       lineno, "target");
    }
    const std::string src = inner.substr(0, comma);
    const std::string dst = inner.substr(comma + 1);
    if (src.empty() || dst.empty()) {
      throw ParseError("edge target '" + s + "' has an empty endpoint",
                       lineno, "target");
    }
    return AttributionTarget::for_edge({src, dst});
  }
  return AttributionTarget::for_argument(s);
}

AttributionMethod parse_method(const std::string& s, int lineno) {
  if (s == "removal") return AttributionMethod::Removal;
  if (s == "shapley-exact") return AttributionMethod::ShapleyExact;
  if (s == "shapley-sampled") return AttributionMethod::ShapleySampled;
  throw ParseError("unknown method '" + s + "'", lineno, "method");
}

}  // namespace

std::string format_fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  std::string out = buf;
  if (out == "-0.000000000") out = "0.000000000";
  return out;
}

std::string strengths_to_csv(const StrengthMap& strengths) {
  std::vector<ArgumentId> ids;
  ids.reserve(strengths.size());
  for (const auto& [id, _] : strengths) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), natural_less);
  std::string out = "argument,strength\n";
  for (const ArgumentId& id : ids) {
    out += csv_quote(id) + "," + format_fixed9(strengths.at(id)) + "\n";
  }
  return out;
}

std::string attribution_to_csv(const AttributionReport& report) {
  std::string out = "target,value,method,topic,samples,seed\n";
  const std::string method = to_string(report.method);
  std::string samples, seed;
  if (report.method == AttributionMethod::ShapleySampled) {
    samples = std::to_string(report.sample_size.value());
    seed = std::to_string(report.seed.value());
  }
  for (const AttributionEntry& e : report.entries) {
    out += csv_quote(e.target.display()) + "," + format_fixed9(e.value) +
           "," + method + "," + csv_quote(report.topic) + "," + samples +
           "," + seed + "\n";
  }
  return out;
}

AttributionReport attribution_from_csv(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty attribution table", 1);
  if (lines[0] != "target,value,method,topic,samples,seed") {
    throw ParseError(
        "expected header 'target,value,method,topic,samples,seed', got '" +
            lines[0] + "'",
        1);
  }

  AttributionReport report;
  bool first = true;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (lines[li].empty()) continue;
    const int lineno = static_cast<int>(li + 1);
    const std::vector<std::string> f = split_csv_row(lines[li], lineno);
    if (f.size() != 6) {
      throw ParseError("expected 6 fields, got " +
                           std::to_string(f.size()),
                       lineno);
    }
    AttributionEntry entry;
    entry.target = parse_target(f[0], lineno);
    entry.value = parse_double(f[1], lineno, "value");
    const AttributionMethod method = parse_method(f[2], lineno);
    const std::string& topic = f[3];
    if (topic.empty()) throw ParseError("empty topic", lineno, "topic");
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    if (method == AttributionMethod::ShapleySampled) {
      if (f[4].empty() || f[5].empty()) {
        throw ParseError("sampled rows must carry samples and seed", lineno);
      }
      try {
        samples = std::stoi(f[4]);
        seed = std::stoull(f[5]);
      } catch (const std::exception&) {
        throw ParseError("cannot parse samples/seed in '" + f[4] + "','" +
                             f[5] + "'",
                         lineno, "samples");
      }
    } else if (!f[4].empty() || !f[5].empty()) {
      throw ParseError("samples and seed must be empty for method '" + f[2] +
                           "'",
                       lineno, "samples");
    }

    if (first) {
      report.kind = entry.target.kind;
      report.method = method;
      report.topic = topic;
      report.sample_size = samples;
      report.seed = seed;
      first = false;
    } else {
      if (entry.target.kind != report.kind) {
        throw ParseError("row mixes argument and edge targets", lineno,
                         "target");
      }
      if (method != report.method) {
        throw ParseError("row disagrees with the table's method", lineno,
                         "method");
      }
      if (topic != report.topic) {
        throw ParseError("row disagrees with the table's topic", lineno,
                         "topic");
      }
      if (samples != report.sample_size || seed != report.seed) {
        throw ParseError("row disagrees with the table's samples/seed",
                         lineno, "samples");
      }
    }
    report.entries.push_back(std::move(entry));
  }
  if (first) throw ParseError("attribution table has no rows", 1);
  return report;
}

}  // namespace qbafx
