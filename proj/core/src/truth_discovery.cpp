#include "qbafx/truth_discovery.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace qbafx {

namespace {

// Splits CSV text into lines; tolerates trailing newline and CRLF endings.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

void check_token(const std::string& value, const char* what, int line) {
  if (value.empty()) {
    throw ParseError(std::string(what) + " must be non-empty", line, what);
  }
  for (char c : value) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError(std::string(what) + " '" + value +
                           "' contains whitespace; fields must be plain "
                           "tokens",
                       line, what);
    }
  }
}

}  // namespace

std::string claim_id(const std::string& object, const std::string& value) {
  return object + "=" + value;
}

Tdn parse_reports(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError("empty document; expected header 'source,object,value'",
                     1);
  }
  if (lines[0] != "source,object,value") {
    throw ParseError("bad header '" + lines[0] +
                         "'; expected 'source,object,value'",
                     1);
  }

  Tdn tdn;
  // (source, object) -> (value, line) for the consistency check.
  std::map<std::pair<std::string, std::string>, std::pair<std::string, int>>
      seen;
  std::set<Report> unique;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const int line_no = static_cast<int>(row) + 1;
    if (lines[row].empty()) continue;  // ignore blank lines
    const std::vector<std::string> fields = split_fields(lines[row]);
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    check_token(fields[0], "source", line_no);
    check_token(fields[1], "object", line_no);
    check_token(fields[2], "value", line_no);

    const auto key = std::make_pair(fields[0], fields[1]);
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (it->second.first != fields[2]) {
        std::ostringstream os;
        os << "source '" << fields[0] << "' reports both '"
           << it->second.first << "' (line " << it->second.second << ") and '"
           << fields[2] << "' (line " << line_no << ") for object '"
           << fields[1] << "'";
        throw Error(ErrorCode::InconsistentSource, os.str());
      }
      continue;  // exact duplicate row
    }
    seen.emplace(key, std::make_pair(fields[2], line_no));
    unique.insert({fields[0], fields[1], fields[2]});
  }

  for (const Report& r : unique) {
    tdn.sources.insert(r.source);
    tdn.objects.insert(r.object);
    tdn.domains[r.object].insert(r.value);
    tdn.reports.push_back(r);
  }
  return tdn;
}

Qbaf induce_qbaf(const Tdn& n) {
  // Claims: one argument per distinct (object, value) present in reports.
  std::map<std::pair<std::string, std::string>, std::string> claims;
  std::map<std::string, std::pair<std::string, std::string>> claim_by_id;
  for (const Report& r : n.reports) {
    const auto key = std::make_pair(r.object, r.value);
    if (claims.count(key) != 0) continue;
    std::string cid = claim_id(r.object, r.value);
    auto [it, inserted] = claim_by_id.emplace(cid, key);
    if (!inserted) {
      throw Error(ErrorCode::IdCollision,
                  "claims (" + it->second.first + ", " + it->second.second +
                      ") and (" + r.object + ", " + r.value +
                      ") both canonicalize to id '" + cid + "'");
    }
    claims.emplace(key, std::move(cid));
  }
  for (const std::string& s : n.sources) {
    if (claim_by_id.count(s) != 0) {
      throw Error(ErrorCode::IdCollision,
                  "source id '" + s + "' collides with a claim id");
    }
  }

  std::vector<ArgumentId> args;
  BaseScores tau;
  for (const std::string& s : n.sources) {
    args.push_back(s);
    tau.emplace(s, 0.5);
  }
  for (const auto& [key, cid] : claims) {
    args.push_back(cid);
    tau.emplace(cid, 0.0);
  }

  std::vector<EdgeKey> supports;
  for (const Report& r : n.reports) {
    const std::string& cid = claims.at({r.object, r.value});
    supports.emplace_back(r.source, cid);
    supports.emplace_back(cid, r.source);
  }

  // Mutual attacks between claims on the same object with different values.
  std::vector<EdgeKey> attacks;
  std::map<std::string, std::vector<std::string>> claims_per_object;
  for (const auto& [key, cid] : claims) {
    claims_per_object[key.first].push_back(cid);
  }
  for (const auto& [object, cids] : claims_per_object) {
    (void)object;
    for (const std::string& a : cids) {
      for (const std::string& b : cids) {
        if (a != b) attacks.emplace_back(a, b);
      }
    }
  }

  return build_qbaf(args, attacks, supports, tau);
}

}  // namespace qbafx
