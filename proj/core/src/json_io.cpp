#include "qbafx/json_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace qbafx {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field + ": " + message, -1, field);
}

const json& require_field(const json& obj, const std::string& path,
                          const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(path.empty() ? name : path + "." + name,
                            "missing required field");
  return *it;
}

void reject_unknown_fields(const json& obj, const std::string& path,
                           std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool ok = std::any_of(known.begin(), known.end(), [&](const char* k) {
      return it.key() == k;
    });
    if (!ok) {
      fail(path.empty() ? it.key() : path + "." + it.key(),
           "unexpected field");
    }
  }
}

std::vector<EdgeKey> parse_edge_array(const json& arr,
                                      const std::string& field) {
  if (!arr.is_array()) fail(field, "expected an array of [source, target]");
  std::vector<EdgeKey> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = field + "[" + std::to_string(i) + "]";
    const json& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      fail(path, "expected a two-element array of argument ids");
    }
    out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return out;
}

}  // namespace

Qbaf parse_qbaf_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     line_of_byte(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) fail("$", "top-level value must be an object");
  reject_unknown_fields(doc, "", {"arguments", "attacks", "supports"});

  const json& args = require_field(doc, "", "arguments");
  if (!args.is_array()) fail("arguments", "expected an array");
  std::vector<ArgumentId> ids;
  BaseScores tau;
  ids.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string path = "arguments[" + std::to_string(i) + "]";
    const json& a = args[i];
    if (!a.is_object()) fail(path, "expected an object");
    reject_unknown_fields(a, path, {"id", "base_score"});
    const json& id = require_field(a, path, "id");
    if (!id.is_string()) fail(path + ".id", "expected a string");
    const json& score = require_field(a, path, "base_score");
    if (!score.is_number()) fail(path + ".base_score", "expected a number");
    ids.push_back(id.get<std::string>());
    // Duplicate ids surface as DuplicateArgumentId from build_qbaf; keep the
    // first score here so that check can fire with its own diagnostics.
    tau.emplace(ids.back(), score.get<double>());
  }

  const std::vector<EdgeKey> attacks =
      parse_edge_array(require_field(doc, "", "attacks"), "attacks");
  const std::vector<EdgeKey> supports =
      parse_edge_array(require_field(doc, "", "supports"), "supports");

  return build_qbaf(ids, attacks, supports, tau);
}

std::string serialize_qbaf_json(const Qbaf& q) {
  ordered_json doc;
  doc["arguments"] = ordered_json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    ordered_json a;
    a["id"] = q.arguments()[i];
    a["base_score"] = q.base_scores()[i];
    doc["arguments"].push_back(std::move(a));
  }
  doc["attacks"] = ordered_json::array();
  doc["supports"] = ordered_json::array();
  for (const Edge& e : q.edges()) {
    const char* field = e.polarity == Polarity::Attack ? "attacks" : "supports";
    doc[field].push_back(ordered_json::array({e.source, e.target}));
  }
  return doc.dump(2) + "\n";
}

}  // namespace qbafx
