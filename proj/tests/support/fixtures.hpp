#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qbafx/json_io.hpp"
#include "qbafx/qbaf.hpp"

namespace testsupport {

inline std::string fixture_dir() {
  if (const char* env = std::getenv("QBAFX_FIXTURE_DIR")) return env;
#ifdef QBAFX_FIXTURE_DIR
  return QBAFX_FIXTURE_DIR;
#else
  return "tests/fixtures";
#endif
}

inline std::string fixture_path(const std::string& name) {
  return fixture_dir() + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string read_fixture(const std::string& name) {
  return read_file(fixture_path(name));
}

/// The running example framework: alpha attacked by beta, supported by gamma
/// and delta; delta itself attacked by beta and supported by gamma.
inline qbafx::Qbaf figure2() {
  return qbafx::build_qbaf(
      {"alpha", "beta", "gamma", "delta"},
      {{"beta", "delta"}, {"beta", "alpha"}},
      {{"gamma", "delta"}, {"gamma", "alpha"}, {"delta", "alpha"}},
      {{"alpha", 0.8}, {"beta", 0.6}, {"gamma", 0.9}, {"delta", 0.7}});
}

/// The 17-argument truth-discovery case study (11 sources, 6 claims).
inline qbafx::Qbaf case_study() {
  return qbafx::parse_qbaf_json(read_fixture("case_study_qbaf.json"));
}

}  // namespace testsupport
