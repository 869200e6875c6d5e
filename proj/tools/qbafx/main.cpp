// qbafx — command-line front end for the qbafx library.
//
// Subcommands:
//   solve     compute argument strengths for a QBAF (CSV)
//   from-tdn  induce a QBAF from a truth-discovery report table (JSON)
//   explain   attribute a topic's strength to arguments or relations (CSV)
//   render    overlay an explanation on the framework as Graphviz DOT
//
// Exit codes: 0 success (including --help/--version), 2 bad input or bad
// arguments, 3 no convergence, 4 exact enumeration over the player cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qbafx/attribution.hpp"
#include "qbafx/errors.hpp"
#include "qbafx/json_io.hpp"
#include "qbafx/qbaf.hpp"
#include "qbafx/render.hpp"
#include "qbafx/semantics.hpp"
#include "qbafx/tables.hpp"
#include "qbafx/truth_discovery.hpp"
#include "qbafx/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw qbafx::Error(qbafx::ErrorCode::ParseError,
                       "cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// All output is staged in memory and written in one shot, so a failed run
// never leaves a partial file behind.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw qbafx::Error(qbafx::ErrorCode::ParseError,
                       "cannot open '" + path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw qbafx::Error(qbafx::ErrorCode::ParseError,
                       "failed while writing '" + path + "'");
  }
}

std::string labels_json(const qbafx::Tdn& tdn) {
  nlohmann::ordered_json doc;
  doc["claims"] = nlohmann::ordered_json::array();
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
      rows;
  for (const auto& [object, values] : tdn.domains) {
    for (const std::string& value : values) {
      rows.push_back({qbafx::claim_id(object, value), {object, value}});
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) {
              return qbafx::natural_less(a.first, b.first);
            });
  for (const auto& [id, ov] : rows) {
    nlohmann::ordered_json claim;
    claim["id"] = id;
    claim["object"] = ov.first;
    claim["value"] = ov.second;
    doc["claims"].push_back(claim);
  }
  return doc.dump(2) + "\n";
}

struct SolveArgs {
  std::string qbaf_path;
  std::string out_path;
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

struct FromTdnArgs {
  std::string reports_path;
  std::string out_path;
  std::string labels_path;
};

struct ExplainArgs {
  std::string qbaf_path;
  std::string topic;
  std::string kind = "arguments";
  std::string method = "removal";
  std::string out_path;
  int samples = 1000;
  std::uint64_t seed = 42;
  int cap = qbafx::kDefaultExactCap;
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

struct RenderArgs {
  std::string qbaf_path;
  std::string explanation_path;
  std::string out_path;
  double negligible = 1e-3;
};

int run_solve(const SolveArgs& a) {
  const qbafx::Qbaf q = qbafx::parse_qbaf_json(read_file(a.qbaf_path));
  qbafx::SolverConfig cfg;
  cfg.tolerance = a.tolerance;
  cfg.max_iterations = a.max_iterations;
  const qbafx::SolveOutcome outcome = qbafx::solve_qe(q, cfg);
  write_output(a.out_path, qbafx::strengths_to_csv(outcome.strengths));
  return 0;
}

int run_from_tdn(const FromTdnArgs& a) {
  const qbafx::Tdn tdn = qbafx::parse_reports(read_file(a.reports_path));
  const qbafx::Qbaf q = qbafx::induce_qbaf(tdn);
  write_output(a.out_path, qbafx::serialize_qbaf_json(q));
  if (!a.labels_path.empty()) {
    write_output(a.labels_path, labels_json(tdn));
  }
  return 0;
}

int run_explain(const ExplainArgs& a) {
  const qbafx::Qbaf q = qbafx::parse_qbaf_json(read_file(a.qbaf_path));
  qbafx::SolverConfig cfg;
  cfg.tolerance = a.tolerance;
  cfg.max_iterations = a.max_iterations;

  qbafx::TargetKind kind;
  if (a.kind == "arguments") {
    kind = qbafx::TargetKind::Argument;
  } else if (a.kind == "relations") {
    kind = qbafx::TargetKind::Edge;
  } else {
    throw CLI::ValidationError("--kind",
                               "expected 'arguments' or 'relations'");
  }

  qbafx::AttributionMethod method;
  if (a.method == "removal") {
    method = qbafx::AttributionMethod::Removal;
  } else if (a.method == "shapley-exact") {
    method = qbafx::AttributionMethod::ShapleyExact;
  } else if (a.method == "shapley-sampled") {
    method = qbafx::AttributionMethod::ShapleySampled;
  } else {
    throw CLI::ValidationError(
        "--method", "expected 'removal', 'shapley-exact' or 'shapley-sampled'");
  }

  const qbafx::AttributionReport report = qbafx::explain_all(
      q, cfg, a.topic, kind, method, a.samples, a.seed, a.cap);
  write_output(a.out_path, qbafx::attribution_to_csv(report));
  return 0;
}

int run_render(const RenderArgs& a) {
  const qbafx::Qbaf q = qbafx::parse_qbaf_json(read_file(a.qbaf_path));
  const qbafx::AttributionReport report =
      qbafx::attribution_from_csv(read_file(a.explanation_path));
  qbafx::RenderSpec spec;
  spec.negligible_threshold = a.negligible;
  write_output(a.out_path, qbafx::render_dot(q, report, spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantitative bipolar argumentation: strengths, attribution, "
               "rendering"};
  app.set_version_flag("--version", std::string("qbafx ") + qbafx::kVersion);
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "compute argument strengths under the QE semantics");
  solve->add_option("--qbaf", solve_args.qbaf_path, "QBAF JSON file")
      ->required();
  solve->add_option("--out", solve_args.out_path,
                    "output CSV path (default: stdout)");
  solve->add_option("--tolerance", solve_args.tolerance,
                    "sup-norm convergence tolerance");
  solve->add_option("--max-iterations", solve_args.max_iterations,
                    "iteration budget");

  FromTdnArgs tdn_args;
  CLI::App* from_tdn = app.add_subcommand(
      "from-tdn", "induce a QBAF from a truth-discovery report table");
  from_tdn->add_option("--reports", tdn_args.reports_path,
                       "reports CSV file (source,object,value)")
      ->required();
  from_tdn->add_option("--out", tdn_args.out_path, "output QBAF JSON path")
      ->required();
  from_tdn->add_option("--labels", tdn_args.labels_path,
                       "optional claim-label sidecar JSON path");

  ExplainArgs explain_args;
  CLI::App* explain = app.add_subcommand(
      "explain", "attribute a topic argument's strength");
  explain->add_option("--qbaf", explain_args.qbaf_path, "QBAF JSON file")
      ->required();
  explain->add_option("--topic", explain_args.topic, "topic argument id")
      ->required();
  explain->add_option("--kind", explain_args.kind,
                      "'arguments' or 'relations'")
      ->required();
  explain->add_option("--method", explain_args.method,
                      "'removal', 'shapley-exact' or 'shapley-sampled'")
      ->required();
  explain->add_option("--samples", explain_args.samples,
                      "permutation draws for shapley-sampled");
  explain->add_option("--seed", explain_args.seed,
                      "seed for shapley-sampled");
  explain->add_option("--cap", explain_args.cap,
                      "player cap for shapley-exact");
  explain->add_option("--tolerance", explain_args.tolerance,
                      "sup-norm convergence tolerance");
  explain->add_option("--max-iterations", explain_args.max_iterations,
                      "iteration budget");
  explain->add_option("--out", explain_args.out_path,
                      "output CSV path (default: stdout)");

  RenderArgs render_args;
  CLI::App* render = app.add_subcommand(
      "render", "render an explanation over the framework as DOT");
  render->add_option("--qbaf", render_args.qbaf_path, "QBAF JSON file")
      ->required();
  render->add_option("--explanation", render_args.explanation_path,
                     "attribution CSV file")
      ->required();
  render->add_option("--out", render_args.out_path, "output DOT path")
      ->required();
  render->add_option("--negligible", render_args.negligible,
                     "|value| below this renders grey");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (from_tdn->parsed()) return run_from_tdn(tdn_args);
    if (explain->parsed()) return run_explain(explain_args);
    if (render->parsed()) return run_render(render_args);
  } catch (const qbafx::NonConvergenceError& e) {
    std::cerr << "qbafx: " << e.what() << "\n";
    return 3;
  } catch (const qbafx::Error& e) {
    std::cerr << "qbafx: " << e.what() << "\n";
    return e.code() == qbafx::ErrorCode::TooLargeForExact ? 4 : 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "qbafx: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qbafx: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
