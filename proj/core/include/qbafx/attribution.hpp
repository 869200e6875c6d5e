#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qbafx/qbaf.hpp"
#include "qbafx/semantics.hpp"

namespace qbafx {

enum class TargetKind { Argument, Edge };
enum class AttributionMethod { Removal, ShapleyExact, ShapleySampled };

const char* to_string(TargetKind kind);
const char* to_string(AttributionMethod method);

/// A single attribution target: an argument other than the topic, or an edge.
struct AttributionTarget {
  TargetKind kind;
  ArgumentId argument;  // meaningful when kind == Argument
  EdgeKey edge;         // meaningful when kind == Edge

  static AttributionTarget for_argument(ArgumentId id);
  static AttributionTarget for_edge(EdgeKey key);

  /// "s7" for arguments, "(s7,c5)" for edges.
  std::string display() const;
  friend bool operator==(const AttributionTarget&,
                         const AttributionTarget&) = default;
};

/// Natural ordering of same-kind targets (used for tie-breaking).
bool target_less(const AttributionTarget& a, const AttributionTarget& b);

struct AttributionEntry {
  AttributionTarget target;
  double value = 0.0;
};

/// One attribution value per eligible target (every argument except the
/// topic, or every edge), sorted by value descending with ties broken by
/// target id ascending. sample_size/seed are set for sampled reports only.
struct AttributionReport {
  ArgumentId topic;
  AttributionMethod method = AttributionMethod::Removal;
  TargetKind kind = TargetKind::Argument;
  std::vector<AttributionEntry> entries;
  std::optional<int> sample_size;
  std::optional<std::uint64_t> seed;
};

/// Default cap on exact Shapley enumeration (2^20 coalition evaluations).
inline constexpr int kDefaultExactCap = 20;

/// Worker count for parallel attribution loops: the QBAFX_THREADS environment
/// variable when set to a positive integer, hardware concurrency otherwise
/// (QBAFX_THREADS=0 also means auto). Results never depend on this value.
int effective_threads();

/// Removal-based argument attribution: sigma(topic) in q minus sigma(topic)
/// with beta removed (induced subgraph). Errors: TopicEqualsTarget,
/// UnknownArgument, NonConvergence (labeled with which solve failed).
double removal_aae(const Qbaf& q, const SolverConfig& cfg,
                   const ArgumentId& topic, const ArgumentId& beta);

/// Removal-based relation attribution: sigma(topic) in q minus sigma(topic)
/// with the single edge r removed. Errors: UnknownArgument, UnknownEdge,
/// NonConvergence.
double removal_rae(const Qbaf& q, const SolverConfig& cfg,
                   const ArgumentId& topic, const EdgeKey& r);

/// Value of an argument coalition: sigma(topic) in the framework restricted
/// to coalition ∪ {topic} (the topic is always retained; the empty coalition
/// is worth the topic's base score). Errors: UnknownArgument,
/// TopicEqualsTarget (topic listed in the coalition), NonConvergence.
double coalition_value_arguments(const Qbaf& q, const SolverConfig& cfg,
                                 const ArgumentId& topic,
                                 const std::set<ArgumentId>& coalition);

/// Value of an edge coalition: sigma(topic) with exactly those edges present.
/// Errors: UnknownArgument, UnknownEdge, NonConvergence.
double coalition_value_edges(const Qbaf& q, const SolverConfig& cfg,
                             const ArgumentId& topic,
                             const std::set<EdgeKey>& coalition);

/// Exact Shapley value of `target` in the coalition game over arguments
/// (players: all arguments except the topic) or edges (players: all edges),
/// by full subset enumeration with factorial weights. Errors:
/// TooLargeForExact (player count exceeds `enumeration_cap`),
/// TopicEqualsTarget, UnknownArgument/UnknownEdge, NonConvergence.
double shapley_exact(const Qbaf& q, const SolverConfig& cfg,
                     const ArgumentId& topic, const AttributionTarget& target,
                     int enumeration_cap = kDefaultExactCap);

/// Permutation-sampling Shapley estimate: `samples` permutations of the
/// player set are drawn from a deterministic counter-based stream keyed by
/// (seed, kind, target, draw index); each draw contributes the marginal
/// v(predecessors ∪ {target}) - v(predecessors). The estimate is a pure
/// function of its inputs — identical across re-runs and thread counts.
double shapley_sampled(const Qbaf& q, const SolverConfig& cfg,
                       const ArgumentId& topic,
                       const AttributionTarget& target, int samples,
                       std::uint64_t seed);

/// Full attribution table for every eligible target under one method.
/// Coalition values are memoized across targets within the call. samples and
/// seed apply to ShapleySampled only.
AttributionReport explain_all(const Qbaf& q, const SolverConfig& cfg,
                              const ArgumentId& topic, TargetKind kind,
                              AttributionMethod method, int samples = 1000,
                              std::uint64_t seed = 42,
                              int enumeration_cap = kDefaultExactCap);

}  // namespace qbafx
