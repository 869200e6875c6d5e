#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qbafx/errors.hpp"
#include "qbafx/ids.hpp"

namespace qbafx {

enum class Polarity { Attack, Support };

struct Edge {
  ArgumentId source;
  ArgumentId target;
  Polarity polarity;

  EdgeKey key() const { return {source, target}; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable quantitative bipolar argumentation framework: a finite argument
/// set with base scores in [0,1] plus disjoint attack and support relations.
/// Instances are always validated (duplicate-free ids, known endpoints, no
/// self-loops, no pair carrying both polarities) and stored canonically:
/// arguments in natural id order, edges ordered by (source, target).
/// Immutability makes sharing across threads safe without synchronization.
class Qbaf {
 public:
  Qbaf() = default;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  /// Arguments in natural id order; indices below refer to this vector.
  const std::vector<ArgumentId>& arguments() const { return ids_; }
  bool has_argument(const ArgumentId& id) const;
  /// Index of an argument in arguments(); throws UnknownArgument.
  std::size_t index_of(const ArgumentId& id) const;

  /// Base scores aligned with arguments().
  const std::vector<double>& base_scores() const { return tau_; }
  double base_score(const ArgumentId& id) const;
  BaseScores base_score_map() const;

  /// All edges, ordered by (source, target) in natural order.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(const ArgumentId& source, const ArgumentId& target) const;
  /// Edge lookup by ordered pair; throws UnknownEdge.
  const Edge& edge(const ArgumentId& source, const ArgumentId& target) const;

  /// Direct supporters/attackers of the argument at `index`, as ascending
  /// indices into arguments().
  const std::vector<std::size_t>& supporters_of(std::size_t index) const;
  const std::vector<std::size_t>& attackers_of(std::size_t index) const;

  friend bool operator==(const Qbaf& a, const Qbaf& b) {
    return a.ids_ == b.ids_ && a.tau_ == b.tau_ && a.edges_ == b.edges_;
  }

 private:
  // Trusted constructor: inputs must already be canonical and valid.
  Qbaf(std::vector<ArgumentId> ids, std::vector<double> tau,
       std::vector<Edge> edges);
  void rebuild_lookups();

  std::vector<ArgumentId> ids_;   // natural order
  std::vector<double> tau_;       // aligned with ids_
  std::vector<Edge> edges_;       // ordered by (source, target)
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> supporters_;
  std::vector<std::vector<std::size_t>> attackers_;

  friend Qbaf build_qbaf(const std::vector<ArgumentId>& arguments,
                         const std::vector<EdgeKey>& attacks,
                         const std::vector<EdgeKey>& supports,
                         const BaseScores& base_scores);
  friend Qbaf restrict_arguments(const Qbaf& q,
                                 const std::set<ArgumentId>& keep);
  friend Qbaf restrict_edges(const Qbaf& q, const std::set<EdgeKey>& keep);
  friend Qbaf with_base_scores(const Qbaf& q, const BaseScores& tau_prime);
};

/// Throws Error(InvalidArgumentId) unless `id` is a valid token: non-empty,
/// no whitespace, no commas.
void validate_argument_id(const ArgumentId& id);

/// Validating constructor. Duplicate edges are deduplicated (relations, not
/// multirelations). Errors: InvalidArgumentId, DuplicateArgumentId,
/// UnknownEndpoint, SelfLoop, PolarityConflict, BadBaseScore (missing,
/// out of [0,1], or given for an unknown argument).
Qbaf build_qbaf(const std::vector<ArgumentId>& arguments,
                const std::vector<EdgeKey>& attacks,
                const std::vector<EdgeKey>& supports,
                const BaseScores& base_scores);

/// Induced subgraph on `keep`: edges survive iff both endpoints are kept.
/// Errors: UnknownArgument if keep contains an id not in q.
Qbaf restrict_arguments(const Qbaf& q, const std::set<ArgumentId>& keep);

/// Keeps every argument and exactly the edges in `keep`.
/// Errors: UnknownEdge if keep contains a pair that is not an edge of q.
Qbaf restrict_edges(const Qbaf& q, const std::set<EdgeKey>& keep);

/// Same graph with base scores replaced. tau_prime must be defined on exactly
/// the argument set. Errors: DomainMismatch, BadBaseScore.
Qbaf with_base_scores(const Qbaf& q, const BaseScores& tau_prime);

}  // namespace qbafx
