#include "qbafx/qbaf.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

namespace qbafx {

namespace {

std::string edge_text(const ArgumentId& source, const ArgumentId& target) {
  return "(" + source + "," + target + ")";
}

bool edge_order(const Edge& a, const Edge& b) {
  if (a.source != b.source) return natural_less(a.source, b.source);
  return natural_less(a.target, b.target);
}

}  // namespace

void validate_argument_id(const ArgumentId& id) {
  if (id.empty()) {
    throw Error(ErrorCode::InvalidArgumentId, "argument id must be non-empty");
  }
  for (char c : id) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::InvalidArgumentId,
                  "argument id '" + id + "' contains whitespace");
    }
    if (c == ',') {
      throw Error(ErrorCode::InvalidArgumentId,
                  "argument id '" + id + "' contains a comma");
    }
  }
}

Qbaf::Qbaf(std::vector<ArgumentId> ids, std::vector<double> tau,
           std::vector<Edge> edges)
    : ids_(std::move(ids)), tau_(std::move(tau)), edges_(std::move(edges)) {
  rebuild_lookups();
}

void Qbaf::rebuild_lookups() {
  index_.clear();
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], i);
  supporters_.assign(ids_.size(), {});
  attackers_.assign(ids_.size(), {});
  for (const Edge& e : edges_) {
    const std::size_t src = index_.at(e.source);
    const std::size_t dst = index_.at(e.target);
    (e.polarity == Polarity::Support ? supporters_ : attackers_)[dst]
        .push_back(src);
  }
  // edges_ is sorted by (source, target), so each incoming list is already in
  // ascending source order; sort defensively to keep the invariant explicit.
  for (auto& v : supporters_) std::sort(v.begin(), v.end());
  for (auto& v : attackers_) std::sort(v.begin(), v.end());
}

bool Qbaf::has_argument(const ArgumentId& id) const {
  return index_.find(id) != index_.end();
}

std::size_t Qbaf::index_of(const ArgumentId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownArgument,
                "argument '" + id + "' is not in the framework");
  }
  return it->second;
}

double Qbaf::base_score(const ArgumentId& id) const {
  return tau_[index_of(id)];
}

BaseScores Qbaf::base_score_map() const {
  BaseScores out;
  for (std::size_t i = 0; i < ids_.size(); ++i) out.emplace(ids_[i], tau_[i]);
  return out;
}

bool Qbaf::has_edge(const ArgumentId& source, const ArgumentId& target) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), EdgeKey{source, target},
      [](const Edge& e, const EdgeKey& k) {
        if (e.source != k.first) return natural_less(e.source, k.first);
        return natural_less(e.target, k.second);
      });
  return it != edges_.end() && it->source == source && it->target == target;
}

const Edge& Qbaf::edge(const ArgumentId& source,
                       const ArgumentId& target) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), EdgeKey{source, target},
      [](const Edge& e, const EdgeKey& k) {
        if (e.source != k.first) return natural_less(e.source, k.first);
        return natural_less(e.target, k.second);
      });
  if (it == edges_.end() || it->source != source || it->target != target) {
    throw Error(ErrorCode::UnknownEdge, "edge " + edge_text(source, target) +
                                            " is not in the framework");
  }
  return *it;
}

const std::vector<std::size_t>& Qbaf::supporters_of(std::size_t index) const {
  return supporters_.at(index);
}

const std::vector<std::size_t>& Qbaf::attackers_of(std::size_t index) const {
  return attackers_.at(index);
}

Qbaf build_qbaf(const std::vector<ArgumentId>& arguments,
                const std::vector<EdgeKey>& attacks,
                const std::vector<EdgeKey>& supports,
                const BaseScores& base_scores) {
  std::vector<ArgumentId> ids = arguments;
  for (const ArgumentId& id : ids) validate_argument_id(id);
  std::sort(ids.begin(), ids.end(), natural_less);
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i] == ids[i - 1]) {
      throw Error(ErrorCode::DuplicateArgumentId,
                  "argument id '" + ids[i] + "' appears more than once");
    }
  }

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

  for (const auto& [id, value] : base_scores) {
    if (index.find(id) == index.end()) {
      throw Error(ErrorCode::BadBaseScore,
                  "base score given for unknown argument '" + id + "'");
    }
    (void)value;
  }
  std::vector<double> tau(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto it = base_scores.find(ids[i]);
    if (it == base_scores.end()) {
      throw Error(ErrorCode::BadBaseScore,
                  "no base score for argument '" + ids[i] + "'");
    }
    const double v = it->second;
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream os;
      os << "base score " << v << " for argument '" << ids[i]
         << "' is outside [0,1]";
      throw Error(ErrorCode::BadBaseScore, os.str());
    }
    tau[i] = v;
  }

  // Deduplicate edges per polarity; reject self-loops, unknown endpoints and
  // pairs listed with both polarities.
  std::set<std::pair<std::size_t, std::size_t>> attack_set, support_set;
  auto check_endpoints = [&](const EdgeKey& k,
                             const char* relation) -> std::pair<std::size_t,
                                                                std::size_t> {
    auto src = index.find(k.first);
    auto dst = index.find(k.second);
    if (src == index.end() || dst == index.end()) {
      const std::string& missing = src == index.end() ? k.first : k.second;
      throw Error(ErrorCode::UnknownEndpoint,
                  std::string(relation) + " edge " +
                      edge_text(k.first, k.second) +
                      " references unknown argument '" + missing + "'");
    }
    if (src->second == dst->second) {
      throw Error(ErrorCode::SelfLoop, std::string(relation) + " edge " +
                                           edge_text(k.first, k.second) +
                                           " is a self-loop");
    }
    return {src->second, dst->second};
  };
  for (const EdgeKey& k : attacks) {
    attack_set.insert(check_endpoints(k, "attack"));
  }
  for (const EdgeKey& k : supports) {
    const auto pair = check_endpoints(k, "support");
    if (attack_set.count(pair) != 0) {
      throw Error(ErrorCode::PolarityConflict,
                  "edge " + edge_text(k.first, k.second) +
                      " is listed as both attack and support");
    }
    support_set.insert(pair);
  }

  std::vector<Edge> edges;
  edges.reserve(attack_set.size() + support_set.size());
  for (const auto& [src, dst] : attack_set) {
    edges.push_back({ids[src], ids[dst], Polarity::Attack});
  }
  for (const auto& [src, dst] : support_set) {
    edges.push_back({ids[src], ids[dst], Polarity::Support});
  }
  std::sort(edges.begin(), edges.end(), edge_order);

  return Qbaf(std::move(ids), std::move(tau), std::move(edges));
}

Qbaf restrict_arguments(const Qbaf& q, const std::set<ArgumentId>& keep) {
  std::vector<bool> kept(q.size(), false);
  for (const ArgumentId& id : keep) kept[q.index_of(id)] = true;

  std::vector<ArgumentId> ids;
  std::vector<double> tau;
  ids.reserve(keep.size());
  tau.reserve(keep.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (kept[i]) {
      ids.push_back(q.ids_[i]);
      tau.push_back(q.tau_[i]);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : q.edges_) {
    if (kept[q.index_.at(e.source)] && kept[q.index_.at(e.target)]) {
      edges.push_back(e);
    }
  }
  return Qbaf(std::move(ids), std::move(tau), std::move(edges));
}

Qbaf restrict_edges(const Qbaf& q, const std::set<EdgeKey>& keep) {
  for (const EdgeKey& k : keep) q.edge(k.first, k.second);  // UnknownEdge
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (const Edge& e : q.edges_) {
    if (keep.count(e.key()) != 0) edges.push_back(e);
  }
  return Qbaf(q.ids_, q.tau_, std::move(edges));
}

Qbaf with_base_scores(const Qbaf& q, const BaseScores& tau_prime) {
  for (const auto& [id, value] : tau_prime) {
    if (!q.has_argument(id)) {
      throw Error(ErrorCode::DomainMismatch,
                  "base scores mention unknown argument '" + id + "'");
    }
    (void)value;
  }
  std::vector<double> tau(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    auto it = tau_prime.find(q.ids_[i]);
    if (it == tau_prime.end()) {
      throw Error(ErrorCode::DomainMismatch,
                  "base scores missing argument '" + q.ids_[i] + "'");
    }
    const double v = it->second;
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream os;
      os << "base score " << v << " for argument '" << q.ids_[i]
         << "' is outside [0,1]";
      throw Error(ErrorCode::BadBaseScore, os.str());
    }
    tau[i] = v;
  }
  return Qbaf(q.ids_, std::move(tau), q.edges_);
}

}  // namespace qbafx
