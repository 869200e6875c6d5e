#include "qbafx/attribution.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <utility>

namespace qbafx {

namespace {

// ---------------------------------------------------------------------------
// Deterministic counter-based randomness (SplitMix64). Every (seed, kind,
// target, draw) tuple owns an independent stream, which makes sampled
// estimates reproducible and independent of evaluation order or parallelism.
// ---------------------------------------------------------------------------

std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

std::uint64_t stream_key(std::uint64_t seed, TargetKind kind,
                         std::size_t target_index, std::size_t draw) {
  std::uint64_t k = mix64(seed + 0x9e3779b97f4a7c15ULL);
  k = mix64(k ^ (kind == TargetKind::Argument ? 1ULL : 2ULL));
  k = mix64(k ^ (static_cast<std::uint64_t>(target_index) + 1));
  k = mix64(k ^ (static_cast<std::uint64_t>(draw) + 1));
  return k;
}

// Uniform draw from [0, bound) via the multiply-shift reduction; bias is
// negligible for the tiny bounds used here and the result is identical on
// every platform with 128-bit arithmetic.
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(splitmix_next(state)) * bound) >> 64);
}

// ---------------------------------------------------------------------------
// Player sets and coalition evaluation
// ---------------------------------------------------------------------------

// The players of the attribution game: all arguments except the topic, or
// all edges, in canonical (natural) order.
struct PlayerSet {
  TargetKind kind;
  std::vector<ArgumentId> args;
  std::vector<EdgeKey> edges;

  std::size_t size() const {
    return kind == TargetKind::Argument ? args.size() : edges.size();
  }
  AttributionTarget target(std::size_t i) const {
    return kind == TargetKind::Argument
               ? AttributionTarget::for_argument(args[i])
               : AttributionTarget::for_edge(edges[i]);
  }
};

PlayerSet make_players(const Qbaf& q, const ArgumentId& topic,
                       TargetKind kind) {
  PlayerSet players;
  players.kind = kind;
  if (kind == TargetKind::Argument) {
    for (const ArgumentId& id : q.arguments()) {
      if (id != topic) players.args.push_back(id);
    }
  } else {
    for (const Edge& e : q.edges()) players.edges.push_back(e.key());
  }
  return players;
}

std::size_t player_index(const PlayerSet& players,
                         const AttributionTarget& target,
                         const ArgumentId& topic, const Qbaf& q) {
  if (target.kind != players.kind) {
    throw Error(ErrorCode::TargetMismatch,
                "target kind does not match the requested player set");
  }
  if (target.kind == TargetKind::Argument) {
    if (target.argument == topic) {
      throw Error(ErrorCode::TopicEqualsTarget,
                  "cannot attribute the topic '" + topic + "' to itself");
    }
    q.index_of(target.argument);  // UnknownArgument
    auto it = std::find(players.args.begin(), players.args.end(),
                        target.argument);
    return static_cast<std::size_t>(it - players.args.begin());
  }
  q.edge(target.edge.first, target.edge.second);  // UnknownEdge
  auto it = std::find(players.edges.begin(), players.edges.end(), target.edge);
  return static_cast<std::size_t>(it - players.edges.begin());
}

// Memoizing coalition evaluator. Coalition values are pure functions of the
// coalition, so the cache never changes a result — it only avoids recomputing
// one. Coalitions are bitmasks over the player set; player counts above 64
// fall back to uncached evaluation.
class CoalitionEvaluator {
 public:
  CoalitionEvaluator(const Qbaf& q, const SolverConfig& cfg, ArgumentId topic,
                     const PlayerSet& players)
      : q_(q), cfg_(cfg), topic_(std::move(topic)), players_(players) {}

  double value(std::uint64_t mask) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(mask);
      if (it != memo_.end()) return it->second;
    }
    const double v = compute(mask);
    {
      std::lock_guard<std::mutex> lock(mu_);
      memo_.emplace(mask, v);
    }
    return v;
  }

  double compute(std::uint64_t mask) const {
    if (players_.kind == TargetKind::Argument) {
      std::set<ArgumentId> coalition;
      for (std::size_t b = 0; b < players_.size(); ++b) {
        if (mask & (1ULL << b)) coalition.insert(players_.args[b]);
      }
      return coalition_value_arguments(q_, cfg_, topic_, coalition);
    }
    std::set<EdgeKey> coalition;
    for (std::size_t b = 0; b < players_.size(); ++b) {
      if (mask & (1ULL << b)) coalition.insert(players_.edges[b]);
    }
    return coalition_value_edges(q_, cfg_, topic_, coalition);
  }

  // Uncached path for player sets too large for 64-bit masks.
  double compute(const std::vector<bool>& member) const {
    if (players_.kind == TargetKind::Argument) {
      std::set<ArgumentId> coalition;
      for (std::size_t b = 0; b < players_.size(); ++b) {
        if (member[b]) coalition.insert(players_.args[b]);
      }
      return coalition_value_arguments(q_, cfg_, topic_, coalition);
    }
    std::set<EdgeKey> coalition;
    for (std::size_t b = 0; b < players_.size(); ++b) {
      if (member[b]) coalition.insert(players_.edges[b]);
    }
    return coalition_value_edges(q_, cfg_, topic_, coalition);
  }

 private:
  const Qbaf& q_;
  const SolverConfig& cfg_;
  ArgumentId topic_;
  const PlayerSet& players_;
  std::mutex mu_;
  std::unordered_map<std::uint64_t, double> memo_;
};

// Shapley weights w[k] = k! (n-1-k)! / n! for coalition size k. Exact in
// long double for n <= 20 (20! < 2^62).
std::vector<long double> shapley_weights(std::size_t n) {
  std::vector<long double> fact(n + 1, 1.0L);
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<long double> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = fact[k] * fact[n - 1 - k] / fact[n];
  }
  return w;
}

// Dense table of all 2^n coalition values, filled once and shared by every
// target's exact sum.
class ExactTable {
 public:
  ExactTable(const CoalitionEvaluator& ev, std::size_t n, int cap)
      : n_(n), weights_(shapley_weights(n == 0 ? 1 : n)) {
    if (n > static_cast<std::size_t>(cap)) {
      std::ostringstream os;
      os << "exact Shapley enumeration over " << n
         << " players exceeds the cap of " << cap
         << "; use sampling instead";
      throw Error(ErrorCode::TooLargeForExact, os.str());
    }
    values_.resize(1ULL << n_);
    for (std::uint64_t mask = 0; mask < values_.size(); ++mask) {
      values_[mask] = ev.compute(mask);
    }
  }

  double shapley(std::size_t t) const {
    const std::uint64_t bit = 1ULL << t;
    long double acc = 0.0L;
    for (std::uint64_t mask = 0; mask < values_.size(); ++mask) {
      if (mask & bit) continue;
      acc += weights_[static_cast<std::size_t>(std::popcount(mask))] *
             (static_cast<long double>(values_[mask | bit]) - values_[mask]);
    }
    return static_cast<double>(acc);
  }

 private:
  std::size_t n_;
  std::vector<long double> weights_;
  std::vector<double> values_;
};

// One target's permutation-sampling estimate. Draw d shuffles the full
// player list with its own stream; the marginal is v(predecessors ∪ {t}) -
// v(predecessors). Marginals accumulate in draw order regardless of any
// caller-side parallelism, so the estimate is bit-stable.
double sampled_one(CoalitionEvaluator& ev, const PlayerSet& players,
                   std::size_t t, int samples, std::uint64_t seed) {
  const std::size_t n = players.size();
  std::vector<std::size_t> perm(n);
  long double acc = 0.0L;
  const bool mask_path = n <= 64;
  for (int draw = 0; draw < samples; ++draw) {
    std::uint64_t state = stream_key(seed, players.kind, t,
                                     static_cast<std::size_t>(draw));
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n - 1; i > 0; --i) {
      const std::uint64_t j = bounded(state, i + 1);
      std::swap(perm[i], perm[j]);
    }
    if (mask_path) {
      std::uint64_t mask = 0;
      for (std::size_t k = 0; perm[k] != t; ++k) mask |= 1ULL << perm[k];
      acc += static_cast<long double>(ev.value(mask | (1ULL << t))) -
             ev.value(mask);
    } else {
      std::vector<bool> member(n, false);
      for (std::size_t k = 0; perm[k] != t; ++k) member[perm[k]] = true;
      const double without = ev.compute(member);
      member[t] = true;
      acc += static_cast<long double>(ev.compute(member)) - without;
    }
  }
  return static_cast<double>(acc / samples);
}

// Minimal deterministic-output parallel map: results land in caller-indexed
// slots, so scheduling cannot affect the outcome.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const int workers = static_cast<int>(
      std::min(static_cast<std::size_t>(effective_threads()), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string coalition_label(const std::set<ArgumentId>& coalition) {
  std::string out = "{";
  for (const ArgumentId& id : coalition) {
    if (out.size() > 1) out += ",";
    out += id;
  }
  return out + "}";
}

std::string coalition_label(const std::set<EdgeKey>& coalition) {
  std::string out = "{";
  for (const EdgeKey& k : coalition) {
    if (out.size() > 1) out += ",";
    out += "(" + k.first + "," + k.second + ")";
  }
  return out + "}";
}

[[noreturn]] void relabel_nonconvergence(const NonConvergenceError& e,
                                         const std::string& context) {
  // what() is already prefixed with the code name; strip it so the
  // re-thrown error is prefixed exactly once.
  std::string msg = e.what();
  const std::string prefix =
      std::string(to_string(ErrorCode::NonConvergence)) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  throw NonConvergenceError(context + ": " + msg, e.last_delta(),
                            e.last_iterate());
}

double solve_topic(const Qbaf& q, const SolverConfig& cfg,
                   const ArgumentId& topic, const std::string& context) {
  try {
    return solve_qe(q, cfg).strengths.at(topic);
  } catch (const NonConvergenceError& e) {
    relabel_nonconvergence(e, context);
  }
}

}  // namespace

const char* to_string(TargetKind kind) {
  return kind == TargetKind::Argument ? "argument" : "edge";
}

const char* to_string(AttributionMethod method) {
  switch (method) {
    case AttributionMethod::Removal: return "removal";
    case AttributionMethod::ShapleyExact: return "shapley-exact";
    case AttributionMethod::ShapleySampled: return "shapley-sampled";
  }
  return "unknown";
}

AttributionTarget AttributionTarget::for_argument(ArgumentId id) {
  AttributionTarget t;
  t.kind = TargetKind::Argument;
  t.argument = std::move(id);
  return t;
}

AttributionTarget AttributionTarget::for_edge(EdgeKey key) {
  AttributionTarget t;
  t.kind = TargetKind::Edge;
  t.edge = std::move(key);
  return t;
}

std::string AttributionTarget::display() const {
  if (kind == TargetKind::Argument) return argument;
  return "(" + edge.first + "," + edge.second + ")";
}

bool target_less(const AttributionTarget& a, const AttributionTarget& b) {
  if (a.kind != b.kind) return a.kind == TargetKind::Argument;
  if (a.kind == TargetKind::Argument) {
    return natural_less(a.argument, b.argument);
  }
  return natural_edge_less(a.edge, b.edge);
}

int effective_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QBAFX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<int>(std::min<long>(v, 256));
    }
    // 0, negative or malformed: auto
  }
  return static_cast<int>(hw);
}

double removal_aae(const Qbaf& q, const SolverConfig& cfg,
                   const ArgumentId& topic, const ArgumentId& beta) {
  q.index_of(topic);
  q.index_of(beta);
  if (topic == beta) {
    throw Error(ErrorCode::TopicEqualsTarget,
                "cannot attribute the topic '" + topic + "' to itself");
  }
  const double full = solve_topic(q, cfg, topic, "full framework");
  std::set<ArgumentId> keep(q.arguments().begin(), q.arguments().end());
  keep.erase(beta);
  const double restricted = solve_topic(restrict_arguments(q, keep), cfg,
                                        topic, "removal of argument '" +
                                                   beta + "'");
  return full - restricted;
}

double removal_rae(const Qbaf& q, const SolverConfig& cfg,
                   const ArgumentId& topic, const EdgeKey& r) {
  q.index_of(topic);
  q.edge(r.first, r.second);  // UnknownEdge
  const double full = solve_topic(q, cfg, topic, "full framework");
  std::set<EdgeKey> keep;
  for (const Edge& e : q.edges()) {
    if (e.key() != r) keep.insert(e.key());
  }
  const double restricted =
      solve_topic(restrict_edges(q, keep), cfg, topic,
                  "removal of edge (" + r.first + "," + r.second + ")");
  return full - restricted;
}

double coalition_value_arguments(const Qbaf& q, const SolverConfig& cfg,
                                 const ArgumentId& topic,
                                 const std::set<ArgumentId>& coalition) {
  q.index_of(topic);
  for (const ArgumentId& id : coalition) {
    q.index_of(id);
    if (id == topic) {
      throw Error(ErrorCode::TopicEqualsTarget,
                  "coalition must not contain the topic '" + topic + "'");
    }
  }
  std::set<ArgumentId> keep = coalition;
  keep.insert(topic);
  try {
    return solve_qe(restrict_arguments(q, keep), cfg).strengths.at(topic);
  } catch (const NonConvergenceError& e) {
    relabel_nonconvergence(e, "argument coalition " +
                                  coalition_label(coalition));
  }
}

double coalition_value_edges(const Qbaf& q, const SolverConfig& cfg,
                             const ArgumentId& topic,
                             const std::set<EdgeKey>& coalition) {
  q.index_of(topic);
  try {
    return solve_qe(restrict_edges(q, coalition), cfg).strengths.at(topic);
  } catch (const NonConvergenceError& e) {
    relabel_nonconvergence(e, "edge coalition " + coalition_label(coalition));
  }
}

double shapley_exact(const Qbaf& q, const SolverConfig& cfg,
                     const ArgumentId& topic, const AttributionTarget& target,
                     int enumeration_cap) {
  q.index_of(topic);
  PlayerSet players = make_players(q, topic, target.kind);
  const std::size_t t = player_index(players, target, topic, q);
  CoalitionEvaluator ev(q, cfg, topic, players);
  const ExactTable table(ev, players.size(), enumeration_cap);
  return table.shapley(t);
}

double shapley_sampled(const Qbaf& q, const SolverConfig& cfg,
                       const ArgumentId& topic,
                       const AttributionTarget& target, int samples,
                       std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("sample count must be at least 1");
  }
  q.index_of(topic);
  PlayerSet players = make_players(q, topic, target.kind);
  const std::size_t t = player_index(players, target, topic, q);
  CoalitionEvaluator ev(q, cfg, topic, players);
  return sampled_one(ev, players, t, samples, seed);
}

AttributionReport explain_all(const Qbaf& q, const SolverConfig& cfg,
                              const ArgumentId& topic, TargetKind kind,
                              AttributionMethod method, int samples,
                              std::uint64_t seed, int enumeration_cap) {
  q.index_of(topic);
  const PlayerSet players = make_players(q, topic, kind);
  const std::size_t n = players.size();
  std::vector<double> values(n, 0.0);

  switch (method) {
    case AttributionMethod::Removal: {
      const double full = solve_topic(q, cfg, topic, "full framework");
      for (std::size_t i = 0; i < n; ++i) {
        if (kind == TargetKind::Argument) {
          std::set<ArgumentId> keep(q.arguments().begin(),
                                    q.arguments().end());
          keep.erase(players.args[i]);
          values[i] = full - solve_topic(restrict_arguments(q, keep), cfg,
                                         topic,
                                         "removal of argument '" +
                                             players.args[i] + "'");
        } else {
          std::set<EdgeKey> keep(players.edges.begin(), players.edges.end());
          keep.erase(players.edges[i]);
          values[i] = full - solve_topic(restrict_edges(q, keep), cfg, topic,
                                         "removal of edge (" +
                                             players.edges[i].first + "," +
                                             players.edges[i].second + ")");
        }
      }
      break;
    }
    case AttributionMethod::ShapleyExact: {
      CoalitionEvaluator ev(q, cfg, topic, players);
      const ExactTable table(ev, n, enumeration_cap);
      for (std::size_t i = 0; i < n; ++i) values[i] = table.shapley(i);
      break;
    }
    case AttributionMethod::ShapleySampled: {
      if (samples < 1) {
        throw std::invalid_argument("sample count must be at least 1");
      }
      CoalitionEvaluator ev(q, cfg, topic, players);
      parallel_for(n, [&](std::size_t i) {
        values[i] = sampled_one(ev, players, i, samples, seed);
      });
      break;
    }
  }

  AttributionReport report;
  report.topic = topic;
  report.method = method;
  report.kind = kind;
  report.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.entries.push_back({players.target(i), values[i]});
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const AttributionEntry& a, const AttributionEntry& b) {
              if (a.value != b.value) return a.value > b.value;
              return target_less(a.target, b.target);
            });
  if (method == AttributionMethod::ShapleySampled) {
    report.sample_size = samples;
    report.seed = seed;
  }
  return report;
}

}  // namespace qbafx
