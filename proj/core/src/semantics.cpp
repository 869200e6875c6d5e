#include "qbafx/semantics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qbafx {

namespace {

StrengthMap to_map(const Qbaf& q, const std::vector<double>& values) {
  StrengthMap out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    out.emplace(q.arguments()[i], values[i]);
  }
  return out;
}

void check_config(const SolverConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) {
    throw std::invalid_argument("solver tolerance must be positive");
  }
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("solver iteration cap must be at least 1");
  }
}

}  // namespace

double qe_update(double tau_alpha, double e) {
  const double f = (e * e) / (1.0 + e * e);
  return e <= 0.0 ? tau_alpha - tau_alpha * f
                  : tau_alpha + (1.0 - tau_alpha) * f;
}

double energy(const Qbaf& q, const StrengthMap& s, const ArgumentId& alpha) {
  const std::size_t i = q.index_of(alpha);
  auto strength_of = [&](std::size_t k) {
    auto it = s.find(q.arguments()[k]);
    if (it == s.end()) {
      throw Error(ErrorCode::UnknownArgument,
                  "strength map is not defined on argument '" +
                      q.arguments()[k] + "'");
    }
    return it->second;
  };
  double sup = 0.0;
  for (std::size_t k : q.supporters_of(i)) sup += strength_of(k);
  double att = 0.0;
  for (std::size_t k : q.attackers_of(i)) att += strength_of(k);
  return sup - att;
}

SolveOutcome solve_qe(const Qbaf& q, const SolverConfig& cfg) {
  check_config(cfg);
  const std::size_t n = q.size();
  std::vector<double> cur = q.base_scores();
  std::vector<double> next(n);

  double delta = 0.0;
  for (int sweep = 1; sweep <= cfg.max_iterations; ++sweep) {
    delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sup = 0.0;
      for (std::size_t k : q.supporters_of(i)) sup += cur[k];
      double att = 0.0;
      for (std::size_t k : q.attackers_of(i)) att += cur[k];
      next[i] = qe_update(q.base_scores()[i], sup - att);
      delta = std::max(delta, std::fabs(next[i] - cur[i]));
    }
    cur.swap(next);
    if (delta <= cfg.tolerance) {
      return {to_map(q, cur), sweep, true};
    }
  }

  std::ostringstream os;
  os << "no fixed point within " << cfg.max_iterations
     << " iterations (tolerance " << cfg.tolerance << ", last sup-norm delta "
     << delta << ")";
  throw NonConvergenceError(os.str(), delta, to_map(q, cur));
}

}  // namespace qbafx
