#pragma once

#include "qbafx/qbaf.hpp"

namespace qbafx {

/// Stopping rule for the fixed-point iteration. The iteration stops once the
/// sup-norm change between successive iterates is at most `tolerance`, or
/// fails with NonConvergence after `max_iterations` update sweeps.
struct SolverConfig {
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

struct SolveOutcome {
  StrengthMap strengths;
  int iterations_used = 0;
  bool converged = false;
};

/// Energy of `alpha` under strength assignment `s`: the sum of the strengths
/// of alpha's direct supporters minus the sum over its direct attackers.
/// Sums run in natural id order. Errors: UnknownArgument (alpha not in q, or
/// s not defined on all of q's arguments).
double energy(const Qbaf& q, const StrengthMap& s, const ArgumentId& alpha);

/// One-argument quadratic-energy update. For e <= 0 the base score is pulled
/// toward 0, otherwise toward 1, by the factor e^2 / (1 + e^2):
///   e <= 0:  tau - tau * e^2/(1+e^2)
///   e  > 0:  tau + (1 - tau) * e^2/(1+e^2)
/// Total on tau in [0,1]; the result stays in [0,1].
double qe_update(double tau_alpha, double e);

/// Synchronous fixed-point iteration of the quadratic-energy semantics.
/// Starts from the base scores; every sweep computes all energies from the
/// current iterate and applies qe_update to every argument simultaneously.
/// iterations_used counts sweeps, including the one whose change first drops
/// to the tolerance. Throws NonConvergenceError (with the last sup-norm delta
/// and last iterate) when the cap is reached; throws std::invalid_argument on
/// a non-positive tolerance or iteration cap.
SolveOutcome solve_qe(const Qbaf& q, const SolverConfig& cfg = {});

}  // namespace qbafx
