#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ejq/channels.hpp"
#include "ejq/info.hpp"
#include "ejq/regret.hpp"

namespace ejq::harness {

// Positive cone element with spectrum bounded away from zero, scaled by a
// random factor in [1/2, 2].
Element random_positive(const AlgebraDescriptor& alg, std::mt19937_64& rng, double floor = 0.2);

// rho and sigma orthogonal states built in one random frame; rho may be mixed
// when the rank allows it.
struct OrthogonalPair {
  Element rho;
  Element sigma;
};
OrthogonalPair random_orthogonal_pair(const AlgebraDescriptor& alg, std::mt19937_64& rng);

struct DpiStats {
  long trials = 0;
  long binding = 0;
  long nonbinding = 0;
  long infinite_slack = 0;
  double min_slack = 0.0;
  long worst_trial = -1;
  bool pass(double tol = 1e-8) const { return binding == 0 || min_slack >= -tol; }
};
// Seeded sweep with per-trial derived seeds (seed + index). On complex
// hermitian algebras every third channel is composed with the transpose so
// positive-but-not-completely-positive maps are exercised.
DpiStats dpi_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long trials, int depth = 3);

struct ConcavityStats {
  long pairs = 0;
  double min_slack = 0.0;  // min over pairs and t of H(mix) - t H(A) - (1-t) H(B)
  long worst_trial = -1;
  bool pass(double tol = 1e-9) const { return min_slack >= -tol; }
};
ConcavityStats concavity_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long pairs);

struct DerivativeStats {
  long trials = 0;
  double worst_first = 0.0;   // relative error against central differences
  double worst_second = 0.0;
  long worst_trial = -1;
  bool pass(double tol1 = 1e-7, double tol2 = 1e-5) const {
    return worst_first <= tol1 && worst_second <= tol2;
  }
};
DerivativeStats derivative_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long trials);

struct LocalityStats {
  long pairs = 0;
  double worst_deviation = 0.0;  // |D(rho || (1-t) rho + t sigma) - ln 1/(1-t)|
  long worst_trial = -1;
  bool pass(double tol = 1e-8) const { return worst_deviation <= tol; }
};
LocalityStats locality_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long pairs);

struct MinimaxDualityStats {
  long games = 0;
  double worst_gap = 0.0;
  long oracle_games = 0;
  double worst_oracle_deviation = 0.0;
  long worst_trial = -1;
  bool pass(double tol = 1e-4) const {
    return worst_gap <= tol && worst_oracle_deviation <= 3.0 * tol;
  }
};
// Random regret games with n, m <= 8; 3x3 games are cross-checked against an
// exhaustive 1e-4-step grid over mixed actions (up to oracle_limit of them).
MinimaxDualityStats minimax_duality_sweep(std::uint64_t seed, long games, double eps = 1e-4,
                                          long oracle_limit = 3);
RegretGame random_regret_game(std::mt19937_64& rng, int max_states = 8, int max_actions = 8,
                              int min_states = 1, int min_actions = 1);
double grid_minimax_value(const std::vector<std::vector<double>>& payoff, int steps);

struct SufficiencyStats {
  long instances = 0;
  double worst_recovery = 0.0;    // distance after recovery
  double worst_divergence = 0.0;  // divergence change through the transfer
  long worst_trial = -1;
  bool pass(double rec_tol = 1e-10, double div_tol = 1e-9) const {
    return worst_recovery <= rec_tol && worst_divergence <= div_tol;
  }
};
SufficiencyStats sufficiency_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long instances);

// Named algebra families used by the check subcommands.
std::vector<AlgebraDescriptor> standard_algebras();      // all five families
std::vector<AlgebraDescriptor> special_algebras();       // DPI-asserted families
AlgebraDescriptor algebra_from_name(const std::string& name);

}  // namespace ejq::harness
