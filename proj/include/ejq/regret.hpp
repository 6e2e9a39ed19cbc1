#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ejq/info.hpp"
#include "ejq/spectral.hpp"

namespace ejq {

// Affine payoff functional <a, x> = inner(g, x) + offset on states.
struct AffineAction {
  Element g;
  double offset = 0.0;

  double pay(const Element& x) const { return inner(g, x) + offset; }
};

struct PriorVector {
  std::vector<double> weights;
};
PriorVector make_prior(std::vector<double> weights);

// Finite family of states and actions with the derived payoff matrix
// payoff[i][j] = D_F(sigma_i, a_j), F(sigma) = max_j <a_j, sigma>.
struct RegretGame {
  AlgebraDescriptor algebra;
  std::vector<StateElement> states;
  std::vector<AffineAction> actions;
  std::vector<std::vector<double>> payoff;
};

RegretGame make_game(std::vector<StateElement> states, std::vector<AffineAction> actions);

// F(sigma) and one maximizing action index (lowest index on ties).
std::pair<double, int> optimal_value(const std::vector<AffineAction>& actions, const Element& sigma);

double regret_action(const std::vector<AffineAction>& actions, const Element& sigma,
                     const AffineAction& a);
double regret_action_mixed(const RegretGame& game, const Element& sigma,
                           const std::vector<double>& action_weights);

// inf over actions optimal for sigma of D_F(rho, a).
double regret_state(const RegretGame& game, const Element& rho, const Element& sigma);

// F(rho) - F(sigma) - <rho - sigma, grad F(sigma)> in the trace inner product.
double bregman_divergence(const std::function<double(const Element&)>& f_value,
                          const std::function<Element(const Element&)>& f_gradient,
                          const Element& rho, const Element& sigma);

// |sum t_i D(rho_i, sigma) - sum t_i D(rho_i, rho_bar) - D(rho_bar, sigma)|,
// with D = regret_state for a game, or the Bregman formula for callables.
double bregman_identity_residual(const RegretGame& game, const PriorVector& prior,
                                 const std::vector<StateElement>& rhos, const Element& sigma);
double bregman_identity_residual(const std::function<double(const Element&)>& f_value,
                                 const std::function<Element(const Element&)>& f_gradient,
                                 const PriorVector& prior, const std::vector<StateElement>& rhos,
                                 const Element& sigma);

// |sum t_i D_F(rho_i, a_bar) - (sum t_i F(rho_i) - F(rho_bar))| for a_bar
// optimal at the barycenter.
double compensation_identity_residual(const RegretGame& game, const PriorVector& prior,
                                      const std::vector<StateElement>& rhos);

struct MinimaxResult {
  double value = 0.0;
  PriorVector prior;                   // adversary certificate
  std::vector<double> action_weights;  // minimizer certificate
  double gap = 0.0;
  long iterations = 0;
};

// Zero-sum matrix game: rows maximize, columns minimize. Self-play with
// optimistic multiplicative weights until the duality gap is <= eps.
MinimaxResult solve_matrix_game(const std::vector<std::vector<double>>& m, double eps,
                                long max_iterations = 1000000);
MinimaxResult minimax_regret(const RegretGame& game, double eps, long max_iterations = 1000000);

// C_F >= inf_a sum t_i D_F(sigma_i, a) + D_F(sigma_bar, a_opt).
double minimax_lower_bound(const RegretGame& game, const PriorVector& prior,
                           const std::vector<double>& opt_action_weights);

struct CapacityResult {
  double value = 0.0;
  PriorVector prior;
  Element barycenter;
  double gap = 0.0;
  long iterations = 0;
};

// Blahut-Arimoto iteration q_j <- q_j exp(D(sigma_j || sigma_bar)) / Z,
// stopped when max_j D_j - sum_j q_j D_j <= eps.
CapacityResult capacity(const std::vector<StateElement>& states, double eps,
                        long max_iterations = 200000);

// The interval [0,1] as Spin(1) with actions 1 - 2 sigma and 2 sigma - 1.
RegretGame interval_fixture_game();
StateElement interval_state(double sigma);

}  // namespace ejq
