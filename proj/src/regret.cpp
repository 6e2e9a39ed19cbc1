#include "ejq/regret.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ejq {

namespace {

double tie_tolerance(double f) { return 1e-9 * (1.0 + std::abs(f)); }

std::vector<int> optimal_set(const std::vector<AffineAction>& actions, const Element& sigma,
                             double f) {
  const double tol = tie_tolerance(f);
  std::vector<int> out;
  for (size_t j = 0; j < actions.size(); ++j)
    if (actions[j].pay(sigma) >= f - tol) out.push_back(static_cast<int>(j));
  return out;
}

}  // namespace

PriorVector make_prior(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("prior weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("prior weights must sum to 1");
  return PriorVector{std::move(weights)};
}

std::pair<double, int> optimal_value(const std::vector<AffineAction>& actions, const Element& sigma) {
  if (actions.empty()) throw std::invalid_argument("empty action list");
  double best = actions[0].pay(sigma);
  int arg = 0;
  for (size_t j = 1; j < actions.size(); ++j) {
    const double v = actions[j].pay(sigma);
    if (v > best) {
      best = v;
      arg = static_cast<int>(j);
    }
  }
  return {best, arg};
}

RegretGame make_game(std::vector<StateElement> states, std::vector<AffineAction> actions) {
  if (states.empty()) throw std::invalid_argument("game needs at least one state");
  if (actions.empty()) throw std::invalid_argument("game needs at least one action");
  RegretGame g;
  g.algebra = states[0].algebra();
  for (const auto& s : states)
    if (s.algebra() != g.algebra) throw std::invalid_argument("algebra descriptor mismatch");
  for (const auto& a : actions)
    if (a.g.algebra() != g.algebra) throw std::invalid_argument("algebra descriptor mismatch");
  g.states = std::move(states);
  g.actions = std::move(actions);
  g.payoff.assign(g.states.size(), std::vector<double>(g.actions.size(), 0.0));
  for (size_t i = 0; i < g.states.size(); ++i) {
    const Element& s = g.states[i].element();
    const double f = optimal_value(g.actions, s).first;
    for (size_t j = 0; j < g.actions.size(); ++j) g.payoff[i][j] = f - g.actions[j].pay(s);
  }
  return g;
}

double regret_action(const std::vector<AffineAction>& actions, const Element& sigma,
                     const AffineAction& a) {
  return optimal_value(actions, sigma).first - a.pay(sigma);
}

double regret_action_mixed(const RegretGame& game, const Element& sigma,
                           const std::vector<double>& action_weights) {
  if (action_weights.size() != game.actions.size())
    throw std::invalid_argument("action weight length mismatch");
  double pay = 0.0;
  for (size_t j = 0; j < action_weights.size(); ++j) pay += action_weights[j] * game.actions[j].pay(sigma);
  return optimal_value(game.actions, sigma).first - pay;
}

double regret_state(const RegretGame& game, const Element& rho, const Element& sigma) {
  const double fsigma = optimal_value(game.actions, sigma).first;
  const std::vector<int> opts = optimal_set(game.actions, sigma, fsigma);
  const double frho = optimal_value(game.actions, rho).first;
  double best = std::numeric_limits<double>::infinity();
  for (int j : opts) best = std::min(best, frho - game.actions[j].pay(rho));
  return best;
}

double bregman_divergence(const std::function<double(const Element&)>& f_value,
                          const std::function<Element(const Element&)>& f_gradient,
                          const Element& rho, const Element& sigma) {
  const Element grad = f_gradient(sigma);
  return f_value(rho) - f_value(sigma) - inner(sub(rho, sigma), grad);
}

namespace {

Element prior_barycenter(const PriorVector& prior, const std::vector<StateElement>& rhos) {
  if (prior.weights.size() != rhos.size()) throw std::invalid_argument("prior length mismatch");
  std::vector<std::pair<double, Element>> terms;
  for (size_t i = 0; i < rhos.size(); ++i) terms.emplace_back(prior.weights[i], rhos[i].element());
  return linear_combine(terms);
}

}  // namespace

double bregman_identity_residual(const RegretGame& game, const PriorVector& prior,
                                 const std::vector<StateElement>& rhos, const Element& sigma) {
  const Element bar = prior_barycenter(prior, rhos);
  double lhs = 0.0, mid = 0.0;
  for (size_t i = 0; i < rhos.size(); ++i) {
    lhs += prior.weights[i] * regret_state(game, rhos[i].element(), sigma);
    mid += prior.weights[i] * regret_state(game, rhos[i].element(), bar);
  }
  const double last = regret_state(game, bar, sigma);
  return std::abs(lhs - mid - last);
}

double bregman_identity_residual(const std::function<double(const Element&)>& f_value,
                                 const std::function<Element(const Element&)>& f_gradient,
                                 const PriorVector& prior, const std::vector<StateElement>& rhos,
                                 const Element& sigma) {
  const Element bar = prior_barycenter(prior, rhos);
  double lhs = 0.0, mid = 0.0;
  for (size_t i = 0; i < rhos.size(); ++i) {
    lhs += prior.weights[i] * bregman_divergence(f_value, f_gradient, rhos[i].element(), sigma);
    mid += prior.weights[i] * bregman_divergence(f_value, f_gradient, rhos[i].element(), bar);
  }
  const double last = bregman_divergence(f_value, f_gradient, bar, sigma);
  return std::abs(lhs - mid - last);
}

double compensation_identity_residual(const RegretGame& game, const PriorVector& prior,
                                      const std::vector<StateElement>& rhos) {
  const Element bar = prior_barycenter(prior, rhos);
  const auto [fbar, jbar] = optimal_value(game.actions, bar);
  const AffineAction& abar = game.actions[jbar];
  double lhs = 0.0, meanf = 0.0;
  for (size_t i = 0; i < rhos.size(); ++i) {
    const Element& r = rhos[i].element();
    lhs += prior.weights[i] * regret_action(game.actions, r, abar);
    meanf += prior.weights[i] * optimal_value(game.actions, r).first;
  }
  return std::abs(lhs - (meanf - fbar));
}

namespace {

struct Certificate {
  std::vector<double> x, y;
  double upper = 0.0, lower = 0.0;
  double gap() const { return upper - lower; }
};

Certificate evaluate(const std::vector<std::vector<double>>& m, const std::vector<double>& x,
                     const std::vector<double>& y) {
  const size_t n = m.size(), mm = m[0].size();
  Certificate c;
  c.x = x;
  c.y = y;
  double upper = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (size_t j = 0; j < mm; ++j) row += m[i][j] * y[j];
    upper = std::max(upper, row);
  }
  double lower = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < mm; ++j) {
    double col = 0.0;
    for (size_t i = 0; i < n; ++i) col += m[i][j] * x[i];
    lower = std::min(lower, col);
  }
  c.upper = upper;
  c.lower = lower;
  return c;
}

void softmax_from_logs(std::vector<double>& logs, std::vector<double>& out) {
  const double mx = *std::max_element(logs.begin(), logs.end());
  double total = 0.0;
  for (size_t i = 0; i < logs.size(); ++i) {
    out[i] = std::exp(logs[i] - mx);
    total += out[i];
  }
  for (double& v : out) v /= total;
}

}  // namespace

MinimaxResult solve_matrix_game(const std::vector<std::vector<double>>& m, double eps,
                                long max_iterations) {
  if (m.empty() || m[0].empty()) throw std::invalid_argument("empty payoff matrix");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const size_t n = m.size(), mm = m[0].size();
  for (const auto& row : m)
    if (row.size() != mm) throw std::invalid_argument("ragged payoff matrix");

  double range = 0.0;
  for (const auto& row : m)
    for (double v : row) range = std::max(range, std::abs(v));
  MinimaxResult res;
  if (range == 0.0 || (n == 1 && mm == 1)) {
    res.value = m[0][0];
    res.prior.weights.assign(n, 1.0 / n);
    res.action_weights.assign(mm, 1.0 / mm);
    if (n == 1 && mm == 1) {
      res.prior.weights = {1.0};
      res.action_weights = {1.0};
    }
    const Certificate c = evaluate(m, res.prior.weights, res.action_weights);
    res.value = 0.5 * (c.upper + c.lower);
    res.gap = c.gap();
    return res;
  }

  std::vector<double> lx(n, 0.0), ly(mm, 0.0);
  std::vector<double> x(n, 1.0 / n), y(mm, 1.0 / mm);
  std::vector<double> gx(n, 0.0), gx_prev(n, 0.0), gy(mm, 0.0), gy_prev(mm, 0.0);
  std::vector<double> xavg(n, 0.0), yavg(mm, 0.0);
  std::vector<double> xbuf(n), ybuf(mm);

  long total_iters = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  Certificate best;
  long phase_len = 4096;
  while (total_iters < max_iterations) {
    // Doubling restarts with optimistic gradients; the paired-regret bound
    // gives gap <= (ln n + ln m) / (eta * T) once eta * range <= 1/4.
    const double eta = 0.25 / range;
    std::fill(lx.begin(), lx.end(), 0.0);
    std::fill(ly.begin(), ly.end(), 0.0);
    std::fill(xavg.begin(), xavg.end(), 0.0);
    std::fill(yavg.begin(), yavg.end(), 0.0);
    std::fill(gx_prev.begin(), gx_prev.end(), 0.0);
    std::fill(gy_prev.begin(), gy_prev.end(), 0.0);
    x.assign(n, 1.0 / n);
    y.assign(mm, 1.0 / mm);
    for (long t = 0; t < phase_len && total_iters < max_iterations; ++t, ++total_iters) {
      for (size_t i = 0; i < n; ++i) {
        double g = 0.0;
        for (size_t j = 0; j < mm; ++j) g += m[i][j] * y[j];
        gx[i] = g;
      }
      for (size_t i = 0; i < n; ++i) lx[i] += eta * (2.0 * gx[i] - gx_prev[i]);
      softmax_from_logs(lx, x);
      gx_prev = gx;

      for (size_t j = 0; j < mm; ++j) {
        double g = 0.0;
        for (size_t i = 0; i < n; ++i) g += m[i][j] * x[i];
        gy[j] = g;
      }
      for (size_t j = 0; j < mm; ++j) ly[j] -= eta * (2.0 * gy[j] - gy_prev[j]);
      softmax_from_logs(ly, y);
      gy_prev = gy;

      for (size_t i = 0; i < n; ++i) xavg[i] += x[i];
      for (size_t j = 0; j < mm; ++j) yavg[j] += y[j];

      if ((t & 127) == 127 || t == phase_len - 1) {
        const double inv = 1.0 / static_cast<double>(t + 1);
        for (size_t i = 0; i < n; ++i) xbuf[i] = xavg[i] * inv;
        for (size_t j = 0; j < mm; ++j) ybuf[j] = yavg[j] * inv;
        for (const auto* cand : {&xbuf, &x}) {
          const auto* ycand = cand == &xbuf ? &ybuf : &y;
          Certificate c = evaluate(m, *cand, *ycand);
          if (c.gap() < best_gap) {
            best_gap = c.gap();
            best = std::move(c);
          }
        }
        if (best_gap <= eps) break;
      }
    }
    if (best_gap <= eps) break;
    phase_len *= 2;
  }
  if (best_gap > eps) {
    throw std::runtime_error("matrix game solver did not reach the requested gap; last gap " +
                             std::to_string(best_gap));
  }
  res.value = 0.5 * (best.upper + best.lower);
  res.prior.weights = best.x;
  res.action_weights = best.y;
  res.gap = best_gap;
  res.iterations = total_iters;
  return res;
}

MinimaxResult minimax_regret(const RegretGame& game, double eps, long max_iterations) {
  return solve_matrix_game(game.payoff, eps, max_iterations);
}

double minimax_lower_bound(const RegretGame& game, const PriorVector& prior,
                           const std::vector<double>& opt_action_weights) {
  if (prior.weights.size() != game.states.size()) throw std::invalid_argument("prior length mismatch");
  double inf_a = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < game.actions.size(); ++j) {
    double s = 0.0;
    for (size_t i = 0; i < game.states.size(); ++i) s += prior.weights[i] * game.payoff[i][j];
    inf_a = std::min(inf_a, s);
  }
  std::vector<std::pair<double, Element>> terms;
  for (size_t i = 0; i < game.states.size(); ++i)
    terms.emplace_back(prior.weights[i], game.states[i].element());
  const Element bar = linear_combine(terms);
  return inf_a + regret_action_mixed(game, bar, opt_action_weights);
}

CapacityResult capacity(const std::vector<StateElement>& states, double eps, long max_iterations) {
  if (states.empty()) throw std::invalid_argument("capacity needs at least one state");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const size_t n = states.size();
  std::vector<double> q(n, 1.0 / static_cast<double>(n));
  std::vector<double> d(n, 0.0);
  CapacityResult res;
  for (long it = 0; it < max_iterations; ++it) {
    std::vector<std::pair<double, Element>> terms;
    for (size_t i = 0; i < n; ++i) terms.emplace_back(q[i], states[i].element());
    const Element bar = linear_combine(terms);
    double mean = 0.0, worst = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
      const DivergenceValue dv = divergence(states[i].element(), bar);
      // q_i > 0 keeps supp(sigma_i) inside supp(bar); infinite only for q_i ~ 0
      d[i] = dv.infinite ? 1e300 : dv.value;
      mean += q[i] * d[i];
      worst = std::max(worst, d[i]);
    }
    res.value = mean;
    res.prior.weights = q;
    res.barycenter = bar;
    res.gap = worst - mean;
    res.iterations = it + 1;
    if (res.gap <= eps) return res;
    double z = 0.0;
    for (size_t i = 0; i < n; ++i) {
      q[i] *= std::exp(std::min(d[i] - mean, 60.0));
      z += q[i];
    }
    for (size_t i = 0; i < n; ++i) q[i] /= z;
  }
  throw std::runtime_error("capacity iteration did not converge; last gap " + std::to_string(res.gap));
}

StateElement interval_state(double sigma) {
  return make_state(Element::spin(1, 0.5, {sigma - 0.5}));
}

RegretGame interval_fixture_game() {
  std::vector<StateElement> states = {interval_state(0.0), interval_state(1.0)};
  AffineAction a0{Element::spin(1, 0.0, {-1.0}), 0.0};  // 1 - 2 sigma
  AffineAction a1{Element::spin(1, 0.0, {1.0}), 0.0};   // 2 sigma - 1
  return make_game(std::move(states), {a0, a1});
}

}  // namespace ejq
