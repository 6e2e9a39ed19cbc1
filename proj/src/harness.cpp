#include "ejq/harness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ejq/rotations.hpp"

namespace ejq::harness {

Element random_positive(const AlgebraDescriptor& alg, std::mt19937_64& rng, double floor) {
  const int r = alg.rank();
  std::vector<double> lam = random_simplex(r, rng);
  for (double& x : lam) x = floor / r + (1.0 - floor) * x;
  std::uniform_real_distribution<double> sc(0.5, 2.0);
  const double c = sc(rng);
  auto frame = random_frame(alg, rng);
  Element acc = Element::zero(alg);
  for (int i = 0; i < r; ++i) acc = add(acc, scale(c * lam[i], frame[i]));
  return acc;
}

OrthogonalPair random_orthogonal_pair(const AlgebraDescriptor& alg, std::mt19937_64& rng) {
  auto frame = random_frame(alg, rng);
  const int r = static_cast<int>(frame.size());
  OrthogonalPair out;
  if (r == 2) {
    out.rho = frame[0];
    out.sigma = frame[1];
    return out;
  }
  // split the frame between rho and sigma; rho mixed on a sub-frame half
  // the time
  std::uniform_int_distribution<int> cut(1, r - 1);
  const int k = cut(rng);
  std::bernoulli_distribution mix_rho(0.5);
  if (k >= 2 && mix_rho(rng)) {
    auto w = random_simplex(k, rng);
    out.rho = Element::zero(alg);
    for (int i = 0; i < k; ++i) out.rho = add(out.rho, scale(w[i], frame[i]));
  } else {
    out.rho = frame[0];
  }
  auto w = random_simplex(r - k, rng);
  out.sigma = Element::zero(alg);
  for (int i = k; i < r; ++i) out.sigma = add(out.sigma, scale(w[i - k], frame[i]));
  return out;
}

DpiStats dpi_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long trials, int depth) {
  DpiStats stats;
  stats.min_slack = std::numeric_limits<double>::infinity();
  const bool transpose_capable =
      alg.kind == AlgebraKind::Herm && (alg.herm_ring == Ring::R || alg.herm_ring == Ring::C);
  for (long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    ChannelMap phi = random_ptp_channel(alg, rng, depth);
    if (transpose_capable && t % 3 == 0)
      phi = make_composition({std::move(phi), make_transpose(alg)});
    const StateElement rho = random_state(alg, rng);
    const StateElement sigma = random_state(alg, rng);
    const DpiResult r = dpi_trial(phi, rho, sigma);
    ++stats.trials;
    if (r.outcome == DpiOutcome::NonBinding) {
      ++stats.nonbinding;
      continue;
    }
    if (r.outcome == DpiOutcome::InfiniteSlack) {
      ++stats.infinite_slack;
      continue;
    }
    ++stats.binding;
    if (r.slack < stats.min_slack) {
      stats.min_slack = r.slack;
      stats.worst_trial = t;
    }
  }
  if (stats.binding == 0) stats.min_slack = 0.0;
  return stats;
}

ConcavityStats concavity_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long pairs) {
  ConcavityStats stats;
  stats.min_slack = std::numeric_limits<double>::infinity();
  for (long t = 0; t < pairs; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    const Element a = random_positive(alg, rng, 0.01);
    const Element b = random_positive(alg, rng, 0.01);
    const double ha = entropy(a);
    const double hb = entropy(b);
    for (int i = 1; i <= 9; ++i) {
      const double tt = 0.1 * i;
      const double hm = entropy(add(scale(tt, a), scale(1.0 - tt, b)));
      const double slack = hm - tt * ha - (1.0 - tt) * hb;
      if (slack < stats.min_slack) {
        stats.min_slack = slack;
        stats.worst_trial = t;
      }
    }
    ++stats.pairs;
  }
  return stats;
}

DerivativeStats derivative_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long trials) {
  DerivativeStats stats;
  const ScalarFunction f = neg_x_log_x();
  auto trf = [&](const Element& m) {
    double s = 0.0;
    for (double lam : spectrum_of(m).values) s += f.f(lam);
    return s;
  };
  for (long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    const Element a = random_positive(alg, rng, 0.35);
    Element b = random_hermitian(alg, rng);
    b = scale(1.0 / norm(b), b);

    const double d1 = trace_derivative(a, b, f);
    const double h1 = 1e-5;
    const double fd1 = (trf(add(a, scale(h1, b))) - trf(add(a, scale(-h1, b)))) / (2.0 * h1);
    const double rel1 = std::abs(d1 - fd1) / std::max(1.0, std::abs(d1));

    const double d2 = trace_second_derivative(a, b, f);
    // five-point stencil: decomposition noise ~1e-13 in tr f forces h well
    // above sqrt(noise), and the h^4 truncation term stays negligible
    const double h2 = 1e-3;
    const double f0 = trf(a);
    const double fp = trf(add(a, scale(h2, b)));
    const double fm = trf(add(a, scale(-h2, b)));
    const double fp2 = trf(add(a, scale(2.0 * h2, b)));
    const double fm2 = trf(add(a, scale(-2.0 * h2, b)));
    const double fd2 = (-fp2 + 16.0 * fp - 30.0 * f0 + 16.0 * fm - fm2) / (12.0 * h2 * h2);
    const double rel2 = std::abs(d2 - fd2) / std::max(1.0, std::abs(d2));

    if (std::max(rel1 / 1e-7, rel2 / 1e-5) >
        std::max(stats.worst_first / 1e-7, stats.worst_second / 1e-5))
      stats.worst_trial = t;
    stats.worst_first = std::max(stats.worst_first, rel1);
    stats.worst_second = std::max(stats.worst_second, rel2);
    ++stats.trials;
  }
  return stats;
}

LocalityStats locality_sweep(const AlgebraDescriptor& alg, std::uint64_t seed, long pairs) {
  LocalityStats stats;
  for (long t = 0; t < pairs; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    const OrthogonalPair pair = random_orthogonal_pair(alg, rng);
    for (int i = 1; i <= 9; ++i) {
      const double tt = 0.1 * i;
      const Element q = add(scale(1.0 - tt, pair.rho), scale(tt, pair.sigma));
      const DivergenceValue d = divergence(pair.rho, q);
      const double dev = d.infinite ? std::numeric_limits<double>::infinity()
                                    : std::abs(d.value - divergence_locality_value(tt));
      if (dev > stats.worst_deviation) {
        stats.worst_deviation = dev;
        stats.worst_trial = t;
      }
    }
    ++stats.pairs;
  }
  return stats;
}

RegretGame random_regret_game(std::mt19937_64& rng, int max_states, int max_actions,
                              int min_states, int min_actions) {
  const AlgebraDescriptor algs[] = {AlgebraDescriptor::spin(2), AlgebraDescriptor::spin(3),
                                    AlgebraDescriptor::herm(Ring::C, 2)};
  std::uniform_int_distribution<int> pick_alg(0, 2);
  const AlgebraDescriptor alg = algs[pick_alg(rng)];
  std::uniform_int_distribution<int> pick_n(min_states, max_states), pick_m(min_actions, max_actions);
  const int n = pick_n(rng), m = pick_m(rng);
  std::vector<StateElement> states;
  for (int i = 0; i < n; ++i) states.push_back(random_state(alg, rng));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<AffineAction> actions;
  for (int j = 0; j < m; ++j) actions.push_back({random_hermitian(alg, rng), gauss(rng)});
  return make_game(std::move(states), std::move(actions));
}

double grid_minimax_value(const std::vector<std::vector<double>>& payoff, int steps) {
  const size_t n = payoff.size(), m = payoff[0].size();
  if (m > 3) throw std::invalid_argument("grid oracle supports at most 3 actions");
  double best = std::numeric_limits<double>::infinity();
  auto eval = [&](double w0, double w1, double w2) {
    double worst = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
      double v = payoff[i][0] * w0;
      if (m > 1) v += payoff[i][1] * w1;
      if (m > 2) v += payoff[i][2] * w2;
      worst = std::max(worst, v);
    }
    best = std::min(best, worst);
  };
  if (m == 1) {
    eval(1.0, 0.0, 0.0);
  } else if (m == 2) {
    for (int i = 0; i <= steps; ++i) {
      const double w0 = static_cast<double>(i) / steps;
      eval(w0, 1.0 - w0, 0.0);
    }
  } else {
    const double inv = 1.0 / steps;
    for (int i = 0; i <= steps; ++i) {
      const double w0 = i * inv;
      for (int j = 0; j <= steps - i; ++j) {
        const double w1 = j * inv;
        eval(w0, w1, 1.0 - w0 - w1);
      }
    }
  }
  return best;
}

MinimaxDualityStats minimax_duality_sweep(std::uint64_t seed, long games, double eps,
                                          long oracle_limit) {
  MinimaxDualityStats stats;
  for (long t = 0; t < games; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    // the first few games are pinned to 3x3 so the grid oracle always runs
    const bool oracle_game = t < oracle_limit;
    const RegretGame g =
        oracle_game ? random_regret_game(rng, 3, 3, 3, 3) : random_regret_game(rng);
    const MinimaxResult res = minimax_regret(g, eps);
    if (res.gap > stats.worst_gap) {
      stats.worst_gap = res.gap;
      stats.worst_trial = t;
    }
    ++stats.games;
    if (oracle_game && g.states.size() == 3 && g.actions.size() == 3) {
      const double oracle = grid_minimax_value(g.payoff, 10000);
      const double dev = std::abs(res.value - oracle);
      stats.worst_oracle_deviation = std::max(stats.worst_oracle_deviation, dev);
      ++stats.oracle_games;
    }
  }
  return stats;
}

SufficiencyStats sufficiency_sweep(const AlgebraDescriptor& alg, std::uint64_t seed,
                                   long instances) {
  SufficiencyStats stats;
  for (long t = 0; t < instances; ++t) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
    auto f1 = random_frame(alg, rng);
    auto f2 = random_frame(alg, rng);
    const SufficiencyPair pair = sufficiency_pair(make_state(f1[0]), make_state(f1[1]),
                                                  make_state(f2[0]), make_state(f2[1]));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double p = unif(rng);
    const double q = unif(rng);
    const Element x = add(scale(p, f1[0]), scale(1.0 - p, f1[1]));
    const Element y = add(scale(q, f1[0]), scale(1.0 - q, f1[1]));
    const Element fx = apply_channel(pair.forward, x);
    const Element fy = apply_channel(pair.forward, y);
    const double rec = std::max(dist(apply_channel(pair.recovery, fx), x),
                                dist(apply_channel(pair.recovery, fy), y));
    const DivergenceValue before = divergence(x, y);
    const DivergenceValue after = divergence(fx, fy);
    double div_dev = 0.0;
    if (before.infinite != after.infinite)
      div_dev = std::numeric_limits<double>::infinity();
    else if (!before.infinite)
      div_dev = std::abs(before.value - after.value);
    if (std::max(rec, div_dev) > std::max(stats.worst_recovery, stats.worst_divergence))
      stats.worst_trial = t;
    stats.worst_recovery = std::max(stats.worst_recovery, rec);
    stats.worst_divergence = std::max(stats.worst_divergence, div_dev);
    ++stats.instances;
  }
  return stats;
}

std::vector<AlgebraDescriptor> standard_algebras() {
  return {AlgebraDescriptor::spin(3), AlgebraDescriptor::herm(Ring::R, 3),
          AlgebraDescriptor::herm(Ring::C, 3), AlgebraDescriptor::herm(Ring::H, 2),
          AlgebraDescriptor::albert()};
}

std::vector<AlgebraDescriptor> special_algebras() {
  return {AlgebraDescriptor::spin(3), AlgebraDescriptor::herm(Ring::R, 3),
          AlgebraDescriptor::herm(Ring::C, 3), AlgebraDescriptor::herm(Ring::H, 2)};
}

AlgebraDescriptor algebra_from_name(const std::string& name) {
  if (name == "albert") return AlgebraDescriptor::albert();
  if (name.rfind("spin(", 0) == 0 && name.back() == ')')
    return AlgebraDescriptor::spin(std::stoi(name.substr(5, name.size() - 6)));
  if (name.rfind("herm(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(5, name.size() - 6);
    const auto comma = inner.find(',');
    if (comma != std::string::npos) {
      const Ring r = ring_from_name(inner.substr(0, comma));
      return AlgebraDescriptor::herm(r, std::stoi(inner.substr(comma + 1)));
    }
  }
  throw std::invalid_argument("unknown algebra name: " + name +
                              " (expected spin(d), herm(R|C|H,n) or albert)");
}

}  // namespace ejq::harness
