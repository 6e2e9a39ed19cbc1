#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ejq/channels.hpp"
#include "ejq/regret.hpp"

using namespace ejq;

namespace {

const AlgebraDescriptor kSpecial[] = {
    AlgebraDescriptor::spin(3),
    AlgebraDescriptor::herm(Ring::R, 3),
    AlgebraDescriptor::herm(Ring::C, 3),
    AlgebraDescriptor::herm(Ring::H, 2),
};

void check_ptp(const ChannelMap& phi, std::mt19937_64& rng) {
  const AlgebraDescriptor& alg = phi.algebra;
  for (int probe = 0; probe < 4; ++probe) {
    const Element x = random_hermitian(alg, rng);
    const Element y = random_hermitian(alg, rng);
    std::uniform_real_distribution<double> co(-2.0, 2.0);
    const double a = co(rng), b = co(rng);
    // linearity
    const Element lhs = apply_channel(phi, add(scale(a, x), scale(b, y)));
    const Element rhs = add(scale(a, apply_channel(phi, x)), scale(b, apply_channel(phi, y)));
    CHECK(dist(lhs, rhs) < 1e-10 * std::max(1.0, norm(lhs)));
    // positivity
    const Element sq = jordan_product(x, x);
    CHECK(min_eigenvalue(apply_channel(phi, sq)) > -1e-8 * std::max(1.0, norm(sq)));
    // trace preservation
    CHECK(trace(apply_channel(phi, x)) == doctest::Approx(trace(x)).epsilon(1e-10));
  }
}

}  // namespace

TEST_CASE("identity and replacer") {
  std::mt19937_64 rng(401);
  for (const auto& alg : kSpecial) {
    const ChannelMap id = identity_channel(alg);
    const Element x = random_hermitian(alg, rng);
    CHECK(dist(apply_channel(id, x), x) < 1e-12);
    const StateElement sigma0 = random_state(alg, rng);
    const ChannelMap rep = make_replacer(sigma0);
    const StateElement rho = random_state(alg, rng);
    CHECK(dist(apply_channel(rep, rho.element()), sigma0.element()) < 1e-12);
  }
}

TEST_CASE("transpose on Herm(C,2): entrywise conjugate, spectrum unchanged") {
  std::mt19937_64 rng(403);
  const auto c2 = AlgebraDescriptor::herm(Ring::C, 2);
  const ChannelMap tr_ch = make_transpose(c2);
  const StateElement rho = random_state(c2, rng);
  const Element t = apply_channel(tr_ch, rho.element());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(t.at(i, j).c[0] == doctest::Approx(rho.element().at(i, j).c[0]));
      CHECK(t.at(i, j).c[1] == doctest::Approx(-rho.element().at(i, j).c[1]));
    }
  const Spectrum a = spectrum_of(rho.element());
  const Spectrum b = spectrum_of(t);
  for (size_t i = 0; i < a.values.size(); ++i)
    CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-10));
  // not available where it fails to be positive
  CHECK_THROWS_AS(make_transpose(AlgebraDescriptor::herm(Ring::H, 2)), std::invalid_argument);
  CHECK_THROWS_AS(make_transpose(AlgebraDescriptor::spin(3)), std::invalid_argument);
}

TEST_CASE("quadratic representation") {
  std::mt19937_64 rng(409);
  for (const auto& alg : kSpecial) {
    const Element x = random_hermitian(alg, rng);
    CHECK(dist(quadratic_representation(Element::unit(alg), x), x) < 1e-12);
  }
  // associative picture: U_a x = a x a
  const auto c3 = AlgebraDescriptor::herm(Ring::C, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const Element a = random_hermitian(c3, rng);
    const Element x = random_hermitian(c3, rng);
    const CMat am = complex_image(a);
    const CMat xm = complex_image(x);
    const CMat axa = mul(mul(am, xm), am);
    double residual = 0.0;
    const Element expected = from_complex_image(c3, axa, &residual);
    CHECK(dist(quadratic_representation(a, x), expected) < 1e-10 * std::max(1.0, norm(expected)));
  }
  // U_p(unit) = p for idempotents
  std::mt19937_64 rng2(419);
  for (const auto& alg : kSpecial) {
    auto frame = random_frame(alg, rng2);
    const Element p = add(frame[0], frame.size() > 2 ? frame[1] : Element::zero(alg));
    CHECK(dist(quadratic_representation(p, Element::unit(alg)), p) < 1e-10);
  }
}

TEST_CASE("random channels are linear positive trace-preserving and deterministic") {
  for (const auto& alg : kSpecial) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const ChannelMap phi = random_ptp_channel(alg, seed, 3);
      const ChannelMap phi2 = random_ptp_channel(alg, seed, 3);
      std::mt19937_64 rng(seed * 7 + 1);
      const Element probe = random_hermitian(alg, rng);
      CHECK(dist(apply_channel(phi, probe), apply_channel(phi2, probe)) == 0.0);
      check_ptp(phi, rng);
    }
  }
  // albert channels too (no transpose there)
  const ChannelMap phi = random_ptp_channel(AlgebraDescriptor::albert(), 5, 3);
  std::mt19937_64 rng(99);
  check_ptp(phi, rng);
}

TEST_CASE("unital channel option preserves the unit") {
  ChannelOptions opt;
  opt.unital_only = true;
  for (const auto& alg : kSpecial) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const ChannelMap phi = random_ptp_channel(alg, seed, 3, opt);
      CHECK(dist(apply_channel(phi, Element::unit(alg)), Element::unit(alg)) < 1e-9);
    }
  }
}

TEST_CASE("dpi trial outcomes") {
  const auto s3 = AlgebraDescriptor::spin(3);
  const StateElement rho = random_state(s3, 21);
  const StateElement sigma = random_state(s3, 22);
  const ChannelMap id = identity_channel(s3);
  const DpiResult same = dpi_trial(id, rho, sigma);
  CHECK(same.outcome == DpiOutcome::Finite);
  CHECK(same.slack == doctest::Approx(0.0).epsilon(1e-10));

  const StateElement center = make_state(scale(0.5, Element::unit(s3)));
  const ChannelMap rep = make_replacer(center);
  const DpiResult reduced = dpi_trial(rep, rho, sigma);
  const DivergenceValue before = divergence(rho.element(), sigma.element());
  REQUIRE_FALSE(before.infinite);
  CHECK(reduced.slack == doctest::Approx(before.value).epsilon(1e-9));

  // infinite input, finite output
  const StateElement eplus = make_state(Element::spin(3, 0.5, {0.5, 0.0, 0.0}));
  const StateElement eminus = make_state(Element::spin(3, 0.5, {-0.5, 0.0, 0.0}));
  CHECK(dpi_trial(rep, eplus, eminus).outcome == DpiOutcome::InfiniteSlack);
  CHECK(dpi_trial(id, eplus, eminus).outcome == DpiOutcome::NonBinding);
}

TEST_CASE("dpi sweep over random channels") {
  for (const auto& alg : kSpecial) {
    std::mt19937_64 rng(1234);
    double min_slack = std::numeric_limits<double>::infinity();
    int binding = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const ChannelMap phi = random_ptp_channel(alg, rng, 3);
      const StateElement rho = random_state(alg, rng);
      const StateElement sigma = random_state(alg, rng);
      const DpiResult r = dpi_trial(phi, rho, sigma);
      if (r.outcome == DpiOutcome::NonBinding) continue;
      ++binding;
      min_slack = std::min(min_slack, r.slack);
    }
    CHECK(binding > 100);
    CHECK(min_slack >= -1e-8);
  }
}

TEST_CASE("semi-monotonicity: unital channels never decrease entropy") {
  ChannelOptions opt;
  opt.unital_only = true;
  for (const auto& alg : kSpecial) {
    std::mt19937_64 rng(4321);
    for (int trial = 0; trial < 40; ++trial) {
      const ChannelMap phi = random_ptp_channel(alg, rng, 3, opt);
      const StateElement rho = random_state(alg, rng);
      const double before = entropy(rho.element());
      const double after = entropy(apply_channel(phi, rho.element()));
      CHECK(after >= before - 1e-9);
      // equivalently the divergence from the maximally mixed state shrinks
      const Element mixed = scale(1.0 / alg.rank(), Element::unit(alg));
      const DivergenceValue da = divergence(apply_channel(phi, rho.element()), mixed);
      const DivergenceValue db = divergence(rho.element(), mixed);
      REQUIRE_FALSE(da.infinite);
      REQUIRE_FALSE(db.infinite);
      CHECK(da.value <= db.value + 1e-9);
    }
  }
}

TEST_CASE("principle of lost opportunities for closed action sets") {
  // actions closed under a o Phi for idempotent channels: both pinchings and
  // replacers satisfy Phi o Phi = Phi, so one composition step closes the set.
  const auto c3 = AlgebraDescriptor::herm(Ring::C, 3);
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 15; ++trial) {
    ChannelMap phi = trial % 2 == 0 ? make_pinching(random_frame(c3, rng))
                                    : make_replacer(random_state(c3, rng));
    // adjoint of the channel in the trace inner product, computed densely
    auto compose_action = [&](const AffineAction& a) {
      // <g, Phi(x)> is linear in x; represent it by applying the adjoint to g.
      // Build by evaluating on a basis of hermitian probes.
      // For pinching (self-adjoint) the adjoint is the channel itself; the
      // replacer adjoint sends g to inner(g, sigma0) * unit.
      if (phi.kind == ChannelMap::Kind::Pinching)
        return AffineAction{apply_channel(phi, a.g), a.offset};
      return AffineAction{scale(inner(a.g, phi.replacer_state), Element::unit(c3)), a.offset};
    };
    std::vector<AffineAction> actions;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int j = 0; j < 4; ++j) actions.push_back({random_hermitian(c3, rng), gauss(rng)});
    const size_t base = actions.size();
    for (size_t j = 0; j < base; ++j) actions.push_back(compose_action(actions[j]));
    for (int t = 0; t < 20; ++t) {
      const StateElement sigma = random_state(c3, rng);
      const double f_before = optimal_value(actions, sigma.element()).first;
      const double f_after = optimal_value(actions, apply_channel(phi, sigma.element())).first;
      CHECK(f_after <= f_before + 1e-9);
    }
  }
}

TEST_CASE("sufficiency pair: reversibility and divergence preservation") {
  std::mt19937_64 rng(521);
  const AlgebraDescriptor algs[] = {AlgebraDescriptor::spin(3), AlgebraDescriptor::herm(Ring::C, 3),
                                    AlgebraDescriptor::albert()};
  for (const auto& alg : algs) {
    for (int trial = 0; trial < 15; ++trial) {
      auto f1 = random_frame(alg, rng);
      auto f2 = random_frame(alg, rng);
      const StateElement sigma1 = make_state(f1[0]);
      const StateElement rho1 = make_state(f1[1]);
      const StateElement sigma2 = make_state(f2[0]);
      const StateElement rho2 = make_state(f2[1]);
      const SufficiencyPair pair = sufficiency_pair(sigma1, rho1, sigma2, rho2);
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double p = unif(rng), q = unif(rng);
      const Element x = add(scale(p, sigma1.element()), scale(1.0 - p, rho1.element()));
      const Element y = add(scale(q, sigma1.element()), scale(1.0 - q, rho1.element()));
      const Element fx = apply_channel(pair.forward, x);
      const Element fy = apply_channel(pair.forward, y);
      CHECK(dist(apply_channel(pair.recovery, fx), x) < 1e-10);
      CHECK(dist(apply_channel(pair.recovery, fy), y) < 1e-10);
      // midpoint maps to midpoint
      const Element m1 = add(scale(0.5, sigma1.element()), scale(0.5, rho1.element()));
      const Element m2 = add(scale(0.5, sigma2.element()), scale(0.5, rho2.element()));
      CHECK(dist(apply_channel(pair.forward, m1), m2) < 1e-10);
      // divergence preserved on the segment
      const DivergenceValue before = divergence(x, y);
      const DivergenceValue after = divergence(fx, fy);
      REQUIRE(before.infinite == after.infinite);
      if (!before.infinite) CHECK(std::abs(before.value - after.value) < 1e-9);
      // composing with a strict contraction strictly decreases it
      if (!before.infinite && before.value > 1e-6) {
        const ChannelMap contr = contraction(make_state(m2), 0.5);
        const DivergenceValue shrunk =
            divergence(apply_channel(contr, fx), apply_channel(contr, fy));
        REQUIRE_FALSE(shrunk.infinite);
        CHECK(shrunk.value < before.value - 1e-9);
      }
    }
  }
  // identity-like pair projects onto the segment and fixes it
  auto fr = random_frame(AlgebraDescriptor::spin(3), rng);
  const StateElement s1 = make_state(fr[0]);
  const StateElement r1 = make_state(fr[1]);
  const SufficiencyPair proj = sufficiency_pair(s1, r1, s1, r1);
  const Element seg = add(scale(0.3, s1.element()), scale(0.7, r1.element()));
  CHECK(dist(apply_channel(proj.forward, seg), seg) < 1e-12);
  // non-orthogonal pairs are rejected
  const StateElement bad = random_state(AlgebraDescriptor::spin(3), 77);
  CHECK_THROWS_AS(sufficiency_pair(s1, bad, s1, r1), std::invalid_argument);
}

TEST_CASE("contraction endpoints and distance halving") {
  const auto s3 = AlgebraDescriptor::spin(3);
  std::mt19937_64 rng(523);
  const StateElement center = random_state(s3, rng);
  const StateElement rho = random_state(s3, rng);
  const ChannelMap full = contraction(center, 1.0);
  CHECK(dist(apply_channel(full, rho.element()), rho.element()) < 1e-12);
  const ChannelMap none = contraction(center, 0.0);
  CHECK(dist(apply_channel(none, rho.element()), center.element()) < 1e-12);
  const ChannelMap half = contraction(center, 0.5);
  CHECK(dist(apply_channel(half, rho.element()), center.element()) ==
        doctest::Approx(0.5 * dist(rho.element(), center.element())).epsilon(1e-12));
  CHECK_THROWS_AS(contraction(center, 1.5), std::invalid_argument);
}

TEST_CASE("squared-euclidean strong monotonicity probe on spin factors") {
  const auto s3 = AlgebraDescriptor::spin(3);
  std::mt19937_64 rng(541);
  int preserved_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // states on a random diameter
    auto frame = random_frame(s3, rng);
    const StateElement sigma1 = make_state(frame[0]);
    const StateElement rho1 = make_state(frame[1]);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double p = 0.1 + 0.8 * unif(rng);
    const double q = std::min(1.0, p + 0.3);
    const Element rho = add(scale(p, sigma1.element()), scale(1.0 - p, rho1.element()));
    const Element sig = add(scale(q, sigma1.element()), scale(1.0 - q, rho1.element()));
    // mix isometries with genuinely contractive channels
    const ChannelMap phi = trial % 2 == 0
                               ? make_automorphism_channel(random_automorphism(s3, rng))
                               : random_ptp_channel(s3, rng, 2);
    const Element frho = apply_channel(phi, rho);
    const Element fsig = apply_channel(phi, sig);
    const double d_before = inner(sub(rho, sig), sub(rho, sig));
    const double d_after = inner(sub(frho, fsig), sub(frho, fsig));
    if (std::abs(d_before - d_after) > 1e-10) continue;
    ++preserved_count;
    const Element s2 = apply_channel(phi, sigma1.element());
    const Element r2 = apply_channel(phi, rho1.element());
    const SufficiencyPair pair =
        sufficiency_pair(make_state(s2), make_state(r2), sigma1, rho1);
    CHECK(dist(apply_channel(pair.forward, frho), rho) < 1e-8);
    CHECK(dist(apply_channel(pair.forward, fsig), sig) < 1e-8);
  }
  CHECK(preserved_count >= 30);  // every automorphism trial preserves distances
}
