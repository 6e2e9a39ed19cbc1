#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ejq/rotations.hpp"
#include "ejq/spectral.hpp"

using namespace ejq;

namespace {

const AlgebraDescriptor kAlgebras[] = {
    AlgebraDescriptor::spin(3),          AlgebraDescriptor::spin(5),
    AlgebraDescriptor::herm(Ring::R, 3), AlgebraDescriptor::herm(Ring::C, 3),
    AlgebraDescriptor::herm(Ring::H, 2), AlgebraDescriptor::albert(),
};

void check_decomposition(const Element& x, const SpectralDecomposition& dec, double tol = 1e-9) {
  const Element unit = Element::unit(x.algebra());
  Element sum = Element::zero(x.algebra());
  int total_mult = 0;
  for (size_t i = 0; i < dec.idempotents.size(); ++i) {
    const Element& e = dec.idempotents[i];
    CHECK(dist(jordan_product(e, e), e) < tol);
    CHECK(trace(e) == doctest::Approx(dec.multiplicities[i]).epsilon(tol));
    for (size_t j = i + 1; j < dec.idempotents.size(); ++j)
      CHECK(norm(jordan_product(e, dec.idempotents[j])) < tol);
    sum = add(sum, e);
    total_mult += dec.multiplicities[i];
  }
  CHECK(total_mult == x.algebra().rank());
  CHECK(dist(sum, unit) < tol);
  CHECK(dist(dec.reconstruct(), x) < tol * std::max(1.0, norm(x)));
  for (size_t i = 0; i + 1 < dec.eigenvalues.size(); ++i)
    CHECK(dec.eigenvalues[i] > dec.eigenvalues[i + 1]);
}

}  // namespace

TEST_CASE("spin eigendecomposition") {
  const Element multiple = Element::spin(3, 1.0, {0.0, 0.0, 0.0});
  auto dec = eigendecompose(multiple);
  CHECK(dec.distinct() == 1);
  CHECK(dec.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(dec.multiplicities[0] == 2);
  CHECK(dist(dec.idempotents[0], Element::unit(multiple.algebra())) < 1e-12);

  const Element st = Element::spin(3, 0.5, {0.5, 0.0, 0.0});
  auto dec2 = eigendecompose(st);
  CHECK(dec2.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(dec2.eigenvalues[1] == doctest::Approx(0.0));
  check_decomposition(st, dec2);
}

TEST_CASE("albert diagonal decomposition") {
  const Element d = Element::diagonal(AlgebraDescriptor::albert(), {3.0, 2.0, 1.0});
  auto dec = eigendecompose(d);
  REQUIRE(dec.distinct() == 3);
  CHECK(dec.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(dec.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(dec.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-10));
  check_decomposition(d, dec);
}

TEST_CASE("random decompositions satisfy the frame invariants") {
  std::mt19937_64 rng(101);
  for (const auto& alg : kAlgebras) {
    for (int t = 0; t < 25; ++t) {
      const Element x = random_hermitian(alg, rng);
      auto dec = eigendecompose(x);
      check_decomposition(x, dec);
    }
  }
}

TEST_CASE("quaternionic eigenvalues pair in the complex embedding") {
  std::mt19937_64 rng(103);
  const auto alg = AlgebraDescriptor::herm(Ring::H, 3);
  for (int t = 0; t < 20; ++t) {
    const Element x = random_hermitian(alg, rng);
    CMat m = complex_image(x);
    auto eig = jacobi_hermitian(m);
    std::sort(eig.values.begin(), eig.values.end());
    for (size_t i = 0; i + 1 < eig.values.size(); i += 2)
      CHECK(std::abs(eig.values[i] - eig.values[i + 1]) < 1e-8);
    auto dec = eigendecompose(x);
    check_decomposition(x, dec);
  }
}

TEST_CASE("apply_function basics") {
  std::mt19937_64 rng(107);
  for (const auto& alg : kAlgebras) {
    const Element x = random_hermitian(alg, rng);
    CHECK(dist(apply_function(x, [](double v) { return v; }), x) < 1e-9 * std::max(1.0, norm(x)));
    CHECK(dist(apply_function(x, [](double v) { return v * v; }), power(x, 2)) <
          1e-8 * std::max(1.0, inner(x, x)));
  }
}

TEST_CASE("exp(ln(rho)) round trip on full-rank states") {
  std::mt19937_64 rng(109);
  for (const auto& alg : kAlgebras) {
    for (int t = 0; t < 10; ++t) {
      const StateElement rho = random_state(alg, rng);
      const Element lg = apply_function(rho.element(), [](double v) { return std::log(v); });
      const Element back = apply_function(lg, [](double v) { return std::exp(v); });
      CHECK(dist(back, rho.element()) < 1e-8);
    }
  }
}

TEST_CASE("ln of a singular element") {
  const Element proj = Element::diagonal(AlgebraDescriptor::herm(Ring::C, 2), {1.0, 0.0});
  CHECK_THROWS_AS(apply_function(proj, [](double v) { return std::log(v); }), std::domain_error);
  // with the guard the zero eigenvalue contributes nothing
  const Element guarded = apply_function(proj, [](double v) { return std::log(v); }, true);
  CHECK(dist(guarded, Element::zero(proj.algebra())) < 1e-12);
}

TEST_CASE("positivity") {
  std::mt19937_64 rng(113);
  for (const auto& alg : kAlgebras) {
    const Element x = random_hermitian(alg, rng);
    CHECK(is_positive(power(x, 2)));
    CHECK(is_positive(Element::unit(alg)));
  }
  CHECK_FALSE(is_positive(Element::spin(3, 1.0, {2.0, 0.0, 0.0})));
}

TEST_CASE("majorization comparisons") {
  auto spec = [](std::vector<double> v) {
    Spectrum s;
    s.values = std::move(v);
    return s;
  };
  CHECK(majorize_compare(spec({0.5, 0.5}), spec({0.25, 0.25, 0.25, 0.25})) ==
        MajorizeResult::Dominates);
  CHECK(majorize_compare(spec({0.5, 0.25, 0.25}), spec({0.5, 0.25, 0.25})) == MajorizeResult::Equal);
  CHECK(majorize_compare(spec({0.5, 0.3, 0.2}), spec({0.6, 0.2, 0.2})) ==
        MajorizeResult::DominatedBy);
  CHECK(majorize_compare(spec({0.6, 0.15, 0.25}), spec({0.5, 0.4, 0.1})) ==
        MajorizeResult::Incomparable);
  CHECK_THROWS_AS(majorize_compare(spec({0.5, 0.5}), spec({0.5})), std::invalid_argument);
}

TEST_CASE("random_state contract") {
  for (const auto& alg : kAlgebras) {
    const StateElement a = random_state(alg, 999);
    const StateElement b = random_state(alg, 999);
    CHECK(dist(a.element(), b.element()) == 0.0);  // bit-for-bit determinism
    CHECK(trace(a.element()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(is_positive(a.element()));

    Spectrum uniform;
    uniform.values.assign(alg.rank(), 1.0 / alg.rank());
    const StateElement mixed = random_state(alg, 5, uniform);
    CHECK(dist(mixed.element(), scale(1.0 / alg.rank(), Element::unit(alg))) < 1e-9);

    Spectrum pure;
    pure.values.assign(alg.rank(), 0.0);
    pure.values[0] = 1.0;
    const StateElement p = random_state(alg, 6, pure);
    auto spectrum = spectrum_of(p.element());
    CHECK(spectrum.values.front() == doctest::Approx(1.0).epsilon(1e-9));
  }
  Spectrum bad;
  bad.values = {0.5, 0.4};
  CHECK_THROWS_AS(random_state(AlgebraDescriptor::spin(3), 1, bad), std::invalid_argument);
}

TEST_CASE("strict spectrality: independent sweep orders agree through f") {
  std::mt19937_64 rng(127);
  for (const auto& alg : kAlgebras) {
    if (alg.kind == AlgebraKind::Spin || alg.kind == AlgebraKind::Albert) continue;
    for (int t = 0; t < 10; ++t) {
      const Element x = random_hermitian(alg, rng);
      const auto spectrum = spectrum_of(x);
      const double median = spectrum.values[spectrum.values.size() / 2];
      const std::function<double(double)> fns[] = {
          [](double v) { return v * v; },
          [](double v) { return std::abs(v); },
          [median](double v) { return v >= median - 1e-6 ? 1.0 : 0.0; },
      };
      for (const auto& f : fns) {
        SpectralDecomposition a = eigendecompose(x, SweepOrder::RowCyclic);
        SpectralDecomposition b = eigendecompose(x, SweepOrder::ColCyclic);
        Element fa = Element::zero(alg);
        for (size_t i = 0; i < a.eigenvalues.size(); ++i)
          fa = add(fa, scale(f(a.eigenvalues[i]), a.idempotents[i]));
        Element fb = Element::zero(alg);
        for (size_t i = 0; i < b.eigenvalues.size(); ++i)
          fb = add(fb, scale(f(b.eigenvalues[i]), b.idempotents[i]));
        CHECK(dist(fa, fb) < 1e-8 * std::max(1.0, inner(x, x)));
      }
    }
  }
}

TEST_CASE("spectrum is invariant under the automorphisms used by random_state") {
  std::mt19937_64 rng(131);
  for (const auto& alg : kAlgebras) {
    for (int t = 0; t < 10; ++t) {
      const Element x = random_hermitian(alg, rng);
      const JordanAutomorphism rot = random_automorphism(alg, rng);
      const Element y = rot.apply(x);
      const Spectrum sx = spectrum_of(x);
      const Spectrum sy = spectrum_of(y);
      REQUIRE(sx.values.size() == sy.values.size());
      for (size_t i = 0; i < sx.values.size(); ++i)
        CHECK(sx.values[i] == doctest::Approx(sy.values[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("albert power traces match newton reconstruction") {
  std::mt19937_64 rng(137);
  const auto alg = AlgebraDescriptor::albert();
  for (int t = 0; t < 20; ++t) {
    const Element x = random_hermitian(alg, rng);
    const Spectrum s = spectrum_of(x);
    for (int k = 1; k <= 3; ++k) {
      double powsum = 0.0;
      for (double lam : s.values) powsum += std::pow(lam, k);
      CHECK(trace(power(x, k)) == doctest::Approx(powsum).epsilon(1e-8));
    }
  }
}

TEST_CASE("uniform mixture of any orthogonal frame is the maximally mixed state") {
  std::mt19937_64 rng(139);
  for (const auto& alg : kAlgebras) {
    const auto frame = random_frame(alg, rng);
    Element mix = Element::zero(alg);
    for (const auto& e : frame) mix = add(mix, scale(1.0 / frame.size(), e));
    CHECK(dist(mix, scale(1.0 / alg.rank(), Element::unit(alg))) < 1e-9);
  }
}
