#include "ejq/channels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ejq {

namespace {

void check_algebra(const ChannelMap& phi, const Element& x) {
  if (phi.algebra != x.algebra()) throw std::invalid_argument("algebra descriptor mismatch");
}

Element transpose_element(const Element& x) {
  const AlgebraDescriptor& alg = x.algebra();
  if (alg.kind != AlgebraKind::Herm || alg.herm_ring == Ring::H)
    throw std::invalid_argument(
        "transpose is a positive map only on real and complex hermitian algebras");
  const int n = alg.matrix_n();
  std::vector<Coefficient> out(n * n, Coefficient::zero(alg.matrix_ring()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = x.at(j, i);
  return matrix_unchecked(alg, std::move(out));
}

}  // namespace

Element apply_channel(const ChannelMap& phi, const Element& x) {
  check_algebra(phi, x);
  switch (phi.kind) {
    case ChannelMap::Kind::Automorphism:
      return phi.automorphism.apply(x);
    case ChannelMap::Kind::Replacer:
      return scale(trace(x), phi.replacer_state);
    case ChannelMap::Kind::Pinching: {
      Element acc = Element::zero(phi.algebra);
      for (const Element& p : phi.pinching_frame) acc = add(acc, quadratic_representation(p, x));
      return acc;
    }
    case ChannelMap::Kind::Compression: {
      const Element main = quadratic_representation(phi.compression_idempotent, x);
      const double lost = trace(x) - inner(phi.compression_idempotent, x);
      return add(main, scale(lost, phi.compression_completion));
    }
    case ChannelMap::Kind::Transpose:
      return transpose_element(x);
    case ChannelMap::Kind::Transfer: {
      const double w = inner(phi.transfer_test, x);
      return add(scale(w, phi.transfer_out1), scale(trace(x) - w, phi.transfer_out0));
    }
    case ChannelMap::Kind::Mixture: {
      Element acc = Element::zero(phi.algebra);
      for (size_t k = 0; k < phi.children.size(); ++k)
        acc = add(acc, scale(phi.mixture_weights[k], apply_channel(*phi.children[k], x)));
      return acc;
    }
    case ChannelMap::Kind::Composition: {
      Element y = x;
      for (const auto& child : phi.children) y = apply_channel(*child, y);
      return y;
    }
  }
  throw std::logic_error("unreachable");
}

ChannelMap identity_channel(const AlgebraDescriptor& alg) {
  ChannelMap c;
  c.algebra = alg;
  c.kind = ChannelMap::Kind::Automorphism;
  c.automorphism = identity_automorphism(alg);
  return c;
}

ChannelMap make_automorphism_channel(JordanAutomorphism a) {
  ChannelMap c;
  c.algebra = a.algebra;
  c.kind = ChannelMap::Kind::Automorphism;
  c.automorphism = std::move(a);
  return c;
}

ChannelMap make_replacer(const StateElement& sigma0) {
  ChannelMap c;
  c.algebra = sigma0.algebra();
  c.kind = ChannelMap::Kind::Replacer;
  c.replacer_state = sigma0.element();
  return c;
}

ChannelMap make_pinching(std::vector<Element> frame) {
  if (frame.empty()) throw std::invalid_argument("pinching needs a frame");
  ChannelMap c;
  c.algebra = frame[0].algebra();
  c.kind = ChannelMap::Kind::Pinching;
  c.pinching_frame = std::move(frame);
  return c;
}

ChannelMap make_compression_completed(const Element& idempotent, const StateElement& completion) {
  ChannelMap c;
  c.algebra = idempotent.algebra();
  c.kind = ChannelMap::Kind::Compression;
  c.compression_idempotent = idempotent;
  c.compression_completion = completion.element();
  return c;
}

ChannelMap make_transpose(const AlgebraDescriptor& alg) {
  if (alg.kind != AlgebraKind::Herm || alg.herm_ring == Ring::H)
    throw std::invalid_argument(
        "transpose is a positive map only on real and complex hermitian algebras");
  ChannelMap c;
  c.algebra = alg;
  c.kind = ChannelMap::Kind::Transpose;
  return c;
}

ChannelMap make_mixture(std::vector<double> weights, std::vector<ChannelMap> parts) {
  if (weights.size() != parts.size() || parts.empty())
    throw std::invalid_argument("mixture weights and parts mismatch");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("mixture weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mixture weights must sum to 1");
  ChannelMap c;
  c.algebra = parts[0].algebra;
  c.kind = ChannelMap::Kind::Mixture;
  c.mixture_weights = std::move(weights);
  for (auto& p : parts) {
    if (p.algebra != c.algebra) throw std::invalid_argument("algebra descriptor mismatch");
    c.children.push_back(std::make_shared<const ChannelMap>(std::move(p)));
  }
  return c;
}

ChannelMap make_composition(std::vector<ChannelMap> parts) {
  if (parts.empty()) throw std::invalid_argument("composition needs parts");
  ChannelMap c;
  c.algebra = parts[0].algebra;
  c.kind = ChannelMap::Kind::Composition;
  for (auto& p : parts) {
    if (p.algebra != c.algebra) throw std::invalid_argument("algebra descriptor mismatch");
    c.children.push_back(std::make_shared<const ChannelMap>(std::move(p)));
  }
  return c;
}

ChannelMap contraction(const StateElement& center, double factor) {
  if (!(factor >= 0.0 && factor <= 1.0)) throw std::invalid_argument("contraction factor must lie in [0,1]");
  return make_mixture({factor, 1.0 - factor},
                      {identity_channel(center.algebra()), make_replacer(center)});
}

namespace {

StateElement random_state_floor(const AlgebraDescriptor& alg, std::mt19937_64& rng) {
  return random_state(alg, rng);
}

// Random idempotent: a proper sub-sum of a random frame.
Element random_idempotent(const AlgebraDescriptor& alg, std::mt19937_64& rng) {
  std::vector<Element> frame = random_frame(alg, rng);
  std::uniform_int_distribution<int> count(1, static_cast<int>(frame.size()) - 1);
  const int k = count(rng);
  Element acc = Element::zero(alg);
  for (int i = 0; i < k; ++i) acc = add(acc, frame[i]);
  return acc;
}

ChannelMap random_leaf(const AlgebraDescriptor& alg, std::mt19937_64& rng,
                       const ChannelOptions& opt) {
  const bool transpose_ok = opt.allow_transpose && alg.kind == AlgebraKind::Herm &&
                            (alg.herm_ring == Ring::R || alg.herm_ring == Ring::C);
  std::uniform_int_distribution<int> pick(0, transpose_ok ? 4 : 3);
  const int r = alg.rank();
  switch (pick(rng)) {
    case 0:
      return make_automorphism_channel(random_automorphism(alg, rng));
    case 1: {
      if (opt.unital_only) {
        Spectrum uniform;
        uniform.values.assign(r, 1.0 / r);
        return make_replacer(random_state(alg, rng, uniform));
      }
      return make_replacer(random_state_floor(alg, rng));
    }
    case 2:
      return make_pinching(random_frame(alg, rng));
    case 3: {
      const Element p = random_idempotent(alg, rng);
      const double missing = static_cast<double>(r) - trace(p);
      if (opt.unital_only) {
        const Element rest = sub(Element::unit(alg), p);
        return make_compression_completed(p, make_state(scale(1.0 / missing, rest)));
      }
      return make_compression_completed(p, random_state_floor(alg, rng));
    }
    default:
      return make_transpose(alg);
  }
}

}  // namespace

ChannelMap random_ptp_channel(const AlgebraDescriptor& alg, std::mt19937_64& rng, int depth,
                              const ChannelOptions& options) {
  if (depth < 1) throw std::invalid_argument("channel depth must be >= 1");
  if (depth == 1) return random_leaf(alg, rng, options);
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: {
      std::vector<ChannelMap> parts;
      parts.push_back(random_ptp_channel(alg, rng, depth - 1, options));
      parts.push_back(random_ptp_channel(alg, rng, depth - 1, options));
      return make_composition(std::move(parts));
    }
    case 1: {
      std::uniform_int_distribution<int> nparts(2, 3);
      const int k = nparts(rng);
      std::vector<ChannelMap> parts;
      for (int i = 0; i < k; ++i) parts.push_back(random_ptp_channel(alg, rng, depth - 1, options));
      return make_mixture(random_simplex(k, rng), std::move(parts));
    }
    default:
      return random_leaf(alg, rng, options);
  }
}

ChannelMap random_ptp_channel(const AlgebraDescriptor& alg, std::uint64_t seed, int depth,
                              const ChannelOptions& options) {
  std::mt19937_64 rng(seed);
  return random_ptp_channel(alg, rng, depth, options);
}

DpiResult dpi_trial(const ChannelMap& phi, const StateElement& rho, const StateElement& sigma) {
  const DivergenceValue before = divergence(rho.element(), sigma.element());
  const Element fr = apply_channel(phi, rho.element());
  const Element fs = apply_channel(phi, sigma.element());
  const DivergenceValue after = divergence(fr, fs);
  DpiResult out;
  if (before.infinite && after.infinite) {
    out.outcome = DpiOutcome::NonBinding;
    return out;
  }
  if (before.infinite) {
    out.outcome = DpiOutcome::InfiniteSlack;
    out.slack = std::numeric_limits<double>::infinity();
    return out;
  }
  out.outcome = DpiOutcome::Finite;
  out.slack = after.infinite ? -std::numeric_limits<double>::infinity() : before.value - after.value;
  return out;
}

namespace {

void check_orthogonal_pure(const StateElement& sigma, const StateElement& rho) {
  const Spectrum ss = spectrum_of(sigma.element());
  const Spectrum rs = spectrum_of(rho.element());
  if (std::abs(ss.values.front() - 1.0) > 1e-8 || std::abs(rs.values.front() - 1.0) > 1e-8)
    throw std::invalid_argument("sufficiency pair requires pure states");
  if (std::abs(inner(sigma.element(), rho.element())) > 1e-8)
    throw std::invalid_argument("sufficiency pair requires orthogonal states");
}

ChannelMap make_transfer(const StateElement& test, const StateElement& out1, const StateElement& out0) {
  ChannelMap c;
  c.algebra = test.algebra();
  c.kind = ChannelMap::Kind::Transfer;
  c.transfer_test = test.element();
  c.transfer_out1 = out1.element();
  c.transfer_out0 = out0.element();
  return c;
}

}  // namespace

SufficiencyPair sufficiency_pair(const StateElement& sigma1, const StateElement& rho1,
                                 const StateElement& sigma2, const StateElement& rho2) {
  check_orthogonal_pure(sigma1, rho1);
  check_orthogonal_pure(sigma2, rho2);
  if (sigma1.algebra() != rho1.algebra() || sigma2.algebra() != rho2.algebra())
    throw std::invalid_argument("algebra descriptor mismatch");
  SufficiencyPair pair;
  pair.forward = make_transfer(sigma1, sigma2, rho2);
  pair.recovery = make_transfer(sigma2, sigma1, rho1);
  return pair;
}

}  // namespace ejq
