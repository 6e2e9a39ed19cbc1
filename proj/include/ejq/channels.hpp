#pragma once

#include <memory>
#include <random>
#include <vector>

#include "ejq/info.hpp"
#include "ejq/rotations.hpp"
#include "ejq/spectral.hpp"

namespace ejq {

// Positive trace-preserving map given as a composition tree over primitives.
// Raw compressions U_p are trace-decreasing, so they only appear inside
// pinchings or completed with a replacer that restores the lost trace.
struct ChannelMap {
  enum class Kind {
    Automorphism,
    Replacer,
    Pinching,
    Compression,  // U_p plus tr[(1-p) o x] * completion state
    Transpose,    // Herm(R)/Herm(C) only
    Transfer,     // x -> <t, x> out1 + (tr x - <t, x>) out0
    Mixture,
    Composition,  // children applied first to last
  };

  AlgebraDescriptor algebra;
  Kind kind = Kind::Automorphism;

  JordanAutomorphism automorphism;
  Element replacer_state;               // Replacer
  std::vector<Element> pinching_frame;  // Pinching
  Element compression_idempotent;       // Compression
  Element compression_completion;
  Element transfer_test;                // Transfer
  Element transfer_out1;
  Element transfer_out0;
  std::vector<double> mixture_weights;
  std::vector<std::shared_ptr<const ChannelMap>> children;
};

Element apply_channel(const ChannelMap& phi, const Element& x);

ChannelMap identity_channel(const AlgebraDescriptor& alg);
ChannelMap make_automorphism_channel(JordanAutomorphism a);
ChannelMap make_replacer(const StateElement& sigma0);
ChannelMap make_pinching(std::vector<Element> frame);
ChannelMap make_compression_completed(const Element& idempotent, const StateElement& completion);
ChannelMap make_transpose(const AlgebraDescriptor& alg);
ChannelMap make_mixture(std::vector<double> weights, std::vector<ChannelMap> parts);
ChannelMap make_composition(std::vector<ChannelMap> parts);
// x -> (1-factor) tr[x] center + factor x.
ChannelMap contraction(const StateElement& center, double factor);

struct ChannelOptions {
  bool unital_only = false;       // forces Phi(unit) = unit
  bool allow_transpose = true;    // Herm(R)/Herm(C) leaves only
};

ChannelMap random_ptp_channel(const AlgebraDescriptor& alg, std::uint64_t seed, int depth,
                              const ChannelOptions& options = {});
ChannelMap random_ptp_channel(const AlgebraDescriptor& alg, std::mt19937_64& rng, int depth,
                              const ChannelOptions& options = {});

enum class DpiOutcome {
  Finite,         // both divergences finite: slack is their difference
  InfiniteSlack,  // input divergence infinite, output finite
  NonBinding,     // both infinite: the inequality is vacuous
};

struct DpiResult {
  DpiOutcome outcome = DpiOutcome::Finite;
  double slack = 0.0;
};

DpiResult dpi_trial(const ChannelMap& phi, const StateElement& rho, const StateElement& sigma);

struct SufficiencyPair {
  ChannelMap forward;
  ChannelMap recovery;
};

// Rank-2 transfer between orthogonal pure pairs: Phi(x) = phi1(x) sigma2 +
// (tr x - phi1(x)) rho2 with phi1(x) = <sigma1, x>, and the analogous
// recovery; reversible on the segment [rho1, sigma1].
SufficiencyPair sufficiency_pair(const StateElement& sigma1, const StateElement& rho1,
                                 const StateElement& sigma2, const StateElement& rho2);

}  // namespace ejq
