#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ejq/algebra.hpp"
#include "ejq/complexmat.hpp"

namespace ejq {

// Unique decomposition x = sum_k lambda_k E_k with distinct descending
// eigenvalues and orthogonal idempotents.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;   // distinct, descending
  std::vector<int> multiplicities;   // sum to rank
  std::vector<Element> idempotents;

  Element reconstruct() const;
  int distinct() const { return static_cast<int>(eigenvalues.size()); }
};

// Eigenvalues with multiplicity expanded, descending.
struct Spectrum {
  std::vector<double> values;
  double total() const;
};

// Eigenvalues closer than this (times max(1, ||x||)) are merged into one
// idempotent; Lagrange idempotents blow up for near-degenerate roots.
inline constexpr double kEigenMergeTol = 1e-8;

SpectralDecomposition eigendecompose(const Element& x, SweepOrder order = SweepOrder::RowCyclic);
Spectrum spectrum_of(const Element& x);
Spectrum spectrum_of(const SpectralDecomposition& dec);

// Functional calculus sum f(lambda_k) E_k. With zero_guard, eigenvalues in
// [-1e-10, support tolerance] where f is singular contribute zero (the
// 0 ln 0 = 0 convention); otherwise a singular f value throws.
Element apply_function(const Element& x, const std::function<double(double)>& f,
                       bool zero_guard = false);

double min_eigenvalue(const Element& x);
bool is_positive(const Element& x);

enum class MajorizeResult { Dominates, DominatedBy, Equal, Incomparable };
MajorizeResult majorize_compare(const Spectrum& a, const Spectrum& b, double tol = 1e-9);

// Positive trace-1 element; validated on construction.
class StateElement {
 public:
  const Element& element() const { return e_; }
  const AlgebraDescriptor& algebra() const { return e_.algebra(); }

 private:
  friend StateElement make_state(const Element&);
  explicit StateElement(Element e) : e_(std::move(e)) {}
  Element e_;
};

StateElement make_state(const Element& e);

StateElement random_state(const AlgebraDescriptor& alg, std::uint64_t seed,
                          const std::optional<Spectrum>& spectrum = std::nullopt);
StateElement random_state(const AlgebraDescriptor& alg, std::mt19937_64& rng,
                          const std::optional<Spectrum>& spectrum = std::nullopt);

// Associative complex picture of the special algebras: Herm(R/C,n) -> n x n,
// Herm(H,n) -> 2n x 2n (trace doubled), Spin(d<=3) -> Herm(C,2).
// Throws for the Albert algebra and Spin(d>3).
CMat complex_image(const Element& x);
double complex_trace_factor(const AlgebraDescriptor& alg);
// Reads a matrix in the image of the embedding back into the algebra;
// `residual` (if given) receives the largest deviation from that image.
Element from_complex_image(const AlgebraDescriptor& alg, const CMat& m, double* residual = nullptr);

}  // namespace ejq
