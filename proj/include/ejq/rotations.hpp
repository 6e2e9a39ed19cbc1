#pragma once

#include <random>
#include <vector>

#include "ejq/algebra.hpp"

namespace ejq {

// One elementary Albert rotation: identity outside the 2x2 block (bi,bj),
// where it equals [[c, s u], [-s conj(u), c]] for a unit quaternion u.
// Applied as (U x) U^dagger; every term mixes u with a single octonion entry,
// so the triple products are unambiguous by Artin's theorem.
struct AlbertRotation {
  int bi = 0;
  int bj = 1;
  double c = 1.0;
  double s = 0.0;
  Coefficient u = Coefficient::one(Ring::O);
};

// A concrete Jordan automorphism of one simple algebra: a vector rotation for
// spin factors, a unitary conjugation for the special matrix algebras, and a
// block-rotation sequence plus diagonal permutation for the Albert algebra.
struct JordanAutomorphism {
  AlgebraDescriptor algebra;
  std::vector<double> rotation;          // spin: d x d orthogonal, row major
  std::vector<Coefficient> unitary;      // herm: n x n
  std::vector<AlbertRotation> blocks;    // albert
  std::vector<int> permutation;          // albert: applied after the blocks

  Element apply(const Element& x) const;
};

JordanAutomorphism identity_automorphism(const AlgebraDescriptor& alg);
JordanAutomorphism random_automorphism(const AlgebraDescriptor& alg, std::mt19937_64& rng);

Element apply_albert_rotation(const AlbertRotation& rot, const Element& x);
Element conjugate_by_unitary(const std::vector<Coefficient>& u, const Element& x);
Element permute_diagonal(const std::vector<int>& perm, const Element& x);

std::vector<Coefficient> random_unitary(Ring r, int n, std::mt19937_64& rng);
std::vector<double> random_rotation_matrix(int d, std::mt19937_64& rng);
std::vector<double> random_unit_vector(int d, std::mt19937_64& rng);

// Gaussian Hermitian element, for probes and test inputs.
Element random_hermitian(const AlgebraDescriptor& alg, std::mt19937_64& rng);

// Complete frame of primitive idempotents (rank of them), randomly oriented.
std::vector<Element> random_frame(const AlgebraDescriptor& alg, std::mt19937_64& rng);

std::vector<double> random_simplex(int k, std::mt19937_64& rng);

}  // namespace ejq
