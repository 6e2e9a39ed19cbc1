#pragma once

#include <complex>
#include <vector>

namespace ejq {

using cxd = std::complex<double>;

// Dense complex matrix, row major. Just enough linear algebra for the
// eigensolver and the associative (sandwiched) computations.
struct CMat {
  int n = 0;
  std::vector<cxd> a;

  CMat() = default;
  explicit CMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, cxd(0.0, 0.0)) {}
  cxd& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const cxd& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  static CMat identity(int n);
};

CMat mul(const CMat& x, const CMat& y);
CMat adjoint(const CMat& x);
CMat add(const CMat& x, const CMat& y);
CMat scale(cxd s, const CMat& x);
cxd trace(const CMat& x);
double frobenius(const CMat& x);
double offdiag_frobenius(const CMat& x);
double herm_deviation(const CMat& x);

enum class SweepOrder { RowCyclic, ColCyclic };

struct HermEig {
  std::vector<double> values;  // unsorted, values[i] pairs with column i of vectors
  CMat vectors;
};

// Cyclic Jacobi for complex Hermitian matrices. Off-diagonal Frobenius norm
// target tol * max(1, ||A||_F); throws after max_sweeps sweeps.
HermEig jacobi_hermitian(CMat a, SweepOrder order = SweepOrder::RowCyclic, double tol = 1e-13,
                         int max_sweeps = 64);

}  // namespace ejq
