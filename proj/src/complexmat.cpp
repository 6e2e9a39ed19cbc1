#include "ejq/complexmat.hpp"

#include <cmath>
#include <stdexcept>

namespace ejq {

CMat CMat::identity(int n) {
  CMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMat mul(const CMat& x, const CMat& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
  const int n = x.n;
  CMat out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cxd xik = x.at(i, k);
      if (xik == cxd(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

CMat adjoint(const CMat& x) {
  CMat out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) out.at(i, j) = std::conj(x.at(j, i));
  return out;
}

CMat add(const CMat& x, const CMat& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
  CMat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

CMat scale(cxd s, const CMat& x) {
  CMat out = x;
  for (auto& v : out.a) v *= s;
  return out;
}

cxd trace(const CMat& x) {
  cxd t(0.0, 0.0);
  for (int i = 0; i < x.n; ++i) t += x.at(i, i);
  return t;
}

double frobenius(const CMat& x) {
  double s = 0.0;
  for (const auto& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

double offdiag_frobenius(const CMat& x) {
  double s = 0.0;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j)
      if (i != j) s += std::norm(x.at(i, j));
  return std::sqrt(s);
}

double herm_deviation(const CMat& x) {
  double worst = 0.0;
  for (int i = 0; i < x.n; ++i)
    for (int j = i; j < x.n; ++j)
      worst = std::max(worst, std::abs(x.at(i, j) - std::conj(x.at(j, i))));
  return worst;
}

namespace {

// One rotation J = [[c, s], [-u s, u c]] on the (p,q) plane, u = A_pq/|A_pq|.
// Phase absorption makes the 2x2 block real, then the classic rotation zeroes it.
void rotate(CMat& a, CMat& v, int p, int q) {
  const cxd apq = a.at(p, q);
  const double r = std::abs(apq);
  if (r < 1e-300) {
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
    return;
  }
  const cxd u = std::conj(apq) / r;  // diag(1,u) conjugation makes the block real
  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.n;
  // A <- A J
  for (int i = 0; i < n; ++i) {
    const cxd aip = a.at(i, p), aiq = a.at(i, q);
    a.at(i, p) = c * aip - u * s * aiq;
    a.at(i, q) = s * aip + u * c * aiq;
  }
  // A <- J^dagger A
  for (int j = 0; j < n; ++j) {
    const cxd apj = a.at(p, j), aqj = a.at(q, j);
    a.at(p, j) = c * apj - std::conj(u) * s * aqj;
    a.at(q, j) = s * apj + std::conj(u) * c * aqj;
  }
  a.at(p, q) = 0.0;
  a.at(q, p) = 0.0;
  a.at(p, p) = a.at(p, p).real();
  a.at(q, q) = a.at(q, q).real();
  // V <- V J
  for (int i = 0; i < n; ++i) {
    const cxd vip = v.at(i, p), viq = v.at(i, q);
    v.at(i, p) = c * vip - u * s * viq;
    v.at(i, q) = s * vip + u * c * viq;
  }
}

}  // namespace

HermEig jacobi_hermitian(CMat a, SweepOrder order, double tol, int max_sweeps) {
  const int n = a.n;
  if (herm_deviation(a) > 1e-9 * std::max(1.0, frobenius(a)))
    throw std::invalid_argument("jacobi: input is not Hermitian");
  CMat v = CMat::identity(n);
  const double scale = std::max(1.0, frobenius(a));
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_frobenius(a) <= tol * scale) {
      converged = true;
      break;
    }
    if (order == SweepOrder::RowCyclic) {
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    } else {
      for (int q = 1; q < n; ++q)
        for (int p = 0; p < q; ++p) rotate(a, v, p, q);
    }
  }
  if (!converged && offdiag_frobenius(a) > tol * scale)
    throw std::runtime_error("jacobi eigensolver did not converge");
  HermEig out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = a.at(i, i).real();
  out.vectors = std::move(v);
  return out;
}

}  // namespace ejq
