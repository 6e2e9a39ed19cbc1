#include "ejq/info.hpp"

#include <cmath>
#include <stdexcept>

namespace ejq {

double support_tolerance(const Element& x) {
  const double t = trace(x);
  return 1e-12 * std::max(t, 0.0);
}

double entropy(const Element& x) {
  SpectralDecomposition dec = eigendecompose(x);
  const double ztol = support_tolerance(x);
  double h = 0.0;
  for (size_t i = 0; i < dec.eigenvalues.size(); ++i) {
    const double lam = dec.eigenvalues[i];
    if (lam < -1e-10) throw std::domain_error("entropy of a non-positive element");
    if (lam <= ztol) continue;
    h -= dec.multiplicities[i] * lam * std::log(lam);
  }
  return h;
}

DivergenceValue divergence(const Element& p, const Element& q) {
  if (p.algebra() != q.algebra()) throw std::invalid_argument("algebra descriptor mismatch");
  if (!is_positive(p) || !is_positive(q)) throw std::invalid_argument("divergence requires positive inputs");
  const SpectralDecomposition dp = eigendecompose(p);
  const SpectralDecomposition dq = eigendecompose(q);
  const double ptol = support_tolerance(p);
  const double qtol = support_tolerance(q);

  double p_ln_p = 0.0;
  for (size_t i = 0; i < dp.eigenvalues.size(); ++i) {
    const double lam = dp.eigenvalues[i];
    if (lam <= ptol) continue;
    p_ln_p += dp.multiplicities[i] * lam * std::log(lam);
  }
  double p_ln_q = 0.0;
  for (size_t k = 0; k < dq.eigenvalues.size(); ++k) {
    const double mu = dq.eigenvalues[k];
    const double w = inner(p, dq.idempotents[k]);  // tr[P o E_k] >= 0
    if (mu <= qtol) {
      if (w > 1e-9) return DivergenceValue::inf();
      continue;
    }
    p_ln_q += w * std::log(mu);
  }
  double d = p_ln_p - p_ln_q + trace(q) - trace(p);
  if (d < 0.0 && d >= -1e-9) d = 0.0;
  return DivergenceValue::finite(d);
}

double divergence_locality_value(double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in (0,1)");
  return std::log(1.0 / (1.0 - t));
}

DivergenceValue renyi_sandwiched(const StateElement& rho, const StateElement& sigma, double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) throw std::invalid_argument("alpha must be positive and != 1");
  const AlgebraDescriptor& alg = rho.algebra();
  if (alg != sigma.algebra()) throw std::invalid_argument("algebra descriptor mismatch");
  if (alg.kind == AlgebraKind::Albert)
    throw std::invalid_argument("unsupported: exceptional algebra");
  if (alg.kind == AlgebraKind::Spin && alg.spin_d > 3)
    throw std::invalid_argument("unsupported: spin factor with d > 3");

  const double factor = complex_trace_factor(alg);
  const CMat p = complex_image(rho.element());
  const CMat s = complex_image(sigma.element());
  HermEig es = jacobi_hermitian(s);
  const double ztol = 1e-12;

  if (alpha > 1.0) {
    // support(rho) must sit inside support(sigma)
    double w0 = 0.0;
    for (size_t i = 0; i < es.values.size(); ++i) {
      if (es.values[i] > ztol) continue;
      cxd acc(0.0, 0.0);
      for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b)
          acc += std::conj(es.vectors.at(a, i)) * p.at(a, b) * es.vectors.at(b, i);
      w0 += acc.real();
    }
    if (w0 / factor > 1e-9) return DivergenceValue::inf();
  }

  const double e = (1.0 - alpha) / (2.0 * alpha);
  CMat spow(s.n);
  for (int i = 0; i < s.n; ++i) {
    const double lam = es.values[i];
    const double f = lam > ztol ? std::pow(lam, e) : 0.0;
    for (int a = 0; a < s.n; ++a)
      for (int b = 0; b < s.n; ++b)
        spow.at(a, b) += f * es.vectors.at(a, i) * std::conj(es.vectors.at(b, i));
  }
  CMat mid = mul(mul(spow, p), spow);
  // mid is Hermitian PSD; |mid| = mid.
  HermEig em = jacobi_hermitian(mid);
  double tr_alpha = 0.0;
  for (double lam : em.values) {
    if (lam <= ztol) continue;
    tr_alpha += std::pow(lam, alpha);
  }
  tr_alpha /= factor;
  if (tr_alpha <= 0.0) return DivergenceValue::inf();
  double d = std::log(tr_alpha) / (alpha - 1.0);
  if (d < 0.0 && d >= -1e-9) d = 0.0;
  return DivergenceValue::finite(d);
}

ScalarFunction neg_x_log_x() {
  ScalarFunction f;
  f.f = [](double x) { return x > 0.0 ? -x * std::log(x) : (x == 0.0 ? 0.0 : std::nan("")); };
  f.d1 = [](double x) { return -std::log(x) - 1.0; };
  f.d2 = [](double x) { return -1.0 / x; };
  return f;
}

ScalarFunction square_function() {
  ScalarFunction f;
  f.f = [](double x) { return x * x; };
  f.d1 = [](double x) { return 2.0 * x; };
  f.d2 = [](double) { return 2.0; };
  return f;
}

double trace_derivative(const Element& a, const Element& b, const ScalarFunction& f) {
  Element fa = apply_function(a, f.d1);
  return inner(fa, b);
}

// sum over Peirce components of the frame of A: the (k,k) block enters with
// weight f''(lambda_k) and squared norm <B, U_{E_k} B>, the (k,l) block with
// the divided difference of f' and squared norm <B, 4 L_{E_k} L_{E_l} B>.
double trace_second_derivative(const Element& a, const Element& b, const ScalarFunction& f) {
  SpectralDecomposition dec = eigendecompose(a);
  const size_t m = dec.eigenvalues.size();
  std::vector<Element> eb;
  eb.reserve(m);
  for (size_t k = 0; k < m; ++k) eb.push_back(jordan_product(dec.idempotents[k], b));
  double total = 0.0;
  for (size_t k = 0; k < m; ++k) {
    const double lk = dec.eigenvalues[k];
    const double akk = f.d2(lk);
    if (!std::isfinite(akk)) throw std::domain_error("eigenvalue outside the domain of f'");
    total += akk * inner(b, quadratic_representation(dec.idempotents[k], b));
    for (size_t l = k + 1; l < m; ++l) {
      const double ll = dec.eigenvalues[l];
      const double akl = (f.d1(lk) - f.d1(ll)) / (lk - ll);
      if (!std::isfinite(akl)) throw std::domain_error("eigenvalue outside the domain of f'");
      total += akl * 4.0 * inner(eb[k], eb[l]);
    }
  }
  return total;
}

}  // namespace ejq
