#pragma once

#include <functional>

#include "ejq/spectral.hpp"

namespace ejq {

// Divergence result: finite nonnegative value, or Infinite exactly when the
// support condition fails. Never a floating-point infinity in reports.
struct DivergenceValue {
  double value = 0.0;
  bool infinite = false;

  static DivergenceValue finite(double v) { return {v, false}; }
  static DivergenceValue inf() { return {0.0, true}; }
};

// Eigenvalues at or below 1e-12 * trace count as zero for support tests.
double support_tolerance(const Element& x);

// -sum lambda ln lambda over the Jordan spectrum, with 0 ln 0 = 0.
double entropy(const Element& x);

// Cone form D(P,Q) = tr[P o (ln P - ln Q) + Q - P]; Infinite when P has
// weight > 1e-9 on the zero eigenspace of Q.
DivergenceValue divergence(const Element& p, const Element& q);

// ln(1/(1-t)): the predicted divergence D(rho || (1-t) rho + t sigma)
// for any orthogonal pair rho, sigma.
double divergence_locality_value(double t);

// Sandwiched Renyi divergence on the special algebras, computed in the
// associative complex picture. alpha > 0, alpha != 1.
DivergenceValue renyi_sandwiched(const StateElement& rho, const StateElement& sigma, double alpha);

// Scalar function bundle for the trace-derivative formulas.
struct ScalarFunction {
  std::function<double(double)> f;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

ScalarFunction neg_x_log_x();
ScalarFunction square_function();

// d/dt tr f(A + tB) at 0 = tr[f'(A) o B].
double trace_derivative(const Element& a, const Element& b, const ScalarFunction& f);

// d2/dt2 tr f(A + tB) at 0 = sum_{k,l} a_kl tr[(E_k o B) o (E_l o B)] with
// a_kl the divided differences of f'.
double trace_second_derivative(const Element& a, const Element& b, const ScalarFunction& f);

}  // namespace ejq
