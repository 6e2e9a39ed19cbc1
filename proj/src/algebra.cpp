#include "ejq/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace ejq {

namespace {

void check_same(const Element& x, const Element& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("algebra descriptor mismatch");
}

void check_finite(const Element& e) {
  if (e.algebra().kind == AlgebraKind::Spin) {
    if (!std::isfinite(e.spin_s())) throw std::invalid_argument("non-finite element data");
    for (double v : e.spin_v())
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite element data");
  } else {
    for (const auto& c : e.entries())
      if (!c.finite()) throw std::invalid_argument("non-finite element data");
  }
}

// Plain division-ring matrix product.
std::vector<Coefficient> mat_mul(const AlgebraDescriptor& alg, const std::vector<Coefficient>& a,
                                 const std::vector<Coefficient>& b) {
  const int n = alg.matrix_n();
  const Ring r = alg.matrix_ring();
  std::vector<Coefficient> out(n * n, Coefficient::zero(r));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Coefficient& aik = a[i * n + k];
      for (int j = 0; j < n; ++j) out[i * n + j] = add(out[i * n + j], mul(aik, b[k * n + j]));
    }
  return out;
}

}  // namespace

AlgebraDescriptor AlgebraDescriptor::spin(int d) {
  if (d < 1) throw std::invalid_argument("spin factor requires d >= 1");
  AlgebraDescriptor a;
  a.kind = AlgebraKind::Spin;
  a.spin_d = d;
  return a;
}

AlgebraDescriptor AlgebraDescriptor::herm(Ring r, int n) {
  if (n < 1) throw std::invalid_argument("hermitian algebra requires n >= 1");
  if (r == Ring::O) throw std::invalid_argument("octonionic hermitian algebras other than Albert are not simple");
  AlgebraDescriptor a;
  a.kind = AlgebraKind::Herm;
  a.herm_ring = r;
  a.herm_n = n;
  return a;
}

AlgebraDescriptor AlgebraDescriptor::albert() {
  AlgebraDescriptor a;
  a.kind = AlgebraKind::Albert;
  return a;
}

int AlgebraDescriptor::rank() const {
  switch (kind) {
    case AlgebraKind::Spin: return 2;
    case AlgebraKind::Herm: return herm_n;
    case AlgebraKind::Albert: return 3;
  }
  return 0;
}

std::string AlgebraDescriptor::name() const {
  switch (kind) {
    case AlgebraKind::Spin: return "spin(" + std::to_string(spin_d) + ")";
    case AlgebraKind::Herm:
      return std::string("herm(") + ring_name(herm_ring) + "," + std::to_string(herm_n) + ")";
    case AlgebraKind::Albert: return "albert";
  }
  return "?";
}

bool AlgebraDescriptor::operator==(const AlgebraDescriptor& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case AlgebraKind::Spin: return spin_d == o.spin_d;
    case AlgebraKind::Herm: return herm_ring == o.herm_ring && herm_n == o.herm_n;
    case AlgebraKind::Albert: return true;
  }
  return false;
}

Element Element::spin(int d, double s, std::vector<double> v) {
  if (static_cast<int>(v.size()) != d) throw std::invalid_argument("spin vector length mismatch");
  Element e;
  e.alg_ = AlgebraDescriptor::spin(d);
  e.spin_s_ = s;
  e.spin_v_ = std::move(v);
  check_finite(e);
  return e;
}

Element Element::matrix(const AlgebraDescriptor& alg, std::vector<Coefficient> entries,
                        double sym_tol) {
  if (!alg.is_matrix()) throw std::invalid_argument("matrix data for a spin factor");
  const int n = alg.matrix_n();
  const Ring r = alg.matrix_ring();
  if (static_cast<int>(entries.size()) != n * n) throw std::invalid_argument("matrix size mismatch");
  for (const auto& c : entries)
    if (c.ring != r) throw std::invalid_argument("ring mismatch in matrix entries");
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double dev = dist(entries[i * n + j], conj(entries[j * n + i]));
      if (dev > sym_tol) throw std::invalid_argument("matrix is not conjugate-symmetric");
    }
  }
  // Symmetrize so downstream decompositions see exactly Hermitian data.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Coefficient m = scale(0.5, add(entries[i * n + j], conj(entries[j * n + i])));
      entries[i * n + j] = m;
      entries[j * n + i] = conj(m);
    }
    Coefficient d = Coefficient::real(r, entries[i * n + i].re());
    entries[i * n + i] = d;
  }
  Element e;
  e.alg_ = alg;
  e.mat_ = std::move(entries);
  check_finite(e);
  return e;
}

Element matrix_unchecked(const AlgebraDescriptor& alg, std::vector<Coefficient> entries) {
  Element e;
  e.alg_ = alg;
  e.mat_ = std::move(entries);
  return e;
}

Element Element::unit(const AlgebraDescriptor& alg) {
  if (alg.kind == AlgebraKind::Spin) return Element::spin(alg.spin_d, 1.0, std::vector<double>(alg.spin_d, 0.0));
  const int n = alg.matrix_n();
  std::vector<Coefficient> m(n * n, Coefficient::zero(alg.matrix_ring()));
  for (int i = 0; i < n; ++i) m[i * n + i] = Coefficient::one(alg.matrix_ring());
  return matrix_unchecked(alg, std::move(m));
}

Element Element::zero(const AlgebraDescriptor& alg) {
  if (alg.kind == AlgebraKind::Spin) return Element::spin(alg.spin_d, 0.0, std::vector<double>(alg.spin_d, 0.0));
  const int n = alg.matrix_n();
  return matrix_unchecked(alg, std::vector<Coefficient>(n * n, Coefficient::zero(alg.matrix_ring())));
}

Element Element::diagonal(const AlgebraDescriptor& alg, const std::vector<double>& diag) {
  if (!alg.is_matrix()) throw std::invalid_argument("diagonal element requires a matrix algebra");
  const int n = alg.matrix_n();
  if (static_cast<int>(diag.size()) != n) throw std::invalid_argument("diagonal length mismatch");
  std::vector<Coefficient> m(n * n, Coefficient::zero(alg.matrix_ring()));
  for (int i = 0; i < n; ++i) m[i * n + i] = Coefficient::real(alg.matrix_ring(), diag[i]);
  return matrix_unchecked(alg, std::move(m));
}

Element jordan_product(const Element& x, const Element& y) {
  check_same(x, y);
  const AlgebraDescriptor& alg = x.algebra();
  if (alg.kind == AlgebraKind::Spin) {
    const int d = alg.spin_d;
    double dot = 0.0;
    for (int i = 0; i < d; ++i) dot += x.spin_v_[i] * y.spin_v_[i];
    std::vector<double> v(d);
    for (int i = 0; i < d; ++i) v[i] = x.spin_s_ * y.spin_v_[i] + y.spin_s_ * x.spin_v_[i];
    return Element::spin(d, x.spin_s_ * y.spin_s_ + dot, std::move(v));
  }
  const int n = alg.matrix_n();
  std::vector<Coefficient> xy = mat_mul(alg, x.mat_, y.mat_);
  std::vector<Coefficient> yx = mat_mul(alg, y.mat_, x.mat_);
  std::vector<Coefficient> out(n * n, Coefficient::zero(alg.matrix_ring()));
  for (int i = 0; i < n * n; ++i) out[i] = scale(0.5, add(xy[i], yx[i]));
  // The result is Hermitian analytically; scrub rounding asymmetry.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Coefficient m = scale(0.5, add(out[i * n + j], conj(out[j * n + i])));
      out[i * n + j] = m;
      out[j * n + i] = conj(m);
    }
    out[i * n + i] = Coefficient::real(alg.matrix_ring(), out[i * n + i].re());
  }
  return matrix_unchecked(alg, std::move(out));
}

double trace(const Element& x) {
  if (x.algebra().kind == AlgebraKind::Spin) return 2.0 * x.spin_s();
  const int n = x.algebra().matrix_n();
  double t = 0.0;
  for (int i = 0; i < n; ++i) t += x.at(i, i).re();
  return t;
}

double inner(const Element& x, const Element& y) {
  check_same(x, y);
  if (x.algebra().kind == AlgebraKind::Spin) {
    double dot = 0.0;
    for (size_t i = 0; i < x.spin_v().size(); ++i) dot += x.spin_v()[i] * y.spin_v()[i];
    return 2.0 * (x.spin_s() * y.spin_s() + dot);
  }
  // tr[x o y] = Re tr[xy] = sum_ij <x_ij, y_ij> since y_ji = conj(y_ij).
  double s = 0.0;
  const int dim = ring_dim(x.algebra().matrix_ring());
  for (size_t e = 0; e < x.entries().size(); ++e)
    for (int i = 0; i < dim; ++i) s += x.entries()[e].c[i] * y.entries()[e].c[i];
  return s;
}

Element power(const Element& x, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  Element acc = Element::unit(x.algebra());
  for (int i = 0; i < k; ++i) acc = jordan_product(acc, x);
  return acc;
}

Element linear_combine(const std::vector<std::pair<double, Element>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty linear combination");
  Element acc = scale(terms[0].first, terms[0].second);
  for (size_t i = 1; i < terms.size(); ++i) acc = add(acc, scale(terms[i].first, terms[i].second));
  return acc;
}

Element add(const Element& x, const Element& y) {
  check_same(x, y);
  Element out = x;
  if (x.algebra().kind == AlgebraKind::Spin) {
    out.spin_s_ += y.spin_s_;
    for (size_t i = 0; i < out.spin_v_.size(); ++i) out.spin_v_[i] += y.spin_v_[i];
    return out;
  }
  for (size_t i = 0; i < out.mat_.size(); ++i) out.mat_[i] = ejq::add(out.mat_[i], y.mat_[i]);
  return out;
}

Element sub(const Element& x, const Element& y) { return add(x, scale(-1.0, y)); }

Element scale(double a, const Element& x) {
  Element out = x;
  if (x.algebra().kind == AlgebraKind::Spin) {
    out.spin_s_ *= a;
    for (double& v : out.spin_v_) v *= a;
    return out;
  }
  for (auto& c : out.mat_) c = ejq::scale(a, c);
  return out;
}

double norm(const Element& x) { return std::sqrt(std::max(0.0, inner(x, x))); }

double dist(const Element& x, const Element& y) { return norm(sub(x, y)); }

Element quadratic_representation(const Element& a, const Element& x) {
  const Element ax = jordan_product(a, x);
  const Element aax = jordan_product(a, ax);
  const Element a2 = jordan_product(a, a);
  return sub(scale(2.0, aax), jordan_product(a2, x));
}

Element spin3_to_herm2(const Element& x) {
  if (x.algebra().kind != AlgebraKind::Spin || x.algebra().spin_d != 3)
    throw std::invalid_argument("spin3_to_herm2 requires Spin(3)");
  const double s = x.spin_s();
  const double u1 = x.spin_v()[0], u2 = x.spin_v()[1], u3 = x.spin_v()[2];
  const AlgebraDescriptor h2 = AlgebraDescriptor::herm(Ring::C, 2);
  std::vector<Coefficient> m(4, Coefficient::zero(Ring::C));
  m[0] = Coefficient::real(Ring::C, s + u3);
  m[3] = Coefficient::real(Ring::C, s - u3);
  Coefficient off = Coefficient::zero(Ring::C);
  off.c[0] = u1;
  off.c[1] = -u2;
  m[1] = off;
  m[2] = conj(off);
  return matrix_unchecked(h2, std::move(m));
}

Element herm2_to_spin3(const Element& x) {
  const AlgebraDescriptor h2 = AlgebraDescriptor::herm(Ring::C, 2);
  if (x.algebra() != h2) throw std::invalid_argument("herm2_to_spin3 requires Herm(C,2)");
  const double a = x.at(0, 0).re();
  const double d = x.at(1, 1).re();
  const double u1 = x.at(0, 1).c[0];
  const double u2 = -x.at(0, 1).c[1];
  return Element::spin(3, 0.5 * (a + d), {u1, u2, 0.5 * (a - d)});
}

}  // namespace ejq
