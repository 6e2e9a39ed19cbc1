#include "ejq/rotations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ejq {

namespace {

std::vector<Coefficient> raw_mat_mul(Ring r, int n, const std::vector<Coefficient>& a,
                                     const std::vector<Coefficient>& b) {
  std::vector<Coefficient> out(n * n, Coefficient::zero(r));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        out[i * n + j] = add(out[i * n + j], mul(a[i * n + k], b[k * n + j]));
  return out;
}

std::vector<Coefficient> raw_adjoint(Ring r, int n, const std::vector<Coefficient>& a) {
  std::vector<Coefficient> out(n * n, Coefficient::zero(r));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = conj(a[j * n + i]);
  return out;
}

std::vector<Coefficient> resymmetrized(Ring r, int n, std::vector<Coefficient> m) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Coefficient h = scale(0.5, add(m[i * n + j], conj(m[j * n + i])));
      m[i * n + j] = h;
      m[j * n + i] = conj(h);
    }
    m[i * n + i] = Coefficient::real(r, m[i * n + i].re());
  }
  return m;
}

}  // namespace

Element conjugate_by_unitary(const std::vector<Coefficient>& u, const Element& x) {
  const AlgebraDescriptor& alg = x.algebra();
  const int n = alg.matrix_n();
  const Ring r = alg.matrix_ring();
  auto ux = raw_mat_mul(r, n, u, x.entries());
  auto uxu = raw_mat_mul(r, n, ux, raw_adjoint(r, n, u));
  return matrix_unchecked(alg, resymmetrized(r, n, std::move(uxu)));
}

Element apply_albert_rotation(const AlbertRotation& rot, const Element& x) {
  const AlgebraDescriptor& alg = x.algebra();
  if (alg.kind != AlgebraKind::Albert) throw std::invalid_argument("albert rotation on non-Albert element");
  std::vector<Coefficient> u(9, Coefficient::zero(Ring::O));
  for (int i = 0; i < 3; ++i) u[i * 3 + i] = Coefficient::one(Ring::O);
  u[rot.bi * 3 + rot.bi] = Coefficient::real(Ring::O, rot.c);
  u[rot.bj * 3 + rot.bj] = Coefficient::real(Ring::O, rot.c);
  u[rot.bi * 3 + rot.bj] = scale(rot.s, rot.u);
  u[rot.bj * 3 + rot.bi] = scale(-rot.s, conj(rot.u));
  return conjugate_by_unitary(u, x);
}

Element permute_diagonal(const std::vector<int>& perm, const Element& x) {
  const AlgebraDescriptor& alg = x.algebra();
  const int n = alg.matrix_n();
  const Ring r = alg.matrix_ring();
  std::vector<Coefficient> out(n * n, Coefficient::zero(r));
  // out[p(i)][p(j)] = x[i][j]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[perm[i] * n + perm[j]] = x.at(i, j);
  return matrix_unchecked(alg, std::move(out));
}

Element JordanAutomorphism::apply(const Element& x) const {
  if (x.algebra() != algebra) throw std::invalid_argument("algebra descriptor mismatch");
  switch (algebra.kind) {
    case AlgebraKind::Spin: {
      const int d = algebra.spin_d;
      std::vector<double> v(d, 0.0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) v[i] += rotation[i * d + j] * x.spin_v()[j];
      return Element::spin(d, x.spin_s(), std::move(v));
    }
    case AlgebraKind::Herm:
      return conjugate_by_unitary(unitary, x);
    case AlgebraKind::Albert: {
      Element y = x;
      for (const auto& b : blocks) y = apply_albert_rotation(b, y);
      if (!permutation.empty()) y = permute_diagonal(permutation, y);
      return y;
    }
  }
  throw std::logic_error("unreachable");
}

JordanAutomorphism identity_automorphism(const AlgebraDescriptor& alg) {
  JordanAutomorphism a;
  a.algebra = alg;
  switch (alg.kind) {
    case AlgebraKind::Spin: {
      const int d = alg.spin_d;
      a.rotation.assign(d * d, 0.0);
      for (int i = 0; i < d; ++i) a.rotation[i * d + i] = 1.0;
      break;
    }
    case AlgebraKind::Herm: {
      const int n = alg.herm_n;
      a.unitary.assign(n * n, Coefficient::zero(alg.herm_ring));
      for (int i = 0; i < n; ++i) a.unitary[i * n + i] = Coefficient::one(alg.herm_ring);
      break;
    }
    case AlgebraKind::Albert:
      break;
  }
  return a;
}

std::vector<double> random_unit_vector(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(d);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (int i = 0; i < d; ++i) {
      v[i] = gauss(rng);
      n2 += v[i] * v[i];
    }
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  for (double& x : v) x *= inv;
  return v;
}

std::vector<double> random_rotation_matrix(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Gram-Schmidt on a Gaussian matrix, columns.
  std::vector<double> m(d * d);
  for (auto& x : m) x = gauss(rng);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < j; ++k) {
      double dot = 0.0;
      for (int i = 0; i < d; ++i) dot += m[i * d + k] * m[i * d + j];
      for (int i = 0; i < d; ++i) m[i * d + j] -= dot * m[i * d + k];
    }
    double n2 = 0.0;
    for (int i = 0; i < d; ++i) n2 += m[i * d + j] * m[i * d + j];
    if (n2 < 1e-12) return random_rotation_matrix(d, rng);
    const double inv = 1.0 / std::sqrt(n2);
    for (int i = 0; i < d; ++i) m[i * d + j] *= inv;
  }
  return m;
}

std::vector<Coefficient> random_unitary(Ring r, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Coefficient> m(n * n, Coefficient::zero(r));
  for (auto& c : m)
    for (int i = 0; i < ring_dim(r); ++i) c.c[i] = gauss(rng);
  // Gram-Schmidt over the division ring; columns are a right module.
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      Coefficient dot = Coefficient::zero(r);  // <q_k, a_j>
      for (int i = 0; i < n; ++i) dot = add(dot, mul(conj(m[i * n + k]), m[i * n + j]));
      for (int i = 0; i < n; ++i) m[i * n + j] = sub(m[i * n + j], mul(m[i * n + k], dot));
    }
    double n2 = 0.0;
    for (int i = 0; i < n; ++i) n2 += abs2(m[i * n + j]);
    if (n2 < 1e-12) return random_unitary(r, n, rng);
    const double inv = 1.0 / std::sqrt(n2);
    for (int i = 0; i < n; ++i) m[i * n + j] = scale(inv, m[i * n + j]);
  }
  return m;
}

JordanAutomorphism random_automorphism(const AlgebraDescriptor& alg, std::mt19937_64& rng) {
  JordanAutomorphism a;
  a.algebra = alg;
  switch (alg.kind) {
    case AlgebraKind::Spin:
      a.rotation = random_rotation_matrix(alg.spin_d, rng);
      break;
    case AlgebraKind::Herm:
      a.unitary = random_unitary(alg.herm_ring, alg.herm_n, rng);
      break;
    case AlgebraKind::Albert: {
      std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
      std::uniform_int_distribution<int> pick(0, 2);
      std::normal_distribution<double> gauss(0.0, 1.0);
      const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
      for (int step = 0; step < 9; ++step) {
        AlbertRotation rot;
        const int* p = pairs[pick(rng)];
        rot.bi = p[0];
        rot.bj = p[1];
        const double th = angle(rng);
        rot.c = std::cos(th);
        rot.s = std::sin(th);
        Coefficient u = Coefficient::zero(Ring::O);
        double n2 = 0.0;
        do {
          n2 = 0.0;
          for (int i = 0; i < 4; ++i) {  // unit quaternion inside O
            u.c[i] = gauss(rng);
            n2 += u.c[i] * u.c[i];
          }
        } while (n2 < 1e-12);
        const double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < 4; ++i) u.c[i] *= inv;
        rot.u = u;
        a.blocks.push_back(rot);
      }
      a.permutation = {0, 1, 2};
      std::shuffle(a.permutation.begin(), a.permutation.end(), rng);
      break;
    }
  }
  return a;
}

Element random_hermitian(const AlgebraDescriptor& alg, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  if (alg.kind == AlgebraKind::Spin) {
    std::vector<double> v(alg.spin_d);
    for (double& x : v) x = gauss(rng);
    return Element::spin(alg.spin_d, gauss(rng), std::move(v));
  }
  const int n = alg.matrix_n();
  const Ring r = alg.matrix_ring();
  std::vector<Coefficient> m(n * n, Coefficient::zero(r));
  for (int i = 0; i < n; ++i) {
    m[i * n + i] = Coefficient::real(r, gauss(rng));
    for (int j = i + 1; j < n; ++j) {
      Coefficient c = Coefficient::zero(r);
      for (int k = 0; k < ring_dim(r); ++k) c.c[k] = gauss(rng);
      m[i * n + j] = c;
      m[j * n + i] = conj(c);
    }
  }
  return matrix_unchecked(alg, std::move(m));
}

std::vector<Element> random_frame(const AlgebraDescriptor& alg, std::mt19937_64& rng) {
  if (alg.kind == AlgebraKind::Spin) {
    auto u = random_unit_vector(alg.spin_d, rng);
    std::vector<double> minus(u.size());
    for (size_t i = 0; i < u.size(); ++i) minus[i] = -0.5 * u[i];
    std::vector<double> plus(u.size());
    for (size_t i = 0; i < u.size(); ++i) plus[i] = 0.5 * u[i];
    return {Element::spin(alg.spin_d, 0.5, plus), Element::spin(alg.spin_d, 0.5, minus)};
  }
  const JordanAutomorphism rot = random_automorphism(alg, rng);
  const int n = alg.matrix_n();
  std::vector<Element> frame;
  frame.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> diag(n, 0.0);
    diag[i] = 1.0;
    frame.push_back(rot.apply(Element::diagonal(alg, diag)));
  }
  return frame;
}

std::vector<double> random_simplex(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> w(k);
  double total = 0.0;
  for (double& x : w) {
    double u;
    do {
      u = unif(rng);
    } while (u <= 0.0);
    x = -std::log(u);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace ejq
