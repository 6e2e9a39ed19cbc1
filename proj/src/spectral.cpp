#include "ejq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ejq/rotations.hpp"

namespace ejq {

namespace {

struct EigenPair {
  double value;
  int column;
};

// Cluster sorted eigenvalues: a new group starts when the gap to the previous
// value exceeds the merge tolerance.
std::vector<std::vector<EigenPair>> cluster(std::vector<EigenPair> pairs, double tol) {
  std::sort(pairs.begin(), pairs.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.value > b.value; });
  std::vector<std::vector<EigenPair>> groups;
  for (const auto& p : pairs) {
    if (groups.empty() || groups.back().back().value - p.value > tol)
      groups.push_back({p});
    else
      groups.back().push_back(p);
  }
  return groups;
}

double group_mean(const std::vector<EigenPair>& g) {
  double s = 0.0;
  for (const auto& p : g) s += p.value;
  return s / static_cast<double>(g.size());
}

CMat projector_from_columns(const CMat& v, const std::vector<EigenPair>& group) {
  CMat p(v.n);
  for (const auto& g : group) {
    for (int i = 0; i < v.n; ++i) {
      const cxd vi = v.at(i, g.column);
      for (int j = 0; j < v.n; ++j) p.at(i, j) += vi * std::conj(v.at(j, g.column));
    }
  }
  return p;
}

SpectralDecomposition decompose_spin(const Element& x) {
  const int d = x.algebra().spin_d;
  const double s = x.spin_s();
  double vn2 = 0.0;
  for (double v : x.spin_v()) vn2 += v * v;
  const double vn = std::sqrt(vn2);
  const double tol = kEigenMergeTol * std::max(1.0, norm(x));
  SpectralDecomposition dec;
  if (2.0 * vn <= tol) {
    dec.eigenvalues = {s};
    dec.multiplicities = {2};
    dec.idempotents = {Element::unit(x.algebra())};
    return dec;
  }
  std::vector<double> up(d), um(d);
  for (int i = 0; i < d; ++i) {
    up[i] = 0.5 * x.spin_v()[i] / vn;
    um[i] = -up[i];
  }
  dec.eigenvalues = {s + vn, s - vn};
  dec.multiplicities = {1, 1};
  dec.idempotents = {Element::spin(d, 0.5, std::move(up)), Element::spin(d, 0.5, std::move(um))};
  return dec;
}

SpectralDecomposition decompose_matrix(const Element& x, SweepOrder order) {
  const AlgebraDescriptor& alg = x.algebra();
  const Ring ring = alg.matrix_ring();
  CMat a = complex_image(x);
  HermEig eig = jacobi_hermitian(a, order);
  const double tol = kEigenMergeTol * std::max(1.0, norm(x));
  std::vector<EigenPair> pairs(eig.values.size());
  for (size_t i = 0; i < eig.values.size(); ++i) pairs[i] = {eig.values[i], static_cast<int>(i)};
  auto groups = cluster(std::move(pairs), tol);

  SpectralDecomposition dec;
  for (const auto& g : groups) {
    CMat proj = projector_from_columns(eig.vectors, g);
    double residual = 0.0;
    Element idem = from_complex_image(alg, proj, &residual);
    if (ring == Ring::H) {
      if (g.size() % 2 != 0) throw std::runtime_error("quaternionic eigenvalues failed to pair");
      if (residual > 1e-8) throw std::runtime_error("quaternionic embedding pairing residual too large");
      dec.multiplicities.push_back(static_cast<int>(g.size()) / 2);
    } else {
      dec.multiplicities.push_back(static_cast<int>(g.size()));
    }
    dec.eigenvalues.push_back(group_mean(g));
    dec.idempotents.push_back(std::move(idem));
  }
  return dec;
}

// Characteristic cubic of an Albert element from its power traces, solved by
// the trigonometric method; idempotents by Lagrange interpolation.
SpectralDecomposition decompose_albert(const Element& x) {
  const double sc = std::max(1.0, norm(x));
  const Element y = scale(1.0 / sc, x);
  const Element y2 = jordan_product(y, y);
  const Element y3 = jordan_product(y2, y);
  const double p1 = trace(y);
  const double p2 = trace(y2);
  const double p3 = trace(y3);
  const double c1 = p1;
  const double c2 = 0.5 * (p1 * p1 - p2);
  const double c3 = (p1 * p1 * p1 - 3.0 * p1 * p2 + 2.0 * p3) / 6.0;
  // depressed cubic t^3 + p t + q, lambda = t + c1/3
  const double shift = c1 / 3.0;
  const double p = c2 - c1 * c1 / 3.0;
  const double q = -c3 + c1 * c2 / 3.0 - 2.0 * c1 * c1 * c1 / 27.0;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  if (disc < -1e-8) throw std::runtime_error("albert characteristic cubic has complex roots");

  double roots[3];
  if (p >= -1e-14) {
    // Triple (or numerically indistinguishable) root.
    const double t = std::cbrt(-q);
    roots[0] = roots[1] = roots[2] = t;
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * m);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) roots[k] = m * std::cos(theta - 2.0 * M_PI * k / 3.0);
  }
  double lam[3];
  for (int k = 0; k < 3; ++k) lam[k] = roots[k] + shift;
  std::sort(lam, lam + 3, std::greater<double>());
  // The trigonometric roots lose half the digits near a double root. Detect
  // near-degenerate patterns, Newton-polish the simple root (quadratic
  // convergence there) and recover the double one from the trace identity.
  auto newton = [&](double t) {
    for (int it = 0; it < 4; ++it) {
      const double val = ((t - c1) * t + c2) * t - c3;
      const double der = (3.0 * t - 2.0 * c1) * t + c2;
      if (der == 0.0) break;
      t -= val / der;
    }
    return t;
  };
  const double degen = 1e-6;
  const double g01 = lam[0] - lam[1];
  const double g12 = lam[1] - lam[2];
  if (g01 <= degen && g12 <= degen) {
    lam[0] = lam[1] = lam[2] = p1 / 3.0;
  } else if (g12 <= degen) {
    lam[0] = newton(lam[0]);
    lam[1] = lam[2] = 0.5 * (p1 - lam[0]);
  } else if (g01 <= degen) {
    lam[2] = newton(lam[2]);
    lam[0] = lam[1] = 0.5 * (p1 - lam[2]);
  } else {
    for (int k = 0; k < 3; ++k) lam[k] = newton(lam[k]);
  }
  std::vector<EigenPair> pairs(3);
  for (int k = 0; k < 3; ++k) pairs[k] = {sc * lam[k], k};
  const double tol = kEigenMergeTol * std::max(1.0, norm(x));
  auto groups = cluster(std::move(pairs), tol);

  SpectralDecomposition dec;
  const Element unit = Element::unit(x.algebra());
  if (groups.size() == 1) {
    dec.eigenvalues = {group_mean(groups[0])};
    dec.multiplicities = {3};
    dec.idempotents = {unit};
    return dec;
  }
  std::vector<double> lams;
  for (const auto& g : groups) lams.push_back(group_mean(g));
  if (groups.size() == 2) {
    for (int k = 0; k < 2; ++k) {
      const double lk = lams[k], lo = lams[1 - k];
      Element e = scale(1.0 / (lk - lo), sub(x, scale(lo, unit)));
      dec.eigenvalues.push_back(lk);
      dec.multiplicities.push_back(static_cast<int>(groups[k].size()));
      dec.idempotents.push_back(std::move(e));
    }
    return dec;
  }
  const Element x2 = jordan_product(x, x);
  for (int k = 0; k < 3; ++k) {
    const double li = lams[(k + 1) % 3], lj = lams[(k + 2) % 3];
    Element num = add(sub(x2, scale(li + lj, x)), scale(li * lj, unit));
    Element e = scale(1.0 / ((lams[k] - li) * (lams[k] - lj)), num);
    dec.eigenvalues.push_back(lams[k]);
    dec.multiplicities.push_back(1);
    dec.idempotents.push_back(std::move(e));
  }
  return dec;
}

}  // namespace

Element SpectralDecomposition::reconstruct() const {
  std::vector<std::pair<double, Element>> terms;
  for (size_t i = 0; i < eigenvalues.size(); ++i) terms.emplace_back(eigenvalues[i], idempotents[i]);
  return linear_combine(terms);
}

double Spectrum::total() const { return std::accumulate(values.begin(), values.end(), 0.0); }

SpectralDecomposition eigendecompose(const Element& x, SweepOrder order) {
  switch (x.algebra().kind) {
    case AlgebraKind::Spin: return decompose_spin(x);
    case AlgebraKind::Herm: return decompose_matrix(x, order);
    case AlgebraKind::Albert: return decompose_albert(x);
  }
  throw std::logic_error("unreachable");
}

Spectrum spectrum_of(const SpectralDecomposition& dec) {
  Spectrum s;
  for (size_t i = 0; i < dec.eigenvalues.size(); ++i)
    for (int m = 0; m < dec.multiplicities[i]; ++m) s.values.push_back(dec.eigenvalues[i]);
  return s;
}

Spectrum spectrum_of(const Element& x) { return spectrum_of(eigendecompose(x)); }

Element apply_function(const Element& x, const std::function<double(double)>& f, bool zero_guard) {
  SpectralDecomposition dec = eigendecompose(x);
  const double ztol = kEigenMergeTol * std::max(1.0, norm(x));
  std::vector<std::pair<double, Element>> terms;
  for (size_t i = 0; i < dec.eigenvalues.size(); ++i) {
    const double lam = dec.eigenvalues[i];
    double y = f(lam);
    if (!std::isfinite(y)) {
      if (zero_guard && lam > -1e-10 && lam < ztol)
        y = 0.0;
      else
        throw std::domain_error("eigenvalue outside the domain of f");
    }
    terms.emplace_back(y, dec.idempotents[i]);
  }
  return linear_combine(terms);
}

double min_eigenvalue(const Element& x) {
  SpectralDecomposition dec = eigendecompose(x);
  return dec.eigenvalues.back();
}

bool is_positive(const Element& x) { return min_eigenvalue(x) >= -1e-10; }

MajorizeResult majorize_compare(const Spectrum& a, const Spectrum& b, double tol) {
  std::vector<double> av = a.values, bv = b.values;
  const size_t n = std::max(av.size(), bv.size());
  av.resize(n, 0.0);
  bv.resize(n, 0.0);
  if (std::abs(a.total() - b.total()) > tol)
    throw std::invalid_argument("spectra totals differ");
  bool geq = true, leq = true;
  double pa = 0.0, pb = 0.0;
  for (size_t k = 0; k < n; ++k) {
    pa += av[k];
    pb += bv[k];
    if (pa < pb - tol) geq = false;
    if (pb < pa - tol) leq = false;
  }
  if (geq && leq) return MajorizeResult::Equal;
  if (geq) return MajorizeResult::Dominates;
  if (leq) return MajorizeResult::DominatedBy;
  return MajorizeResult::Incomparable;
}

StateElement make_state(const Element& e) {
  if (std::abs(trace(e) - 1.0) > 1e-10) throw std::invalid_argument("state must have trace 1");
  if (min_eigenvalue(e) < -1e-10) throw std::invalid_argument("state must be positive");
  return StateElement(e);
}

StateElement random_state(const AlgebraDescriptor& alg, std::mt19937_64& rng,
                          const std::optional<Spectrum>& spectrum) {
  const int r = alg.rank();
  std::vector<double> lam;
  if (spectrum) {
    if (static_cast<int>(spectrum->values.size()) > r)
      throw std::invalid_argument("invalid spectrum: longer than rank");
    double total = 0.0;
    for (double v : spectrum->values) {
      if (v < -1e-15) throw std::invalid_argument("invalid spectrum: negative weight");
      total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("invalid spectrum: does not sum to 1");
    lam = spectrum->values;
    lam.resize(r, 0.0);
  } else {
    lam = random_simplex(r, rng);
    std::sort(lam.begin(), lam.end(), std::greater<double>());
  }
  std::vector<Element> frame = random_frame(alg, rng);
  std::vector<std::pair<double, Element>> terms;
  for (int i = 0; i < r; ++i) terms.emplace_back(lam[i], frame[i]);
  return make_state(linear_combine(terms));
}

StateElement random_state(const AlgebraDescriptor& alg, std::uint64_t seed,
                          const std::optional<Spectrum>& spectrum) {
  std::mt19937_64 rng(seed);
  return random_state(alg, rng, spectrum);
}

double complex_trace_factor(const AlgebraDescriptor& alg) {
  if (alg.kind == AlgebraKind::Herm && alg.herm_ring == Ring::H) return 2.0;
  return 1.0;
}

CMat complex_image(const Element& x) {
  const AlgebraDescriptor& alg = x.algebra();
  if (alg.kind == AlgebraKind::Albert)
    throw std::invalid_argument("unsupported: exceptional algebra has no associative image");
  if (alg.kind == AlgebraKind::Spin) {
    if (alg.spin_d > 3)
      throw std::invalid_argument("unsupported: spin factor with d > 3 has no fixed complex image here");
    std::vector<double> v(3, 0.0);
    for (int i = 0; i < alg.spin_d; ++i) v[i] = x.spin_v()[i];
    return complex_image(spin3_to_herm2(Element::spin(3, x.spin_s(), v)));
  }
  const int n = alg.herm_n;
  if (alg.herm_ring == Ring::R || alg.herm_ring == Ring::C) {
    CMat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Coefficient& c = x.at(i, j);
        m.at(i, j) = alg.herm_ring == Ring::R ? cxd(c.c[0], 0.0) : cxd(c.c[0], c.c[1]);
      }
    return m;
  }
  // Quaternion a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]]
  CMat m(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Coefficient& q = x.at(i, j);
      m.at(2 * i, 2 * j) = cxd(q.c[0], q.c[1]);
      m.at(2 * i, 2 * j + 1) = cxd(q.c[2], q.c[3]);
      m.at(2 * i + 1, 2 * j) = cxd(-q.c[2], q.c[3]);
      m.at(2 * i + 1, 2 * j + 1) = cxd(q.c[0], -q.c[1]);
    }
  return m;
}

Element from_complex_image(const AlgebraDescriptor& alg, const CMat& m, double* residual) {
  double res = 0.0;
  Element out = Element::zero(alg);
  if (alg.kind == AlgebraKind::Spin) {
    if (alg.spin_d > 3) throw std::invalid_argument("unsupported spin dimension");
    Element h2 = from_complex_image(AlgebraDescriptor::herm(Ring::C, 2), m, residual);
    Element s3 = herm2_to_spin3(h2);
    std::vector<double> v(alg.spin_d);
    for (int i = 0; i < alg.spin_d; ++i) v[i] = s3.spin_v()[i];
    for (int i = alg.spin_d; i < 3; ++i)
      if (residual) *residual = std::max(*residual, std::abs(s3.spin_v()[i]));
    return Element::spin(alg.spin_d, s3.spin_s(), std::move(v));
  }
  const int n = alg.herm_n;
  if (alg.herm_ring == Ring::R || alg.herm_ring == Ring::C) {
    if (m.n != n) throw std::invalid_argument("complex image size mismatch");
    std::vector<Coefficient> ent(n * n, Coefficient::zero(alg.herm_ring));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const cxd z = m.at(i, j);
        Coefficient c = Coefficient::zero(alg.herm_ring);
        c.c[0] = z.real();
        if (alg.herm_ring == Ring::C)
          c.c[1] = z.imag();
        else
          res = std::max(res, std::abs(z.imag()));
        ent[i * n + j] = c;
      }
    res = std::max(res, herm_deviation(m));
    if (residual) *residual = std::max(*residual, res);
    return Element::matrix(alg, std::move(ent), 1e-6);
  }
  if (m.n != 2 * n) throw std::invalid_argument("complex image size mismatch");
  std::vector<Coefficient> ent(n * n, Coefficient::zero(Ring::H));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cxd z = m.at(2 * i, 2 * j);
      const cxd w = m.at(2 * i, 2 * j + 1);
      const cxd z2 = m.at(2 * i + 1, 2 * j + 1);
      const cxd w2 = m.at(2 * i + 1, 2 * j);
      res = std::max(res, std::abs(z2 - std::conj(z)));
      res = std::max(res, std::abs(w2 + std::conj(w)));
      Coefficient q = Coefficient::zero(Ring::H);
      q.c[0] = z.real();
      q.c[1] = z.imag();
      q.c[2] = w.real();
      q.c[3] = w.imag();
      ent[i * n + j] = q;
    }
  if (residual) *residual = std::max(*residual, res);
  return Element::matrix(alg, std::move(ent), 1e-6);
}

}  // namespace ejq
