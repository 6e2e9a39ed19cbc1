#include "ejq/coefficient.hpp"

#include <cmath>
#include <stdexcept>

namespace ejq {

namespace {

void cd_conj(const double* x, double* out, int n) {
  out[0] = x[0];
  for (int i = 1; i < n; ++i) out[i] = -x[i];
}

// (a,b)(c,d) = (ac - conj(d)b, da + b conj(c))
void cd_mul(const double* x, const double* y, double* out, int n) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const int h = n / 2;
  const double* a = x;
  const double* b = x + h;
  const double* c = y;
  const double* d = y + h;
  double t1[8], t2[8], cc[8];
  cd_mul(a, c, t1, h);
  cd_conj(d, cc, h);
  cd_mul(cc, b, t2, h);
  for (int i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  cd_mul(d, a, t1, h);
  cd_conj(c, cc, h);
  cd_mul(b, cc, t2, h);
  for (int i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

void check_same_ring(const Coefficient& x, const Coefficient& y) {
  if (x.ring != y.ring) throw std::invalid_argument("ring mismatch");
}

}  // namespace

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    case Ring::H: return "H";
    case Ring::O: return "O";
  }
  return "?";
}

Ring ring_from_name(const std::string& name) {
  if (name == "R") return Ring::R;
  if (name == "C") return Ring::C;
  if (name == "H") return Ring::H;
  if (name == "O") return Ring::O;
  throw std::invalid_argument("unknown ring: " + name);
}

Coefficient Coefficient::zero(Ring r) {
  Coefficient out;
  out.ring = r;
  return out;
}

Coefficient Coefficient::real(Ring r, double v) {
  Coefficient out;
  out.ring = r;
  out.c[0] = v;
  return out;
}

Coefficient Coefficient::basis(Ring r, int axis) {
  if (axis < 0 || axis >= ring_dim(r)) throw std::invalid_argument("basis axis out of range");
  Coefficient out;
  out.ring = r;
  out.c[axis] = 1.0;
  return out;
}

bool Coefficient::finite() const {
  for (int i = 0; i < ring_dim(ring); ++i)
    if (!std::isfinite(c[i])) return false;
  return true;
}

Coefficient mul(const Coefficient& x, const Coefficient& y) {
  check_same_ring(x, y);
  Coefficient out = Coefficient::zero(x.ring);
  cd_mul(x.c.data(), y.c.data(), out.c.data(), ring_dim(x.ring));
  return out;
}

Coefficient conj(const Coefficient& x) {
  Coefficient out = x;
  for (int i = 1; i < ring_dim(x.ring); ++i) out.c[i] = -out.c[i];
  return out;
}

Coefficient add(const Coefficient& x, const Coefficient& y) {
  check_same_ring(x, y);
  Coefficient out = x;
  for (int i = 0; i < ring_dim(x.ring); ++i) out.c[i] += y.c[i];
  return out;
}

Coefficient sub(const Coefficient& x, const Coefficient& y) {
  check_same_ring(x, y);
  Coefficient out = x;
  for (int i = 0; i < ring_dim(x.ring); ++i) out.c[i] -= y.c[i];
  return out;
}

Coefficient scale(double a, const Coefficient& x) {
  Coefficient out = x;
  for (int i = 0; i < ring_dim(x.ring); ++i) out.c[i] *= a;
  return out;
}

double abs2(const Coefficient& x) {
  double s = 0.0;
  for (int i = 0; i < ring_dim(x.ring); ++i) s += x.c[i] * x.c[i];
  return s;
}

double abs(const Coefficient& x) { return std::sqrt(abs2(x)); }

double dist(const Coefficient& x, const Coefficient& y) {
  check_same_ring(x, y);
  double s = 0.0;
  for (int i = 0; i < ring_dim(x.ring); ++i) {
    const double d = x.c[i] - y.c[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace ejq
