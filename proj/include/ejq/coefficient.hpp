#pragma once

#include <array>
#include <string>

namespace ejq {

// The four normed division algebras used as matrix entries.
// Enum value doubles as the coordinate dimension.
enum class Ring : int { R = 1, C = 2, H = 4, O = 8 };

constexpr int ring_dim(Ring r) { return static_cast<int>(r); }
const char* ring_name(Ring r);
Ring ring_from_name(const std::string& name);

// Scalar in R, C, H or O. coords[0] is the real part; the imaginary basis
// order is (i, j, k) for H and (e1..e7) = (i, j, k, l, il, jl, kl) for O,
// where l is the Cayley-Dickson doubling unit.
struct Coefficient {
  Ring ring = Ring::R;
  std::array<double, 8> c{};

  static Coefficient zero(Ring r);
  static Coefficient real(Ring r, double v);
  static Coefficient one(Ring r) { return real(r, 1.0); }
  static Coefficient basis(Ring r, int axis);

  double re() const { return c[0]; }
  bool finite() const;
};

// Division-algebra product. For H and O this is the Cayley-Dickson rule
// (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)) applied recursively.
Coefficient mul(const Coefficient& x, const Coefficient& y);
Coefficient conj(const Coefficient& x);
Coefficient add(const Coefficient& x, const Coefficient& y);
Coefficient sub(const Coefficient& x, const Coefficient& y);
Coefficient scale(double a, const Coefficient& x);
double abs2(const Coefficient& x);
double abs(const Coefficient& x);
double dist(const Coefficient& x, const Coefficient& y);

}  // namespace ejq
