#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ejq/coefficient.hpp"

namespace ejq {

enum class AlgebraKind { Spin, Herm, Albert };

// One of the five simple formally real Jordan algebra families:
// Spin(d), Herm(R,n), Herm(C,n), Herm(H,n), Albert (= 3x3 octonion Hermitian).
struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::Spin;
  int spin_d = 0;
  Ring herm_ring = Ring::R;
  int herm_n = 0;

  static AlgebraDescriptor spin(int d);
  static AlgebraDescriptor herm(Ring r, int n);
  static AlgebraDescriptor albert();

  int rank() const;
  bool is_matrix() const { return kind != AlgebraKind::Spin; }
  Ring matrix_ring() const { return kind == AlgebraKind::Albert ? Ring::O : herm_ring; }
  int matrix_n() const { return kind == AlgebraKind::Albert ? 3 : herm_n; }
  std::string name() const;

  bool operator==(const AlgebraDescriptor& o) const;
  bool operator!=(const AlgebraDescriptor& o) const { return !(*this == o); }
};

// Immutable value in a Jordan algebra. Spin factors hold (s, v); the matrix
// algebras hold a conjugate-symmetric n x n coefficient matrix (row major).
class Element {
 public:
  Element() = default;  // empty placeholder; not a valid algebra value

  static Element spin(int d, double s, std::vector<double> v);
  // Validates conjugate symmetry to `sym_tol` and then symmetrizes exactly.
  static Element matrix(const AlgebraDescriptor& alg, std::vector<Coefficient> entries,
                        double sym_tol = 1e-12);
  static Element unit(const AlgebraDescriptor& alg);
  static Element zero(const AlgebraDescriptor& alg);
  static Element diagonal(const AlgebraDescriptor& alg, const std::vector<double>& diag);

  const AlgebraDescriptor& algebra() const { return alg_; }
  double spin_s() const { return spin_s_; }
  const std::vector<double>& spin_v() const { return spin_v_; }
  const std::vector<Coefficient>& entries() const { return mat_; }
  const Coefficient& at(int i, int j) const { return mat_[i * alg_.matrix_n() + j]; }

 private:
  friend Element jordan_product(const Element&, const Element&);
  friend Element add(const Element&, const Element&);
  friend Element sub(const Element&, const Element&);
  friend Element scale(double, const Element&);
  friend Element matrix_unchecked(const AlgebraDescriptor&, std::vector<Coefficient>);

  AlgebraDescriptor alg_;
  double spin_s_ = 0.0;
  std::vector<double> spin_v_;
  std::vector<Coefficient> mat_;
};

// x o y: spin rule (st + u.v, sv + tu); matrix rule (xy + yx)/2.
Element jordan_product(const Element& x, const Element& y);
double trace(const Element& x);
// tr[x o y]; equals the flat Euclidean dot product of coordinates.
double inner(const Element& x, const Element& y);
Element power(const Element& x, int k);
Element linear_combine(const std::vector<std::pair<double, Element>>& terms);

Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element scale(double a, const Element& x);
double norm(const Element& x);
double dist(const Element& x, const Element& y);

// Quadratic representation U_a x = 2 a o (a o x) - (a o a) o x; maps the
// positive cone into itself.
Element quadratic_representation(const Element& a, const Element& x);

// Internal: build a matrix element that is Hermitian by construction.
Element matrix_unchecked(const AlgebraDescriptor& alg, std::vector<Coefficient> entries);

// The isomorphism Spin(3) <-> Herm(C,2): (s,u) -> s I + u1 sx + u2 sy + u3 sz.
Element spin3_to_herm2(const Element& x);
Element herm2_to_spin3(const Element& x);

}  // namespace ejq
