#pragma once

#include "afh/algebra/linalg.hpp"
#include "afh/algebra/poly.hpp"

namespace afh {

// The affine vector field v(x) = A x + b on R^dim.
struct AffineVectorField {
  QMatrix A;
  QVector b;

  AffineVectorField() = default;
  AffineVectorField(QMatrix a, QVector t);

  static AffineVectorField zero(std::size_t dim);
  static AffineVectorField translation(std::size_t dim, std::size_t i);
  // x_j d/dx_i.
  static AffineVectorField linear(std::size_t dim, std::size_t i, std::size_t j);

  std::size_t dim() const { return b.size(); }
  bool is_zero() const;

  QVector evaluate(const QVector& p) const;
  // Derivation sum_i (A x + b)_i dF/dx_i.
  RPoly apply(const RPoly& f) const;

  // Coordinates: A row-major, followed by b.
  QVector coords() const;
  static AffineVectorField from_coords(const QVector& c, std::size_t dim);

  AffineVectorField& operator+=(const AffineVectorField& o);
  friend AffineVectorField operator+(AffineVectorField a, const AffineVectorField& o) { return a += o; }
  friend AffineVectorField operator*(const Rational& s, const AffineVectorField& x);
  friend bool operator==(const AffineVectorField& a, const AffineVectorField& o) {
    return a.A == o.A && a.b == o.b;
  }
};

// [X, Y] with X = (A, a), Y = (B, b): linear part BA - AB, translation Ba - Ab.
AffineVectorField bracket(const AffineVectorField& x, const AffineVectorField& y);

// Linear combination sum c_k fields[k].
AffineVectorField combine(const std::vector<AffineVectorField>& fields, const QVector& c);

}  // namespace afh
