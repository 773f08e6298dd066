#include "afh/symmetry/vector_field.hpp"

#include <stdexcept>

namespace afh {

AffineVectorField::AffineVectorField(QMatrix a, QVector t) : A(std::move(a)), b(std::move(t)) {
  if (A.rows() != b.size() || A.cols() != b.size())
    throw std::invalid_argument("affine field: linear part and translation disagree in dimension");
}

AffineVectorField AffineVectorField::zero(std::size_t dim) {
  return {QMatrix(dim, dim), QVector(dim, Rational(0))};
}

AffineVectorField AffineVectorField::translation(std::size_t dim, std::size_t i) {
  AffineVectorField x = zero(dim);
  x.b.at(i) = 1;
  return x;
}

AffineVectorField AffineVectorField::linear(std::size_t dim, std::size_t i, std::size_t j) {
  AffineVectorField x = zero(dim);
  if (i >= dim || j >= dim) throw std::out_of_range("affine field index");
  x.A(i, j) = 1;
  return x;
}

bool AffineVectorField::is_zero() const {
  if (!A.is_zero()) return false;
  for (const auto& v : b)
    if (!afh::is_zero(v)) return false;
  return true;
}

QVector AffineVectorField::evaluate(const QVector& p) const {
  if (p.size() != dim()) throw std::invalid_argument("affine field: point dimension mismatch");
  QVector v = A * p;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

RPoly AffineVectorField::apply(const RPoly& f) const {
  const std::size_t n = dim();
  if (f.nvars() != n) throw std::invalid_argument("affine field: polynomial arity mismatch");
  RPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    RPoly comp = RPoly::constant(n, b[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (!afh::is_zero(A(i, j))) comp += RPoly::variable(n, j) * A(i, j);
    if (comp.is_zero()) continue;
    out += comp * f.derivative(i);
  }
  return out;
}

QVector AffineVectorField::coords() const {
  const std::size_t n = dim();
  QVector c;
  c.reserve(n * n + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.push_back(A(i, j));
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

AffineVectorField AffineVectorField::from_coords(const QVector& c, std::size_t dim) {
  if (c.size() != dim * dim + dim) throw std::invalid_argument("affine field: coordinate length");
  AffineVectorField x = zero(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) x.A(i, j) = c[i * dim + j];
  for (std::size_t i = 0; i < dim; ++i) x.b[i] = c[dim * dim + i];
  return x;
}

AffineVectorField& AffineVectorField::operator+=(const AffineVectorField& o) {
  if (o.dim() != dim()) throw std::invalid_argument("affine field: dimension mismatch");
  A += o.A;
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += o.b[i];
  return *this;
}

AffineVectorField operator*(const Rational& s, const AffineVectorField& x) {
  AffineVectorField out = x;
  out.A *= s;
  for (auto& v : out.b) v *= s;
  return out;
}

AffineVectorField bracket(const AffineVectorField& x, const AffineVectorField& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("bracket: dimension mismatch");
  QVector ba = y.A * x.b;
  QVector ab = x.A * y.b;
  for (std::size_t i = 0; i < ba.size(); ++i) ba[i] -= ab[i];
  return {y.A * x.A - x.A * y.A, ba};
}

AffineVectorField combine(const std::vector<AffineVectorField>& fields, const QVector& c) {
  if (fields.size() != c.size()) throw std::invalid_argument("combine: coefficient count");
  if (fields.empty()) throw std::invalid_argument("combine: empty field list");
  AffineVectorField out = AffineVectorField::zero(fields.front().dim());
  for (std::size_t k = 0; k < fields.size(); ++k)
    if (!is_zero(c[k])) out += c[k] * fields[k];
  return out;
}

}  // namespace afh
