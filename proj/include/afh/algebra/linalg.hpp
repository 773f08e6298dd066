#pragma once

// Exact linear algebra over Q. Elimination runs fraction-free on integer
// rows obtained by clearing denominators.

#include "afh/algebra/matrix.hpp"

#include <optional>
#include <vector>

namespace afh {

// Reduced row echelon data of a matrix, computed fraction-free.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  // Rows of the reduced form scaled to primitive integer vectors; row r has
  // its pivot at pivot_cols[r] and zeros in every other pivot column.
  std::vector<std::vector<Integer>> rows;
};

Echelon echelon(const QMatrix& m);

std::size_t rank(const QMatrix& m);
std::size_t rank(const std::vector<QVector>& vectors, std::size_t dim);

// Basis of {v : m v = 0}. Each vector is integral with content 1.
std::vector<QVector> nullspace(const QMatrix& m);

// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

// Coefficients c with sum c_k basis[k] = v; basis must be independent.
std::optional<QVector> span_coordinates(const std::vector<QVector>& basis, const QVector& v);
bool in_span(const std::vector<QVector>& vectors, const QVector& v, std::size_t dim);

// Indices of a maximal independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors, std::size_t dim);

// Linear functionals vanishing on span(vectors), as row vectors.
std::vector<QVector> annihilator(const std::vector<QVector>& vectors, std::size_t dim);

std::optional<QMatrix> inverse(const QMatrix& m);
Rational determinant(const QMatrix& m);

struct Congruence {
  QMatrix B;  // invertible, B^T Q B = D
  QMatrix D;  // diagonal
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t rank = 0;
};

// Symmetric congruence diagonalization. Throws std::invalid_argument on a
// non-symmetric input.
Congruence congruence_diagonalize(const QMatrix& q);

// Characteristic polynomial det(t I - m), coefficients in ascending degree.
QVector charpoly(const QMatrix& m);

// Rational roots of a polynomial (ascending coefficients) with multiplicity,
// sorted descending. `complete` is set when they account for the full degree.
std::vector<Rational> rational_roots(const QVector& coeffs, bool* complete = nullptr);

// Integer content-1 multiple of v (sign fixed so the first nonzero entry is
// positive). The zero vector is returned unchanged.
QVector primitive(const QVector& v);

}  // namespace afh
