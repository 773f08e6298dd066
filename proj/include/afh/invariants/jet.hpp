#pragma once

#include "afh/algebra/linalg.hpp"
#include "afh/algebra/poly.hpp"
#include "afh/symmetry/hypersurface.hpp"

#include <array>

namespace afh {

class SingularPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph jet w = f2(u) + f3(u) + O(|u|^4) of a hypersurface at a point, in
// coordinates x = origin + frame * (u_1, ..., u_n, w).
struct Jet3 {
  std::size_t n = 0;
  QMatrix Q;       // f2(u) = u^T Q u, symmetric n x n
  RPoly cubic;     // f3 as a polynomial in u_1..u_n
  QMatrix frame;   // (n+1) x (n+1), invertible
  QVector origin;  // the base point, length n+1

  RPoly quadratic() const;
  // Totally symmetric coefficients with f3(u) = sum T_ijk u_i u_j u_k.
  Rational cubic_tensor(std::size_t i, std::size_t j, std::size_t k) const;
};

// Coefficient T_ijk of the totally symmetric tensor of a cubic form.
Rational polarized(const RPoly& cubic, std::size_t i, std::size_t j, std::size_t k);
// Symmetric matrix of a quadratic form, and back.
QMatrix quadratic_form_matrix(const RPoly& quadratic, std::size_t n);
RPoly quadratic_from_matrix(const QMatrix& q);

// Throws SingularPoint if grad F(p) = 0 and std::invalid_argument if p is
// not on the surface. The graph coordinate is the last index with a nonzero
// gradient component; the linear part is removed by a shear.
// order is 2 or 3; order 2 leaves the cubic zero.
Jet3 graph_jet(const Hypersurface& s, const QVector& p, int order = 3);

struct Signature {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t n = 0;
  bool degenerate() const { return p + q < n; }
  std::size_t rank() const { return p + q; }
};

// Raw signature of Q; no p >= q orientation is imposed.
Signature second_fundamental_signature(const Jet3& j);

// Same surface germ after u -> B u (B invertible n x n) and w -> orientation * w.
Jet3 transform_jet(const Jet3& j, const QMatrix& b, int orientation);

}  // namespace afh
