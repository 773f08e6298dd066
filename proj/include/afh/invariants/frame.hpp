#pragma once

#include "afh/invariants/jet.hpp"

namespace afh {

class DegenerateForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// I_{p,q} with p >= q: the first q coordinates pair with the last q,
// (x_i, x_{n-q+i}) = 1, and the middle p - q coordinates are orthonormal.
// Lorentzian case: (x_1, x_n) = 1, (x_i, x_i) = 1 for 1 < i < n.
struct MetricForm {
  std::size_t p = 0;
  std::size_t q = 0;
  QMatrix G;
  // Adapted frames satisfy B^T Q B = scale * G with scale a square-free integer.
  Rational scale = 1;

  static MetricForm standard(std::size_t p, std::size_t q);
  std::size_t n() const { return p + q; }
};

struct AdaptedFrame {
  QMatrix B;            // u_old = B u_new
  int orientation = 1;  // w_old = orientation * w_new, chosen so that p >= q
  MetricForm metric;
  Jet3 jet;             // jet in the new frame: Q = scale * G
};

// Square-free integer f and rational k with r = k^2 f (r != 0).
std::pair<Integer, Rational> square_class(const Rational& r);

// Throws DegenerateForm if Q is singular, and std::domain_error when the
// diagonal square classes cannot be merged into a single scale over Q.
AdaptedFrame adapt_frame(const Jet3& j);

}  // namespace afh
