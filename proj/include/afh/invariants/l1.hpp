#pragma once

#include "afh/invariants/frame.hpp"
#include "afh/symmetry/lie_algebra.hpp"

#include <string>

namespace afh {

// Trace-free cubic invariant. The metric is the second fundamental form of
// the jet it came from (any frame); all contractions use metric^{-1}.
struct L1Tensor {
  std::size_t n = 0;
  QMatrix metric;
  QMatrix metric_inv;
  RPoly T;          // trace-free cubic form in u_1..u_n
  QVector D_shift;  // C = T + (D, u) f2(u), with (D, u) = D^T metric u

  Rational at(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const { return T.is_zero(); }
};

// Metric trace tau_i = T_ijk g^{jk} of a cubic form.
QVector metric_trace(const RPoly& cubic, const QMatrix& metric_inv);

// Decomposes the jet's cubic C = T + l f2 with T trace-free. Works for every
// n >= 1 since the trace of l f2 is (n + 2)/3 l. Throws DegenerateForm on a
// singular second fundamental form.
L1Tensor extract_L1(const Jet3& j);

// The operator L1(X) = g^{-1} T(., ., X) for X = e_k.
QMatrix l1_operator(const L1Tensor& t, std::size_t k);

// T_ijk T_lmn g^il g^jm g^kn.
Rational pseudo_norm_sq(const L1Tensor& t);

enum class OrbitTag { Zero, CubeNull, SquareNullLinear, NullTimesQuadric, Unclassified };

std::string to_string(OrbitTag tag);

struct OrbitType {
  OrbitTag tag = OrbitTag::Unclassified;
  std::vector<Rational> params;  // NullTimesQuadric only: alphas, sorted descending, largest |alpha| = 1
  std::string diagnostic;
};

// Requires a Lorentzian metric (signature (n-1, 1) or (1, n-1)); other
// signatures give Unclassified with a diagnostic.
OrbitType classify_L1(const L1Tensor& t);

// Rational linear factors of a cubic form, up to scale (primitive, distinct).
std::vector<QVector> rational_linear_factors(const RPoly& cubic);

enum class TubeResult { True, False, NotApplicable };

std::string to_string(TubeResult r);

struct TubeWitness {
  TubeResult result = TubeResult::NotApplicable;
  std::size_t isotropy_dim = 0;
  // Coefficients over the isotropy basis and the scalar lambda of a witness.
  QVector combination;
  Rational lambda = 0;
};

// Does some isotropy element at p act on the trace-free L1 by a nonzero
// scalar? The isotropy algebra is computed with symmetry_algebra unless
// supplied.
TubeWitness tube_criterion(const Hypersurface& s, const QVector& p);
TubeWitness tube_criterion(const Hypersurface& s, const QVector& p, const LieAlgebraBasis& isotropy);

}  // namespace afh
