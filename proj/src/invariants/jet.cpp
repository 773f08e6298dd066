#include "afh/invariants/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace afh {

namespace {

Monomial monomial_of(std::initializer_list<std::size_t> vars) {
  Monomial m;
  for (auto v : vars) m.set(v, m[v] + 1);
  return m;
}

Integer factorial_of_exponents(const Monomial& m) {
  Integer f = 1;
  for (std::size_t v = 0; v < kMaxVars; ++v)
    for (int k = 2; k <= m[v]; ++k) f *= k;
  return f;
}

}  // namespace

Rational polarized(const RPoly& cubic, std::size_t i, std::size_t j, std::size_t k) {
  Monomial m = monomial_of({i, j, k});
  // A monomial u^a of degree 3 appears 3!/a! times in the symmetric sum.
  Rational c = cubic.coeff(m) * Rational(factorial_of_exponents(m)) / Rational(6);
  return c;
}

QMatrix quadratic_form_matrix(const RPoly& quadratic, std::size_t n) {
  QMatrix q(n, n);
  for (const auto& [m, c] : quadratic.terms()) {
    if (m.degree() != 2) throw std::invalid_argument("quadratic_form_matrix: polynomial is not a quadratic form");
    std::size_t i = n, j = n;
    for (std::size_t v = 0; v < quadratic.nvars(); ++v) {
      if (m[v] == 2) i = j = v;
      if (m[v] == 1) (i == n ? i : j) = v;
    }
    if (i >= n || j >= n) throw std::invalid_argument("quadratic_form_matrix: variable out of range");
    if (i == j) {
      q(i, i) = c;
    } else {
      q(i, j) = q(j, i) = c / 2;
    }
  }
  return q;
}

RPoly quadratic_from_matrix(const QMatrix& q) {
  const std::size_t n = q.rows();
  RPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.add_term(Monomial::unit(i, 2), q(i, i));
    for (std::size_t j = i + 1; j < n; ++j) out.add_term(monomial_of({i, j}), q(i, j) * 2);
  }
  return out;
}

RPoly Jet3::quadratic() const { return quadratic_from_matrix(Q); }

Rational Jet3::cubic_tensor(std::size_t i, std::size_t j, std::size_t k) const {
  return polarized(cubic, i, j, k);
}

Jet3 graph_jet(const Hypersurface& s, const QVector& p, int order) {
  if (order != 2 && order != 3) throw std::invalid_argument("graph_jet: order must be 2 or 3");
  const std::size_t n = s.n();
  const std::size_t dim = n + 1;
  if (p.size() != dim) throw std::invalid_argument("graph_jet: point dimension mismatch");
  if (!s.contains(p)) throw std::invalid_argument("graph_jet: point is not on the surface");
  QVector g = s.gradient(p);
  std::size_t k = dim;
  for (std::size_t i = dim; i-- > 0;)
    if (!is_zero(g[i])) {
      k = i;
      break;
    }
  if (k == dim) throw SingularPoint("graph_jet: gradient vanishes at the point");

  // y = M (u, w): tangent coordinate t copies y_{idx[t]}; y_k = w - sum g_i u_i / g_k.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dim; ++i)
    if (i != k) idx.push_back(i);
  QMatrix frame(dim, dim);
  for (std::size_t t = 0; t < n; ++t) {
    frame(idx[t], t) = 1;
    frame(k, t) = -g[idx[t]] / g[k];
  }
  frame(k, n) = 1;

  std::vector<RPoly> subst;
  for (std::size_t i = 0; i < dim; ++i) {
    RPoly c = RPoly::constant(dim, p[i]);
    for (std::size_t j = 0; j < dim; ++j)
      if (!is_zero(frame(i, j))) c += RPoly::variable(dim, j) * frame(i, j);
    subst.push_back(std::move(c));
  }
  RPoly phi = poly_compose<Rational>(s.F(), subst);
  // phi = g_k w + N(u, w) with N of order >= 2.
  RPoly linear_w = RPoly::variable(dim, n) * g[k];
  RPoly nonlinear = phi - linear_w;
  if (nonlinear.min_degree() != RPoly::kZeroDegree && nonlinear.min_degree() < 2)
    throw std::logic_error("graph_jet: shear left a linear term");

  // Fixed point h <- -N(u, h) / g_k; each pass fixes one more degree.
  using Series = TruncSeries<Rational>;
  Series h(RPoly(n), order);
  for (int pass = 0; pass < order; ++pass) {
    std::vector<Series> args;
    for (std::size_t t = 0; t < n; ++t) args.push_back(Series::variable(n, t, order));
    args.push_back(h);
    Series next = poly_compose<Rational>(nonlinear, args) * Rational(Rational(-1) / g[k]);
    if (next == h) break;
    h = next;
  }

  Jet3 jet;
  jet.n = n;
  jet.Q = quadratic_form_matrix(h.poly().homogeneous_part(2), n);
  jet.cubic = h.poly().homogeneous_part(3);
  jet.frame = frame;
  jet.origin = p;
  return jet;
}

Signature second_fundamental_signature(const Jet3& j) {
  Congruence c = congruence_diagonalize(j.Q);
  return {c.p, c.q, j.n};
}

Jet3 transform_jet(const Jet3& j, const QMatrix& b, int orientation) {
  if (b.rows() != j.n || b.cols() != j.n) throw std::invalid_argument("transform_jet: matrix size");
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("transform_jet: orientation");
  const Rational o(orientation);
  Jet3 out = j;
  out.Q = b.transpose() * j.Q * b;
  out.Q *= o;
  std::vector<RPoly> subst;
  for (std::size_t i = 0; i < j.n; ++i) {
    RPoly c(j.n);
    for (std::size_t t = 0; t < j.n; ++t)
      if (!is_zero(b(i, t))) c += RPoly::variable(j.n, t) * b(i, t);
    subst.push_back(std::move(c));
  }
  out.cubic = poly_compose<Rational>(j.cubic, subst) * o;
  QMatrix block(j.n + 1, j.n + 1);
  for (std::size_t r = 0; r < j.n; ++r)
    for (std::size_t c = 0; c < j.n; ++c) block(r, c) = b(r, c);
  block(j.n, j.n) = o;
  out.frame = j.frame * block;
  return out;
}

}  // namespace afh
