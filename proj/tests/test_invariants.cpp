#include "doctest.h"
#include "support.hpp"

#include "afh/algebra/parse.hpp"
#include "afh/invariants/l1.hpp"

#include <cmath>
#include <random>

using namespace afh;

namespace {

Hypersurface graph_surface(std::size_t n, const std::string& rhs, QVector p = {}) {
  RPoly f = parse_real_poly("x" + std::to_string(n + 1) + " - (" + rhs + ")", n + 1);
  if (p.empty()) p = QVector(n + 1, Rational(0));
  return {n, f, p};
}

QMatrix lorentz_g(std::size_t n) { return MetricForm::standard(n - 1, 1).G; }

// Jet with Q = G (Lorentzian) and the given cubic in u_1..u_n.
Jet3 lorentz_jet(std::size_t n, const std::string& cubic) {
  Jet3 j;
  j.n = n;
  j.Q = lorentz_g(n);
  j.cubic = cubic.empty() ? RPoly(n) : parse_real_poly(cubic, n);
  j.frame = QMatrix::identity(n + 1);
  j.origin = QVector(n + 1, Rational(0));
  return j;
}

// Independent numeric oracle: solve F(p + M (u, w)) = 0 for w by Newton's
// method and take second differences along coordinate axes.
double graph_value(const Hypersurface& s, const Jet3& j, std::vector<double> u) {
  const std::size_t n = s.n();
  auto to_x = [&](double w) {
    std::vector<double> x(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
      x[r] = j.origin[r].get_d();
      for (std::size_t c = 0; c < n; ++c) x[r] += j.frame(r, c).get_d() * u[c];
      x[r] += j.frame(r, n).get_d() * w;
    }
    return x;
  };
  auto eval = [&](const RPoly& f, const std::vector<double>& x) {
    double total = 0;
    for (const auto& [m, c] : f.terms()) {
      double t = c.get_d();
      for (std::size_t v = 0; v < x.size(); ++v) t *= std::pow(x[v], m[v]);
      total += t;
    }
    return total;
  };
  std::vector<RPoly> grad;
  for (std::size_t v = 0; v <= n; ++v) grad.push_back(s.F().derivative(v));
  double w = 0;
  for (int it = 0; it < 60; ++it) {
    auto x = to_x(w);
    double dfdw = 0;
    for (std::size_t v = 0; v <= n; ++v) dfdw += eval(grad[v], x) * j.frame(v, n).get_d();
    w -= eval(s.F(), x) / dfdw;
  }
  return w;
}

}  // namespace

TEST_CASE("graph jet of the paraboloid") {
  Hypersurface s = graph_surface(2, "x1^2 + x2^2");
  Jet3 j = graph_jet(s, s.ref_point());
  CHECK(j.Q == QMatrix::identity(2));
  CHECK(j.cubic.is_zero());
}

TEST_CASE("graph jet of the Lorentzian quadric") {
  Hypersurface s = graph_surface(4, "x1 x4 + x2^2 + x3^2");
  Jet3 j = graph_jet(s, s.ref_point());
  QMatrix expected(4, 4);
  expected(0, 3) = expected(3, 0) = Rational(1, 2);
  expected(1, 1) = expected(2, 2) = 1;
  CHECK(j.Q == expected);
  CHECK(j.cubic.is_zero());
}

TEST_CASE("graph jet at a regular point agrees with finite differences") {
  QVector p{1, 0, 0, 0, 0};
  Hypersurface s = graph_surface(4, "x1 x2 + x1 (x3^2 + x4^2)", p);
  Jet3 j = graph_jet(s, p);
  CHECK(j.Q.is_symmetric());
  Signature sig = second_fundamental_signature(j);
  CHECK(sig.p == 3);
  CHECK(sig.q == 1);
  CHECK_FALSE(j.cubic.is_zero());
  const double h = 1e-3;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<double> plus(4, 0.0), minus(4, 0.0), zero(4, 0.0);
    plus[i] = h;
    minus[i] = -h;
    double second = (graph_value(s, j, plus) - 2 * graph_value(s, j, zero) + graph_value(s, j, minus)) / (h * h);
    CHECK(std::abs(second / 2 - j.Q(i, i).get_d()) < 1e-5);
  }
}

TEST_CASE("graph jet errors") {
  Hypersurface s = graph_surface(2, "x1^2 + x2^2");
  CHECK_THROWS_AS(graph_jet(s, {1, 0, 0}), std::invalid_argument);
  RPoly nodal = parse_real_poly("x3^3 - x3^2 + x1^2 + x2^2", 3);
  Hypersurface w(2, nodal, {0, 0, 1});
  CHECK_THROWS_AS(graph_jet(w, {0, 0, 0}), SingularPoint);
}

TEST_CASE("signatures") {
  Jet3 j = lorentz_jet(4, "");
  j.Q = QMatrix::identity(4);
  Signature s = second_fundamental_signature(j);
  CHECK(s.p == 4);
  CHECK(s.q == 0);
  QVector p{-1, 0, 0, 0, 0};
  Hypersurface gamma = graph_surface(4, "x1 x2 + x1 (x3^2 + x4^2)", p);
  Signature neg = second_fundamental_signature(graph_jet(gamma, p));
  CHECK(neg.p == 1);
  CHECK(neg.q == 3);
}

TEST_CASE("adapt_frame") {
  Jet3 j = lorentz_jet(4, "x1^3");
  AdaptedFrame a = adapt_frame(j);
  CHECK(a.B == QMatrix::identity(4));
  CHECK(a.metric.scale == 1);

  Jet3 d = lorentz_jet(4, "");
  d.Q = QMatrix::identity(4);
  d.Q(3, 3) = -1;
  AdaptedFrame ad = adapt_frame(d);
  CHECK(ad.B.transpose() * d.Q * ad.B == ad.metric.G);
  CHECK(ad.metric.p == 3);
  CHECK(ad.metric.q == 1);

  Jet3 two = lorentz_jet(4, "");
  two.Q = lorentz_g(4) * Rational(2);
  AdaptedFrame at = adapt_frame(two);
  CHECK(at.metric.scale == 2);
  CHECK(at.B.transpose() * two.Q * at.B == at.metric.G * Rational(2));

  Jet3 eight = lorentz_jet(4, "");
  eight.Q = lorentz_g(4) * Rational(8, 9);
  AdaptedFrame ae = adapt_frame(eight);
  CHECK(ae.metric.scale == 2);

  // Orientation flip for a (1, n-1) form.
  Jet3 flipped = lorentz_jet(4, "x1^3");
  flipped.Q = lorentz_g(4) * Rational(-1);
  flipped.cubic = parse_real_poly("x1^3", 4);
  AdaptedFrame af = adapt_frame(flipped);
  CHECK(af.orientation == -1);
  CHECK(af.jet.Q == lorentz_g(4));
  CHECK(af.jet.cubic == parse_real_poly("-x1^3", 4));

  Jet3 deg = lorentz_jet(4, "");
  deg.Q(0, 3) = deg.Q(3, 0) = 0;
  CHECK_THROWS_AS(adapt_frame(deg), DegenerateForm);
}

TEST_CASE("square classes") {
  auto [f, k] = square_class(Rational(-50, 3));
  CHECK(f == -6);
  CHECK(k * k * Rational(f) == Rational(-50, 3));
}

TEST_CASE("extract_L1 trace removal") {
  CHECK(extract_L1(lorentz_jet(4, "")).is_zero());
  // x1 is null for the Lorentzian metric, so x1^3 is already trace-free.
  L1Tensor t = extract_L1(lorentz_jet(4, "x1^3"));
  CHECK(t.T == parse_real_poly("x1^3", 4));
  for (const auto& d : t.D_shift) CHECK(is_zero(d));

  // Independent oracle for the shift: for C = x2^3 with metric G, tau_2 = 1,
  // l = 3/(n+2) x2 and T = x2^3 - (1/2) x2 f2.
  L1Tensor s = extract_L1(lorentz_jet(4, "x2^3"));
  CHECK(s.T == parse_real_poly("x2^3 - 1/2 x2 (2 x1 x4 + x2^2 + x3^2)", 4));
  CHECK(s.D_shift == QVector{0, Rational(1, 2), 0, 0});

  // Works for n = 2 as well.
  Jet3 cay = graph_jet(graph_surface(2, "x1 x2 - 1/3 x1^3"), {0, 0, 0});
  CHECK(extract_L1(cay).T == parse_real_poly("-1/3 x1^3", 2));
}

TEST_CASE("trace-free certification on random cubics") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 5;
    QMatrix a = afh::testing::random_matrix(rng, n, n, 3);
    QMatrix q = a + a.transpose();
    if (is_zero(determinant(q))) continue;
    Jet3 j = lorentz_jet(n, "");
    j.Q = q;
    j.cubic = afh::testing::random_poly<Rational>(rng, n, 3, 6).homogeneous_part(3);
    L1Tensor t = extract_L1(j);
    for (const auto& x : metric_trace(t.T, t.metric_inv)) CHECK(is_zero(x));
    for (std::size_t k = 0; k < n; ++k) {
      QMatrix gl = t.metric * l1_operator(t, k);
      CHECK(gl == gl.transpose());
    }
  }
}

TEST_CASE("pseudo norm") {
  CHECK(pseudo_norm_sq(extract_L1(lorentz_jet(4, ""))) == 0);
  CHECK(pseudo_norm_sq(extract_L1(lorentz_jet(4, "x1^3"))) == 0);
  L1Tensor t;
  t.n = 4;
  t.metric = lorentz_g(4);
  t.metric_inv = *inverse(t.metric);
  t.T = parse_real_poly("x2^3", 4);
  CHECK(pseudo_norm_sq(t) == 1);
}

TEST_CASE("definite jets: nonzero trace-free part has nonzero norm") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    QMatrix a = afh::testing::random_invertible(rng, n, 2);
    Jet3 j = lorentz_jet(n, "");
    j.Q = a.transpose() * a;
    j.cubic = afh::testing::random_poly<Rational>(rng, n, 3, 5).homogeneous_part(3);
    L1Tensor t = extract_L1(j);
    if (!t.is_zero()) CHECK(pseudo_norm_sq(t) > 0);
  }
}

TEST_CASE("classification of the three normal forms") {
  CHECK(classify_L1(extract_L1(lorentz_jet(4, ""))).tag == OrbitTag::Zero);
  CHECK(classify_L1(extract_L1(lorentz_jet(4, "x1^3"))).tag == OrbitTag::CubeNull);
  CHECK(classify_L1(extract_L1(lorentz_jet(4, "3 x1^2 x2"))).tag == OrbitTag::SquareNullLinear);
  OrbitType q = classify_L1(extract_L1(lorentz_jet(5, "3 x1 (x2^2 - 1/2 x3^2 + 1/4 x4^2)")));
  CHECK(q.tag == OrbitTag::NullTimesQuadric);
  CHECK(q.params == std::vector<Rational>{1, Rational(1, 4), Rational(-1, 2)});
  // No null factor at all.
  OrbitType u = classify_L1(extract_L1(lorentz_jet(4, "x2^3")));
  CHECK(u.tag == OrbitTag::Unclassified);
  CHECK_FALSE(u.diagnostic.empty());
  // Irrational eigenvalues in the quadric factor.
  OrbitType irr = classify_L1(extract_L1(lorentz_jet(4, "x1 (x2^2 + x2 x3 - x3^2)")));
  CHECK(irr.tag == OrbitTag::Unclassified);
}

TEST_CASE("linear factors of cubic forms") {
  auto f = rational_linear_factors(parse_real_poly("(x1 + 2x2)(x1 - x3)(x2 + x3)", 3));
  CHECK(f.size() == 3);
  CHECK(rational_linear_factors(parse_real_poly("x1^3 + x2^3 + 2x3^3", 3)).empty());
  CHECK(rational_linear_factors(parse_real_poly("x1 (x2^2 + x3^2)", 3)).size() == 1);
}

TEST_CASE("x1-weighted surface is a null line times a quadric") {
  QVector p{1, 0, 0, 0, 0};
  Hypersurface s = graph_surface(4, "x1 x4 + x1 (x2^2 + x3^2)", p);
  Jet3 j = graph_jet(s, p);
  L1Tensor t = extract_L1(j);
  CHECK(pseudo_norm_sq(t) == 0);
  OrbitType o = classify_L1(t);
  CHECK(o.tag == OrbitTag::NullTimesQuadric);
  CHECK(o.params == std::vector<Rational>{1, 1});
}

TEST_CASE("tube criterion") {
  Hypersurface cubic = graph_surface(4, "x1 x4 + x2^2 + x3^2 + x1^3");
  TubeWitness w = tube_criterion(cubic, cubic.ref_point());
  CHECK(w.result == TubeResult::True);
  CHECK(w.lambda != 0);

  Hypersurface quadric = graph_surface(4, "x1^2 + x2^2 + x3^2 + x4^2");
  CHECK(tube_criterion(quadric, quadric.ref_point()).result == TubeResult::NotApplicable);

  // The Cayley surface: diag(1, 2, 3) is an isotropy element with X(F) = 3F,
  // which scales the normal direction, so the criterion holds.
  Hypersurface cayley = graph_surface(2, "x1 x2 - 1/3 x1^3");
  AffineVectorField scaling = AffineVectorField::zero(3);
  scaling.A(0, 0) = 1;
  scaling.A(1, 1) = 2;
  scaling.A(2, 2) = 3;
  CHECK(scaling.apply(cayley.F()) == cayley.F() * Rational(3));
  CHECK(isotropy_at(symmetry_algebra(cayley), cayley.ref_point()).contains(scaling));
  CHECK(tube_criterion(cayley, cayley.ref_point()).result == TubeResult::True);
}

TEST_CASE("frame independence under affine recoordinatization") {
  std::mt19937 rng(404);
  QVector p{1, 0, 0, 0, 0};
  Hypersurface s = graph_surface(4, "x1 x4 + x1 (x2^2 + x3^2)", p);
  L1Tensor base = extract_L1(graph_jet(s, p));
  OrbitType base_orbit = classify_L1(base);
  for (int trial = 0; trial < 10; ++trial) {
    // x = p + S (x' - p).
    QMatrix m = afh::testing::random_invertible(rng, 5, 2);
    std::vector<RPoly> subst;
    for (std::size_t i = 0; i < 5; ++i) {
      RPoly c = RPoly::constant(5, p[i]);
      for (std::size_t k = 0; k < 5; ++k) c += (RPoly::variable(5, k) - RPoly::constant(5, p[k])) * m(i, k);
      subst.push_back(c);
    }
    Hypersurface moved(4, poly_compose<Rational>(s.F(), subst), p);
    Jet3 j = graph_jet(moved, p);
    Signature sig = second_fundamental_signature(j);
    CHECK(std::max(sig.p, sig.q) == 3);
    CHECK(std::min(sig.p, sig.q) == 1);
    L1Tensor t = extract_L1(j);
    CHECK(pseudo_norm_sq(t) == 0);
    OrbitType o = classify_L1(t);
    CHECK(o.tag == base_orbit.tag);
    CHECK(o.params == base_orbit.params);
  }
}
