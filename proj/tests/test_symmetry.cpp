#include "doctest.h"
#include "support.hpp"

#include "afh/algebra/parse.hpp"
#include "afh/symmetry/lie_algebra.hpp"

#include <random>

using namespace afh;

namespace {

Hypersurface graph_surface(std::size_t n, const std::string& rhs, QVector p = {}) {
  RPoly f = parse_real_poly("x" + std::to_string(n + 1) + " - (" + rhs + ")", n + 1);
  if (p.empty()) p = QVector(n + 1, Rational(0));
  return {n, f, p};
}

AffineVectorField random_field(std::mt19937& rng, std::size_t dim) {
  std::uniform_int_distribution<int> d(-4, 4);
  AffineVectorField x = AffineVectorField::zero(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) x.A(i, j) = d(rng);
    x.b[i] = d(rng);
  }
  return x;
}

}  // namespace

TEST_CASE("bracket examples") {
  auto x = AffineVectorField::linear(3, 0, 0);
  auto y = AffineVectorField::translation(3, 0);
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(x, y) == Rational(-1) * y);
  CHECK_THROWS_AS(bracket(x, AffineVectorField::zero(2)), std::invalid_argument);
}

TEST_CASE("bracket satisfies the Jacobi identity and matches the derivation commutator") {
  std::mt19937 rng(31);
  RPoly f = parse_real_poly("x1^3 - 2x1x2x3 + x3^2 + x2", 3);
  for (int t = 0; t < 10; ++t) {
    auto a = random_field(rng, 3), b = random_field(rng, 3), c = random_field(rng, 3);
    auto jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(jac.is_zero());
    // [X, Y] acts as X Y - Y X on functions.
    CHECK(bracket(a, b).apply(f) == a.apply(b.apply(f)) - b.apply(a.apply(f)));
  }
}

TEST_CASE("symmetry algebra of the paraboloid") {
  Hypersurface s = graph_surface(2, "x1^2 + x2^2");
  LieAlgebraBasis h = symmetry_algebra(s);
  CHECK(h.size() == 4);
  CHECK(h.is_closed());
  // Independent oracle: four explicit fields.
  std::vector<AffineVectorField> expected;
  auto t1 = AffineVectorField::translation(3, 0);
  t1.A(2, 0) = 2;  // d1 + 2 x1 d3
  auto t2 = AffineVectorField::translation(3, 1);
  t2.A(2, 1) = 2;
  auto rot = AffineVectorField::linear(3, 0, 1);
  rot.A(1, 0) = -1;
  auto scale = AffineVectorField::linear(3, 0, 0);
  scale.A(1, 1) = 1;
  scale.A(2, 2) = 2;
  for (const auto& x : {t1, t2, rot, scale}) {
    CHECK(h.contains(x));
    CHECK(x.apply(s.F()).divide_exact(s.F()).has_value());
  }
  LieAlgebraBasis iso = isotropy_at(h, s.ref_point());
  CHECK(iso.size() == 2);
  for (const auto& x : iso.fields())
    for (auto v : x.evaluate(s.ref_point())) CHECK(is_zero(v));
  CHECK(transitivity_rank(h, s.ref_point(), s) == 2);
}

TEST_CASE("symmetry algebra of a cubic Lorentzian surface") {
  Hypersurface s = graph_surface(4, "x1 x4 + x2^2 + x3^2 + x1^3");
  LieAlgebraBasis h = symmetry_algebra(s);
  // n + dim of the stabilizer 1 + (n-2)(n-3)/2 + (n-2) = 4 + 4.
  CHECK(h.size() == 8);
  CHECK(h.is_closed());
  CHECK(transitivity_rank(h, s.ref_point(), s) == 4);
  CHECK(isotropy_at(h, s.ref_point()).size() == 4);
}

TEST_CASE("generic perturbation has a small symmetry algebra") {
  Hypersurface s = graph_surface(2, "x1^2 + x2^2 + x1^4 + 3x2^5");
  LieAlgebraBasis h = symmetry_algebra(s);
  CHECK(h.size() < 3);
}

TEST_CASE("isotropy of the x1-weighted surface at a regular point") {
  QVector p{1, 0, 0, 0, 0};
  Hypersurface s = graph_surface(4, "x1 x4 + x1 (x2^2 + x3^2)", p);
  LieAlgebraBasis h = symmetry_algebra(s);
  CHECK(isotropy_at(h, p).size() == 2);  // (n-2)(n-3)/2 + 1
  CHECK(transitivity_rank(h, p, s) == 4);
  CHECK(h.size() == 6);
}

TEST_CASE("isotropy and transitivity edge cases") {
  std::vector<AffineVectorField> tr;
  for (std::size_t i = 0; i < 3; ++i) tr.push_back(AffineVectorField::translation(3, i));
  LieAlgebraBasis t(3, tr);
  CHECK(isotropy_at(t, {5, -1, Rational(1, 2)}).empty());
  Hypersurface s = graph_surface(2, "x1^2 + x2^2");
  CHECK(transitivity_rank(LieAlgebraBasis(3), s.ref_point(), s) == 0);
  CHECK_THROWS_AS(transitivity_rank(t, {0, 0, 1}, s), std::invalid_argument);
  CHECK_THROWS_AS(isotropy_at(t, {0, 0}), std::invalid_argument);
}

TEST_CASE("surface validation") {
  CHECK_THROWS_AS(Hypersurface(2, RPoly(3), {0, 0, 0}), InvalidSurface);
  CHECK_THROWS_AS(graph_surface(2, "x1^2", {1, 0, 0}), InvalidSurface);
  RPoly cone = parse_real_poly("x3^2 - x1^2 - x2^2", 3);
  CHECK_THROWS_AS(Hypersurface(2, cone, {0, 0, 0}), InvalidSurface);
  Hypersurface reducible(2, parse_real_poly("x1 (x3 - x2^2)", 3), {1, 0, 0});
  CHECK_THROWS_AS(symmetry_algebra(reducible), InvalidSurface);
  SymmetryOptions opt;
  opt.mu_degree = 1;
  CHECK(symmetry_algebra(reducible, opt).size() > 0);
}

TEST_CASE("filtration of the quadric") {
  const std::size_t n = 4;
  Hypersurface s = graph_surface(n, "x1^2 + x2^2 + x3^2 + x4^2");
  LieAlgebraBasis h = symmetry_algebra(s);
  CHECK(h.size() == n + n * (n - 1) / 2 + 1);
  Filtration f = filtration(h, full_affine_algebra(n + 1), s.ref_point());
  CHECK(f.limit().size() == n * (n - 1) / 2 + 1);
  CHECK(f.limit().same_span(isotropy_at(h, s.ref_point())));
  for (std::size_t i = 0; i + 1 < f.dims.size(); ++i) CHECK(f.dims[i] >= f.dims[i + 1]);
  CHECK(f.dims[f.stabilized_at] == f.dims[f.stabilized_at + 1]);
  for (std::size_t i = 0; i <= f.stabilized_at; ++i) CHECK(check_prop_cs(h, f, i));
}

TEST_CASE("filtration of a translation algebra") {
  std::vector<AffineVectorField> tr;
  for (std::size_t i = 0; i < 3; ++i) tr.push_back(AffineVectorField::translation(3, i));
  LieAlgebraBasis h(3, tr);
  Filtration f = filtration(h, h, {1, 2, 3});
  CHECK(f.dims.front() == 0);
  CHECK(f.stabilized_at == 0);
  CHECK(check_prop_cs(h, f, f.stabilized_at));
}

TEST_CASE("filtration of a surface with a quartic term") {
  Hypersurface s = graph_surface(4, "x1 x4 + x2^2 + x3^2 + x1^2 x2");
  LieAlgebraBasis h = symmetry_algebra(s);
  Filtration f = filtration(h, full_affine_algebra(5), s.ref_point());
  // 1 + (n-3)(n-4)/2 + (n-3) = 2.
  CHECK(f.limit().size() == 2);
  CHECK(f.limit().same_span(isotropy_at(h, s.ref_point())));
}

TEST_CASE("filtration rejects a non-closed h") {
  std::vector<AffineVectorField> fields{AffineVectorField::linear(2, 0, 1), AffineVectorField::translation(2, 1)};
  LieAlgebraBasis h(2, fields);
  CHECK_FALSE(h.is_closed());
  CHECK_THROWS_AS(filtration(h, full_affine_algebra(2), {0, 0}), std::invalid_argument);
}

TEST_CASE("closure check detects a broken chain") {
  // h = span{d2}, g = span{x2 d1}: [x2 d1, d2] = -d1 lies outside h + g.
  LieAlgebraBasis h(2, {AffineVectorField::translation(2, 1)});
  LieAlgebraBasis g(2, {AffineVectorField::linear(2, 0, 1)});
  CHECK(bracket(g[0], h[0]) == Rational(-1) * AffineVectorField::translation(2, 0));
  Filtration fake{{g, g}, {1, 1}, 0};
  CHECK_FALSE(check_prop_cs(h, fake, 0));
}

TEST_CASE("structure constants reproduce brackets") {
  Hypersurface s = graph_surface(2, "x1^2 + x2^2");
  auto h = LieAlgebraBasis::with_structure(symmetry_algebra(s));
  REQUIRE(h.has_value());
  const auto& c = *h->structure();
  for (std::size_t i = 0; i < h->size(); ++i)
    for (std::size_t j = 0; j < h->size(); ++j)
      CHECK(combine(h->fields(), c[i][j]) == bracket((*h)[i], (*h)[j]));
  LieAlgebraBasis open(2, {AffineVectorField::linear(2, 0, 1), AffineVectorField::translation(2, 1)});
  CHECK_FALSE(LieAlgebraBasis::with_structure(open).has_value());
}
