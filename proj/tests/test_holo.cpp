#include "doctest.h"
#include "support.hpp"

#include "afh/algebra/parse.hpp"
#include "afh/holo/field.hpp"

#include <random>

using namespace afh;

namespace {

const GaussRational kI = GaussRational::i();

// Holomorphic polynomial in z1..z_m parsed from text without conjugates.
CPoly holomorphic(const std::string& text, std::size_t m) {
  CPoly both = parse_complex_poly(text, m);
  CPoly out(m);
  for (const auto& [mono, c] : both.terms()) {
    Monomial z;
    for (std::size_t v = 0; v < m; ++v) {
      REQUIRE(mono[v + m] == 0);
      z.set(v, mono[v]);
    }
    out.add_term(z, c);
  }
  return out;
}

HoloVectorField field(std::size_t n, std::vector<std::string> comps) {
  HoloVectorField f = HoloVectorField::zero(n);
  for (std::size_t j = 0; j < comps.size(); ++j)
    if (!comps[j].empty()) f.comps[j] = holomorphic(comps[j], n + 1);
  return f;
}

// Real part of a (z, conj z) polynomial evaluated at a Gaussian point.
GaussRational eval_at(const CPoly& p, const CVector& z) {
  CVector both = z;
  for (const auto& c : z) both.push_back(c.conj());
  return p.evaluate(both);
}

}  // namespace

TEST_CASE("real part action examples") {
  // Re z1 = 0 and the imaginary translation.
  RealDefiningPoly plane(0, parse_complex_poly("z1 + c1", 1));
  HoloVectorField it = field(0, {"i"});
  CHECK(real_part_action(it, plane).is_zero());
  RealDefiningPoly circle(0, parse_complex_poly("z1 c1 - 1", 1));
  HoloVectorField euler = field(0, {"z1"});
  CHECK(real_part_action(euler, circle) == parse_complex_poly("2 z1 c1", 1));
  CHECK(holo_tangent(euler, circle) == false);  // 2|z|^2 is not a multiple of |z|^2 - 1
  CHECK_THROWS_AS(RealDefiningPoly(0, parse_complex_poly("i z1", 1)), std::invalid_argument);
}

TEST_CASE("real part action is real") {
  std::mt19937 rng(3);
  RealDefiningPoly rho = gamma_tilde(4);
  for (int trial = 0; trial < 10; ++trial) {
    HoloVectorField f = HoloVectorField::zero(4);
    for (auto& c : f.comps) c = afh::testing::random_poly<GaussRational>(rng, 5, 2, 3);
    CPoly r = real_part_action(f, rho);
    CHECK(conjugate_swap(r) == r);
  }
}

TEST_CASE("brackets") {
  HoloVectorField a = field(0, {"i"}), b = field(0, {"z1"});
  CHECK(holo_bracket(a, a).is_zero());
  CHECK(holo_bracket(a, b) == a);
  // Antisymmetry and Jacobi on random fields.
  std::mt19937 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    HoloVectorField x = HoloVectorField::zero(2), y = x, z = x;
    for (auto* f : {&x, &y, &z})
      for (auto& c : f->comps) c = afh::testing::random_poly<GaussRational>(rng, 3, 2, 3);
    CHECK((holo_bracket(x, y) + holo_bracket(y, x)).is_zero());
    HoloVectorField jac = holo_bracket(x, holo_bracket(y, z)) + holo_bracket(y, holo_bracket(z, x)) +
                          holo_bracket(z, holo_bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("generator list sizes") {
  for (std::size_t n = 4; n <= 6; ++n) CHECK(section6_generators(n).size() == n * n - 2 * n + 8);
  CHECK(section6_generators(4).size() == 16);
  CHECK(section6_generators(5).size() == 23);
}

TEST_CASE("every generator is tangent") {
  for (std::size_t n = 4; n <= 6; ++n) {
    RealDefiningPoly rho = gamma_tilde(n);
    for (const auto& g : section6_generators(n)) {
      CAPTURE(g.label);
      CHECK(holo_tangent(g.field, rho));
    }
  }
  // The transitive field d/dz_2 + z_1 d/dz_{n+1} is tangent with zero multiplier.
  auto gens = section6_generators(4);
  Tangency t = tangency(gens[2 * 4].field, gamma_tilde(4));
  REQUIRE(t.multiplier.has_value());
  CHECK(t.multiplier->is_zero());
  // The last field has the nonconstant real multiplier -Im z_1.
  Tangency last = tangency(gens.back().field, gamma_tilde(4));
  REQUIRE(last.multiplier.has_value());
  CHECK(*last.multiplier == parse_complex_poly("1/2 i z1 - 1/2 i c1", 5));
}

TEST_CASE("non-tangent fields") {
  RealDefiningPoly rho = gamma_tilde(4);
  CHECK_FALSE(holo_tangent(field(4, {"1"}), rho));
  // Perturbing rho by |z1|^4 breaks tangency of every field that moves z1.
  RealDefiningPoly bent(4, rho.rho + parse_complex_poly("z1^2 c1^2", 5));
  for (const auto& g : section6_generators(4)) {
    if (g.field.comps[0].is_zero()) continue;
    CAPTURE(g.label);
    CHECK_FALSE(holo_tangent(g.field, bent));
  }
}

TEST_CASE("printed forms of the corrected fields would fail") {
  RealDefiningPoly rho = gamma_tilde(4);
  // Y_{n+3} as printed: -2 z3 d/dz1 + d/dz3.
  CHECK_FALSE(holo_tangent(field(4, {"-2 z3", "", "1"}), rho));
  // I_{3,4} without the d/dz2 correction.
  CHECK_FALSE(holo_tangent(field(4, {"", "", "i z4", "i z3"}), rho));
}

TEST_CASE("closure and isotropy") {
  for (std::size_t n = 4; n <= 5; ++n) {
    auto gens = fields_of(section6_generators(n));
    ClosureResult c = algebra_closure(gens);
    CHECK(c.closed);
    CHECK(isotropy_dim_at(gens, section6_base_point(n), gamma_tilde(n)) == n * n - 4 * n + 7);
    std::vector<HoloVectorField> transitive(gens.begin(), gens.begin() + 2 * n + 1);
    CHECK(isotropy_dim_at(transitive, section6_base_point(n), gamma_tilde(n)) == 0);
    CHECK(real_span_dim(gens) == n * n - 2 * n + 8);
  }
  auto gens = fields_of(section6_generators(4));
  std::vector<HoloVectorField> translations(gens.begin(), gens.begin() + 5);
  ClosureResult abel = algebra_closure(translations);
  CHECK(abel.closed);
  for (const auto& row : abel.structure)
    for (const auto& v : row)
      for (const auto& x : v) CHECK(x == 0);
  std::vector<HoloVectorField> truncated(gens.begin(), gens.end() - 1);
  CHECK(algebra_closure(truncated).closed);
  CHECK_THROWS_AS(isotropy_dim_at(gens, CVector(5, GaussRational(1)), gamma_tilde(4)), std::invalid_argument);
  CHECK_THROWS_AS(algebra_closure({gens[0], gens[0]}), std::invalid_argument);
}

TEST_CASE("sl2 triple") {
  for (std::size_t n = 4; n <= 6; ++n) {
    Sl2Triple t = sl2_triple(n);
    ClosureResult c = algebra_closure({t.a, t.h, t.b});
    REQUIRE(c.closed);
    // [H, A] = 2B - A and [H, B] = B in the printed basis.
    CHECK(c.structure[1][0] == QVector{-1, 0, 2});
    CHECK(c.structure[1][2] == QVector{0, 0, 1});
    Congruence k = congruence_diagonalize(killing_form(c));
    CHECK(k.p == 2);
    CHECK(k.q == 1);
    CVector p0 = section6_base_point(n);
    auto vanishes = [&](const HoloVectorField& f) {
      for (const auto& z : f.evaluate(p0))
        if (!z.is_zero()) return false;
      return true;
    };
    CHECK(vanishes(t.a));
    CHECK_FALSE(vanishes(t.h));
    CHECK_FALSE(vanishes(t.b));
  }
}

TEST_CASE("gamma tilde matches the real equation at random points") {
  std::mt19937 rng(8);
  RealDefiningPoly rho = gamma_tilde(4);
  for (int trial = 0; trial < 10; ++trial) {
    CVector z;
    for (int j = 0; j < 5; ++j) z.push_back(afh::testing::random_gauss(rng));
    auto x = [&](int j) { return z[j].re(); };
    Rational expected = x(4) - x(0) * x(1) - x(0) * (x(2) * x(2) + x(3) * x(3));
    CHECK(eval_at(rho.rho, z) == GaussRational(expected));
  }
}
