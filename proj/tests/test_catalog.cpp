#include "doctest.h"
#include "support.hpp"

#include "afh/algebra/parse.hpp"
#include "afh/catalog/catalog.hpp"
#include "afh/invariants/l1.hpp"

#include <random>

using namespace afh;

namespace {

GroupParams random_params(std::mt19937& rng, std::size_t n) {
  GroupParams g;
  do g.q = abs(afh::testing::random_rational(rng));
  while (sgn(g.q) == 0);
  do g.r = afh::testing::random_rational(rng);
  while (sgn(g.r) == 0);
  g.t = afh::testing::random_rational(rng);
  for (std::size_t j = 0; j + 2 < n; ++j) g.s.push_back(afh::testing::random_rational(rng));
  return g;
}

QVector random_point(std::mt19937& rng, std::size_t dim) {
  QVector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(afh::testing::random_rational(rng));
  return v;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("t2.8").has_value());
  CHECK(family_name(Family::T2_3) == "t2.3");
}

TEST_CASE("printed normal forms") {
  CHECK(make_surface({Family::T2_1, 4, {}}).F() == parse_real_poly("x5 - x1 x4 - x2^2 - x3^2", 5));
  CHECK(make_surface({Family::T2_7, 4, {}}).F() ==
        parse_real_poly("(1 - 2x4)(x5 + x1 x4 + 1/2 (x2^2 + x3^2)) + x4 x2^2", 5));
  Hypersurface g = make_surface({Family::Sec6Gamma, 4, {}});
  CHECK(g.F() == parse_real_poly("x5 - x1 x2 - x1 (x3^2 + x4^2)", 5));
  REQUIRE(g.constraint().has_value());
  CHECK(g.constraint()->holds(g.ref_point()));
  CHECK(make_surface({Family::T2_3, 5, Rational(2, 7)}).F() ==
        parse_real_poly("x6 - x1 x5 - x2^2 - x3^2 - x4^2 - x1^2 x2 - 2/7 x1^4", 6));
  CHECK(make_surface({Family::T1Quadric, 2, {}}).F() == parse_real_poly("x3 - x1^2 - x2^2", 3));
  CHECK(make_surface({Family::T2_4, 4, {}}).ref_point() == QVector{1, 0, 0, 0, 0});
}

TEST_CASE("invalid surface ids") {
  CHECK_THROWS_AS(make_surface({Family::T2_1, 3, {}}), std::invalid_argument);
  CHECK_THROWS_AS(make_surface({Family::T2_3, 4, {}}), std::invalid_argument);
  CHECK_THROWS_AS(make_surface({Family::T2_2, 4, Rational(1)}), std::invalid_argument);
}

TEST_CASE("both printed forms of t2.5 agree") {
  for (std::size_t n = 4; n <= 7; ++n) CHECK(make_surface({Family::T2_5, n, {}}).F() == t2_5_alternate(n));
}

TEST_CASE("every catalog surface is regular at its reference point") {
  for (std::size_t n = 4; n <= 6; ++n)
    for (Family f : all_families()) {
      SurfaceId id{f, n, f == Family::T2_3 ? std::optional<Rational>(Rational(1, 7)) : std::nullopt};
      Hypersurface s = make_surface(id);
      CHECK(s.contains(s.ref_point()));
    }
}

TEST_CASE("group action examples") {
  const std::size_t n = 5;
  QVector x{3, -1, 2, Rational(1, 2), 7, 0};
  CHECK(group_act(GroupParams::identity(n), x) == x);
  GroupParams g{2, -3, Rational(1, 2), {1, Rational(-2, 3), 5}};
  QVector base(n + 1, Rational(0));
  base[0] = 1;
  base[n] = 1;
  Rational ssq = 1 + Rational(4, 9) + 25;
  QVector expected{2, 9 * Rational(1, 2), -3, 2, -15, 2 * 9 * (1 + Rational(1, 2) + ssq)};
  CHECK(group_act(g, base) == expected);
  CHECK_THROWS_AS(group_act(GroupParams{0, 1, 0, {0, 0, 0}}, x), std::invalid_argument);
}

TEST_CASE("group law: composition, inverses and associativity") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 5;
    GroupParams a = random_params(rng, n), b = random_params(rng, n), c = random_params(rng, n);
    QVector x = random_point(rng, n + 1);
    CHECK(group_act(compose(a, b), x) == group_act(a, group_act(b, x)));
    CHECK(group_act(compose(a, inverse(a)), x) == x);
    CHECK(group_act(compose(inverse(a), a), x) == x);
    GroupParams l = compose(compose(a, b), c), r = compose(a, compose(b, c));
    CHECK(l.q == r.q);
    CHECK(l.r == r.r);
    CHECK(l.t == r.t);
    CHECK(l.s == r.s);
  }
}

TEST_CASE("surface invariance") {
  std::mt19937 rng(17);
  CHECK(surface_invariance(GroupParams::identity(4), 4));
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + trial % 4;
    GroupParams g = random_params(rng, n);
    CHECK(surface_invariance(g, n));
    CHECK_FALSE(surface_invariance(g, n, {.flip_x2_sign = true}));
  }
}

TEST_CASE("transitivity identities") {
  CHECK(verify_transitivity(4, Side::Greater));
  CHECK(verify_transitivity(5, Side::Less));
  for (std::size_t n = 3; n <= 7; ++n) {
    CHECK(verify_transitivity(n, Side::Greater));
    CHECK(verify_transitivity(n, Side::Less));
  }
  CHECK_FALSE(verify_transitivity(4, Side::Greater, {.map = {.drop_sum_s_sq = true}}));
  CHECK_FALSE(verify_transitivity(4, Side::Greater, {.map = {.flip_x2_sign = true}}));
  CHECK_FALSE(verify_transitivity(5, Side::Less, {.wrong_side = true}));
}

TEST_CASE("lorentzian normal form verification chain") {
  for (std::size_t n = 4; n <= 6; ++n) {
    for (Family f : all_families()) {
      if (!is_theorem2(f)) continue;
      std::vector<std::optional<Rational>> alphas{std::nullopt};
      if (f == Family::T2_3) alphas = {Rational(0), Rational(1, 12), Rational(1, 7), Rational(1), Rational(-3)};
      for (const auto& alpha : alphas) {
        SurfaceId id{f, n, alpha};
        CAPTURE(id.label());
        Hypersurface s = make_surface(id);
        Jet3 j = graph_jet(s, s.ref_point());
        Signature sig = second_fundamental_signature(j);
        CHECK(std::max(sig.p, sig.q) == n - 1);
        CHECK(std::min(sig.p, sig.q) == 1);
        LieAlgebraBasis sym = symmetry_algebra(s);
        LieAlgebraBasis iso = isotropy_at(sym, s.ref_point());
        CHECK(iso.size() >= (n - 2) * (n - 3) / 2);
        CHECK(transitivity_rank(sym, s.ref_point(), s) == n);
        L1Tensor t = extract_L1(adapt_frame(j).jet);
        CHECK(pseudo_norm_sq(t) == 0);
        if (f == Family::T2_1) {
          // The Lorentzian quadric: trace-free part vanishes.
          CHECK(classify_L1(t).tag == OrbitTag::Zero);
          CHECK(tube_criterion(s, s.ref_point(), iso).result == TubeResult::NotApplicable);
          continue;
        }
        CHECK_FALSE(t.is_zero());
        OrbitTag expected = f == Family::T2_2   ? OrbitTag::CubeNull
                            : f == Family::T2_3 ? OrbitTag::SquareNullLinear
                                                : OrbitTag::NullTimesQuadric;
        CHECK(classify_L1(t).tag == expected);
        CHECK(tube_criterion(s, s.ref_point(), iso).result == TubeResult::True);
      }
    }
  }
}
