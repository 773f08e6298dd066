#include "doctest.h"

#include "afh/algebra/parse.hpp"
#include "afh/holo/cm.hpp"

using namespace afh;

namespace {

// (w, conj w) polynomial from text in z/c variable names.
CPoly wpoly(const std::string& text, std::size_t n) { return parse_complex_poly(text, n); }

CPoly sum_abs(std::size_t n) {
  CPoly s(2 * n);
  for (std::size_t j = 3; j <= n; ++j) s += wpoly("z" + std::to_string(j) + " c" + std::to_string(j), n);
  return s;
}

}  // namespace

TEST_CASE("d_n") {
  CHECK(cm_d(4) == Rational(5, 3));
  CHECK(cm_d(6) == Rational(5, 2));
  CHECK_THROWS_AS(cm_expand(4, 5), std::invalid_argument);
}

TEST_CASE("trace operator") {
  CHECK(cm_trace(wpoly("z1 c2", 4), 4) == wpoly("4", 4));
  CHECK(cm_trace(wpoly("z3 c3", 4), 4) == wpoly("2", 4));
  CHECK(cm_trace(wpoly("z1 z3 c1 c3", 4), 4) == wpoly("2 z1 c1", 4));
  CHECK(cm_trace(wpoly("z1 c1", 4), 4).is_zero());
}

TEST_CASE("expansion agrees with the printed closed form") {
  for (std::size_t n = 4; n <= 6; ++n) {
    CMExpansion e = cm_expand(n, 6);
    CHECK(e.residual_u_terms == 0);
    CHECK(e.jet.conjugate_symmetric());
    BigradedJet closed = cm_closed_form(n, 6);
    CHECK(e.jet.pieces == closed.pieces);
  }
  CMExpansion deep = cm_expand(4, 7);
  CHECK(deep.jet.pieces == cm_closed_form(4, 7).pieces);
}

TEST_CASE("normal form shape and trace conditions") {
  for (std::size_t n = 4; n <= 6; ++n) {
    CMExpansion e = cm_expand(n, 6);
    for (const auto& [kl, p] : e.jet.pieces) {
      CAPTURE(kl.first);
      CAPTURE(kl.second);
      if (kl != std::pair{1, 1}) CHECK(std::min(kl.first, kl.second) >= 2);
    }
    CHECK(cm_trace(e.jet.piece(2, 2), n, 1).is_zero());
    CHECK(cm_trace(e.jet.piece(3, 2), n, 2).is_zero());
    CHECK(cm_trace(e.jet.piece(3, 3), n, 3).is_zero());
  }
}

TEST_CASE("printed low-order pieces match exactly") {
  for (std::size_t n = 4; n <= 6; ++n) {
    CMExpansion e = cm_expand(n, 6);
    auto printed = printed_cm_pieces(n);
    for (auto kl : {std::pair{1, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
      CAPTURE(kl.first);
      CAPTURE(kl.second);
      CHECK(e.jet.piece(kl.first, kl.second) == printed[kl]);
    }
  }
}

TEST_CASE("F33 differs from the printed form by a d-independent term") {
  // Hand expansion of the closed form: the |w1|^4 |w_j|^2 coefficient is
  // -1/32 - d/160 + d^2/800, while the printed form has d^2/800 - d/160.
  for (std::size_t n = 4; n <= 6; ++n) {
    CMExpansion e = cm_expand(n, 6);
    CPoly correction = wpoly("z1^2 c1^2", n) * sum_abs(n) * GaussRational(Rational(-1, 32));
    CHECK(e.jet.piece(3, 3) == printed_cm_pieces(n)[{3, 3}] + correction);
  }
}

TEST_CASE("corrupting one printed coefficient breaks the comparison") {
  CMExpansion e = cm_expand(4, 6);
  auto check = [&](PrintedCM c, std::pair<int, int> kl) {
    CHECK(printed_cm_pieces(4, c)[kl] != e.jet.piece(kl.first, kl.second));
  };
  PrintedCM c;
  c.f11 = Rational(1, 3);
  check(c, {1, 1});
  c = {};
  c.f22 = Rational(1, 9);
  check(c, {2, 2});
  c = {};
  c.f22_re = Rational(1, 4);
  check(c, {2, 2});
  c = {};
  c.f22_sum = -3;
  check(c, {2, 2});
  c = {};
  c.f32 = Rational(1, 8);
  check(c, {3, 2});
}
