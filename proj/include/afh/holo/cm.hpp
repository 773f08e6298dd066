#pragma once

#include "afh/algebra/poly.hpp"

#include <map>
#include <string>
#include <utility>

namespace afh {

// Pieces F_{k,l} of Im w_{n+1} = sum F_{k,l}(w', conj w'), as polynomials in
// the 2n variables (w_1..w_n, conj w_1..conj w_n).
struct BigradedJet {
  std::size_t n = 0;
  int cap = 0;
  std::map<std::pair<int, int>, CPoly> pieces;

  // Zero polynomial when the piece is absent.
  CPoly piece(int k, int l) const;
  // F_{k,l} == conj F_{l,k} for all stored pieces.
  bool conjugate_symmetric() const;
};

// d_n = 5 (n - 2) / (n + 2).
Rational cm_d(std::size_t n);

struct CMExpansion {
  BigradedJet jet;
  // Terms of the solved series that still depend on Re w_{n+1}; zero when
  // the elimination succeeded.
  std::size_t residual_u_terms = 0;
  int iterations = 0;
};

// Substitutes the printed change of variables into the tube equation and
// solves for Im w_{n+1} up to total degree cap. Requires n >= 3, cap >= 6.
CMExpansion cm_expand(std::size_t n, int cap);

// Series expansion of the printed closed form
// Im w_{n+1} / 10 = Re N / ((2 + w_1)(2 + conj w_1)(20 - d_n |w_1|^2)).
BigradedJet cm_closed_form(std::size_t n, int cap);

// Coefficients of the printed F_11, F_22, F_32, F_33; tests perturb single
// entries to confirm the comparison is sensitive.
struct PrintedCM {
  Rational f11 = Rational(1, 2);
  Rational f22 = Rational(1, 8);
  Rational f22_re = Rational(1, 5);  // multiplies d_n
  Rational f22_sum = -4;             // over (n + 2)
  Rational f32 = Rational(1, 16);
  Rational f33 = Rational(1, 160);   // multiplies d_n |w_1|^4
  Rational f33_re = Rational(1, 5);  // multiplies d_n
};

// Printed pieces keyed by bidegree: (1,1), (2,2), (3,2), (2,3), (3,3).
std::map<std::pair<int, int>, CPoly> printed_cm_pieces(std::size_t n, const PrintedCM& c = {});

// tr = 4 (d^2/dw_1 d conj w_2 + d^2/dw_2 d conj w_1) + 2 sum_{j>=3} d^2/dw_j d conj w_j,
// applied k times.
CPoly cm_trace(const CPoly& f, std::size_t n, int k = 1);

}  // namespace afh
