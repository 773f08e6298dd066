#pragma once

// Hand-rolled generators for property tests. All seeds are fixed by callers.

#include "afh/algebra/linalg.hpp"
#include "afh/algebra/poly.hpp"

#include <random>

namespace afh::testing {

inline Rational random_rational(std::mt19937& rng, int num_bound = 9, int den_bound = 4) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline GaussRational random_gauss(std::mt19937& rng, int num_bound = 9, int den_bound = 4) {
  Rational re = random_rational(rng, num_bound, den_bound);
  return {re, random_rational(rng, num_bound, den_bound)};
}

template <class K>
K random_scalar(std::mt19937& rng) {
  if constexpr (ScalarTraits<K>::is_complex) {
    return random_gauss(rng);
  } else {
    return random_rational(rng);
  }
}

template <class K>
Poly<K> random_poly(std::mt19937& rng, std::size_t nvars, int max_degree, int terms) {
  std::uniform_int_distribution<int> var(0, static_cast<int>(nvars) - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Poly<K> p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      auto v = static_cast<std::size_t>(var(rng));
      m.set(v, m[v] + 1);
    }
    p.add_term(m, random_scalar<K>(rng));
  }
  return p;
}

inline QMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

inline QMatrix random_invertible(std::mt19937& rng, std::size_t n, int bound = 3) {
  for (;;) {
    QMatrix m = random_matrix(rng, n, n, bound);
    if (!is_zero(determinant(m))) return m;
  }
}

}  // namespace afh::testing
