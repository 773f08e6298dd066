#include "afh/algebra/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace afh {

namespace {

using IntRow = std::vector<Integer>;

IntRow clear_denominators(const QVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j].get_num() * (l / v[j].get_den());
  return out;
}

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free Gauss-Jordan. After step k every entry is a k-minor of the
// input, so each division by the previous pivot is exact.
Echelon eliminate(std::vector<IntRow> a, std::size_t cols) {
  Echelon e;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    // Smallest nonzero magnitude as pivot keeps the entries small.
    std::size_t best = a.size();
    for (std::size_t i = r; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (best == a.size() || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == a.size()) continue;
    std::swap(a[r], a[best]);
    const Integer piv = a[r][c];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      const Integer f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        Integer t = piv * a[i][j] - f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  a.resize(r);
  for (auto& row : a) make_primitive(row);
  e.rows = std::move(a);
  return e;
}

std::vector<IntRow> integer_rows(const QMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(clear_denominators(m.row(i)));
  return rows;
}

}  // namespace

QVector primitive(const QVector& v) {
  IntRow row = clear_denominators(v);
  make_primitive(row);
  auto first = std::find_if(row.begin(), row.end(), [](const Integer& x) { return sgn(x) != 0; });
  bool flip = first != row.end() && sgn(*first) < 0;
  QVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = Rational(flip ? Integer(-row[j]) : row[j]);
  return out;
}

Echelon echelon(const QMatrix& m) { return eliminate(integer_rows(m), m.cols()); }

std::size_t rank(const QMatrix& m) { return echelon(m).rank; }

std::size_t rank(const std::vector<QVector>& vectors, std::size_t dim) {
  return rank(QMatrix::from_rows(vectors, dim));
}

std::vector<QVector> nullspace(const QMatrix& m) {
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) {
      const std::size_t pc = e.pivot_cols[r];
      v[pc] = Rational(-e.rows[r][f], e.rows[r][pc]);
      v[pc].canonicalize();
    }
    basis.push_back(primitive(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = echelon(aug);
  QVector x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < e.rank; ++r) {
    const std::size_t pc = e.pivot_cols[r];
    if (pc == m.cols()) return std::nullopt;
    x[pc] = Rational(e.rows[r][m.cols()], e.rows[r][pc]);
    x[pc].canonicalize();
  }
  return x;
}

std::optional<QVector> span_coordinates(const std::vector<QVector>& basis, const QVector& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!is_zero(x)) return std::nullopt;
    return QVector{};
  }
  return solve(QMatrix::from_columns(basis, v.size()), v);
}

bool in_span(const std::vector<QVector>& vectors, const QVector& v, std::size_t dim) {
  if (v.size() != dim) throw std::invalid_argument("in_span: vector length mismatch");
  if (vectors.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
  return solve(QMatrix::from_columns(vectors, dim), v).has_value();
}

std::vector<std::size_t> independent_subset(const std::vector<QVector>& vectors, std::size_t dim) {
  // Pivot columns of the matrix whose columns are the vectors.
  if (vectors.empty()) return {};
  Echelon e = echelon(QMatrix::from_columns(vectors, dim));
  return e.pivot_cols;
}

std::vector<QVector> annihilator(const std::vector<QVector>& vectors, std::size_t dim) {
  return nullspace(QMatrix::from_rows(vectors, dim));
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = echelon(aug);
  if (e.rank < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) {
      inv(r, j) = Rational(e.rows[r][n + j], e.rows[r][r]);
      inv(r, j).canonicalize();
    }
  return inv;
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

namespace {

// Simultaneous row/column operation on a symmetric matrix, with the matching
// column operation on the accumulated congruence: col dst += f * col src.
void add_congruent(QMatrix& a, QMatrix& b, std::size_t dst, std::size_t src, const Rational& f) {
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) a(j, dst) += f * a(j, src);
  for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
  for (std::size_t j = 0; j < n; ++j) b(j, dst) += f * b(j, src);
}

void swap_congruent(QMatrix& a, QMatrix& b, std::size_t i, std::size_t k) {
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, k));
  for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
  for (std::size_t j = 0; j < n; ++j) std::swap(b(j, i), b(j, k));
}

}  // namespace

Congruence congruence_diagonalize(const QMatrix& q) {
  if (!q.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: matrix is not symmetric");
  const std::size_t n = q.rows();
  QMatrix a = q;
  QMatrix b = QMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t j = k + 1;
      while (j < n && is_zero(a(j, j))) ++j;
      if (j < n) {
        swap_congruent(a, b, k, j);
      } else {
        j = k + 1;
        while (j < n && is_zero(a(k, j))) ++j;
        if (j == n) continue;  // row k already zero
        // Every remaining diagonal entry is zero, so adding row/col j gives 2 a_kj.
        add_congruent(a, b, k, j, Rational(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      add_congruent(a, b, i, k, Rational(-a(i, k) / a(k, k)));
    }
  }
  Congruence out{b, a, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    int s = sgn(a(i, i));
    if (s > 0) ++out.p;
    if (s < 0) ++out.q;
  }
  out.rank = out.p + out.q;
  return out;
}

QVector charpoly(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.rows();
  QVector c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    QMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

// Positive divisors of |v|; empty when |v| is too large for trial division.
std::vector<Integer> divisors(const Integer& v) {
  Integer a = abs(v);
  if (mpz_sizeinbase(a.get_mpz_t(), 2) > 62) return {};
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational horner(const QVector& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Synthetic division by (t - x); requires x to be a root.
QVector deflate(const QVector& c, const Rational& x) {
  const std::size_t d = c.size() - 1;
  QVector q(d, Rational(0));
  Rational carry = 0;
  for (std::size_t i = d; i-- > 0;) {
    carry = carry * x + c[i + 1];
    q[i] = carry;
  }
  return q;
}

}  // namespace

std::vector<Rational> rational_roots(const QVector& coeffs, bool* complete) {
  QVector c = coeffs;
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  if (c.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  while (c.size() > 1 && is_zero(c.front())) {
    roots.push_back(0);
    c.erase(c.begin());
  }
  bool progress = true;
  while (c.size() > 1 && progress) {
    progress = false;
    IntRow ints = clear_denominators(c);
    auto ps = divisors(ints.front());
    auto qs = divisors(ints.back());
    for (const auto& p : ps) {
      for (const auto& qd : qs) {
        for (int s : {1, -1}) {
          Rational x(Integer(s * p), qd);
          x.canonicalize();
          if (!is_zero(horner(c, x))) continue;
          roots.push_back(x);
          c = deflate(c, x);
          progress = true;
          break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  if (complete) *complete = c.size() == 1;
  std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return roots;
}

std::vector<std::string> to_strings(const QVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::vector<std::string>> to_strings(const QMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_strings(m.row(i)));
  return out;
}

}  // namespace afh
