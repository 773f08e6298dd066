#include "afh/invariants/frame.hpp"

#include <map>
#include <stdexcept>

namespace afh {

MetricForm MetricForm::standard(std::size_t p, std::size_t q) {
  if (q > p) throw std::invalid_argument("MetricForm::standard requires p >= q");
  const std::size_t n = p + q;
  MetricForm m;
  m.p = p;
  m.q = q;
  m.G = QMatrix(n, n);
  for (std::size_t i = 0; i < q; ++i) m.G(i, n - q + i) = m.G(n - q + i, i) = 1;
  for (std::size_t i = q; i < n - q; ++i) m.G(i, i) = 1;
  return m;
}

std::pair<Integer, Rational> square_class(const Rational& r) {
  if (sgn(r) == 0) throw std::domain_error("square_class of zero");
  Integer m = r.get_num() * r.get_den();
  Integer f = sgn(m) < 0 ? -1 : 1;
  m = abs(m);
  Integer k = 1;
  // Trial division to a fixed bound; a leftover cofactor is square-free
  // unless it is a perfect square (desk-scale coefficients are small).
  for (unsigned long d = 2; d <= 100000 && Integer(d) * d <= m; ++d) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      m /= d;
      ++e;
    }
    for (int t = 0; t < e / 2; ++t) k *= d;
    if (e % 2) f *= d;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
      k *= root;
    } else {
      f *= m;
    }
  }
  Rational kr(k, r.get_den());
  kr.canonicalize();
  return {f, kr};
}

namespace {

struct Axis {
  QVector v;  // column in the old tangent coordinates
  Integer f;  // (v, v) in the oriented form, square-free
};

std::optional<std::vector<QVector>> arrange(std::vector<Axis> axes, const Integer& c, std::size_t q) {
  // Merge pairs of equal entries f, f into 2f, 2f via (v1 + v2, v1 - v2).
  std::map<Integer, std::vector<std::size_t>> off_class;
  std::vector<Axis> pos, neg;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (abs(axes[i].f) == c) {
      (sgn(axes[i].f) > 0 ? pos : neg).push_back(axes[i]);
    } else {
      off_class[axes[i].f].push_back(i);
    }
  }
  for (const auto& [f, ids] : off_class) {
    auto [f2, k2] = square_class(Rational(2 * f));
    if (abs(f2) != c || ids.size() % 2 != 0) return std::nullopt;
    for (std::size_t t = 0; t < ids.size(); t += 2) {
      const QVector& a = axes[ids[t]].v;
      const QVector& b = axes[ids[t + 1]].v;
      QVector s(a.size()), d(a.size());
      for (std::size_t r = 0; r < a.size(); ++r) {
        s[r] = (a[r] + b[r]) / k2;
        d[r] = (a[r] - b[r]) / k2;
      }
      auto& bucket = sgn(f2) > 0 ? pos : neg;
      bucket.push_back({s, f2});
      bucket.push_back({d, f2});
    }
  }
  if (neg.size() != q || pos.size() < q) return std::nullopt;
  // Hyperbolic pairs: x = e_a + e_b, y = (e_a - e_b)/2 give (x,x) = (y,y) = 0, (x,y) = c.
  std::vector<QVector> first, last, middle;
  for (std::size_t i = 0; i < q; ++i) {
    const QVector& a = pos[i].v;
    const QVector& b = neg[i].v;
    QVector x(a.size()), y(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
      x[r] = a[r] + b[r];
      y[r] = (a[r] - b[r]) / 2;
    }
    first.push_back(x);
    last.push_back(y);
  }
  for (std::size_t i = q; i < pos.size(); ++i) middle.push_back(pos[i].v);
  std::vector<QVector> cols = first;
  cols.insert(cols.end(), middle.begin(), middle.end());
  cols.insert(cols.end(), last.begin(), last.end());
  return cols;
}

}  // namespace

AdaptedFrame adapt_frame(const Jet3& j) {
  const std::size_t n = j.n;
  Congruence diag = congruence_diagonalize(j.Q);
  if (diag.rank < n) throw DegenerateForm("adapt_frame: second fundamental form is degenerate");
  const int orientation = diag.p >= diag.q ? 1 : -1;
  const std::size_t p = std::max(diag.p, diag.q), q = std::min(diag.p, diag.q);
  QMatrix qo = j.Q * Rational(orientation);
  MetricForm metric = MetricForm::standard(p, q);

  QMatrix b;
  // Q already proportional to G: rescale only.
  std::size_t pi = 0, pj = q > 0 ? n - 1 : 0;
  Rational lambda = qo(pi, pj) / metric.G(pi, pj);
  if (sgn(lambda) > 0 && qo == metric.G * lambda) {
    auto [f, k] = square_class(lambda);
    metric.scale = Rational(f);
    b = QMatrix::identity(n) * Rational(1 / k);
  } else {
    std::vector<Axis> axes;
    std::vector<Integer> candidates;
    for (std::size_t i = 0; i < n; ++i) {
      auto [f, k] = square_class(diag.D(i, i) * orientation);
      QVector v = diag.B.column(i);
      for (auto& x : v) x /= k;
      axes.push_back({v, f});
      candidates.push_back(abs(f));
    }
    std::optional<std::vector<QVector>> cols;
    Integer chosen;
    for (const auto& c : candidates) {
      cols = arrange(axes, c, q);
      if (cols) {
        chosen = c;
        break;
      }
    }
    if (!cols) throw std::domain_error("adapt_frame: diagonal square classes do not merge to a single scale");
    b = QMatrix::from_columns(*cols, n);
    metric.scale = Rational(chosen);
  }
  if (b.transpose() * qo * b != metric.G * metric.scale)
    throw std::logic_error("adapt_frame: congruence check failed");
  return {b, orientation, metric, transform_jet(j, b, orientation)};
}

}  // namespace afh
