#include "afh/invariants/l1.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace afh {

namespace {

using Tensor3 = std::vector<std::vector<QVector>>;

Tensor3 tensor_of(const RPoly& cubic, std::size_t n) {
  Tensor3 t(n, std::vector<QVector>(n, QVector(n, Rational(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Rational c = polarized(cubic, i, j, k);
        t[i][j][k] = t[i][k][j] = t[j][i][k] = t[j][k][i] = t[k][i][j] = t[k][j][i] = c;
      }
  return t;
}

RPoly linear_poly(const QVector& l) {
  RPoly out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out.add_term(Monomial::unit(i), l[i]);
  return out;
}

// D_a f = sum_i (df/du_i) (a u)_i.
RPoly derive_linear(const RPoly& f, const QMatrix& a) {
  const std::size_t n = a.rows();
  RPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    RPoly comp(n);
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(a(i, j))) comp.add_term(Monomial::unit(j), a(i, j));
    if (!comp.is_zero()) out += f.derivative(i) * comp;
  }
  return out;
}

Rational bilinear(const QVector& x, const QMatrix& m, const QVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * m(i, j) * y[j];
  }
  return s;
}

// Univariate coefficients (ascending) of t -> f(a + t d) for a cubic form f.
QVector restrict_to_line(const RPoly& f, const QVector& a, const QVector& d) {
  std::vector<Poly<Rational>> subst;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RPoly s = RPoly::constant(1, a[i]);
    s.add_term(Monomial::unit(0), d[i]);
    subst.push_back(s);
  }
  RPoly u = poly_compose<Rational>(f, subst);
  QVector c(4, Rational(0));
  for (const auto& [m, v] : u.terms()) c[static_cast<std::size_t>(m[0])] = v;
  return c;
}

}  // namespace

Rational L1Tensor::at(std::size_t i, std::size_t j, std::size_t k) const { return polarized(T, i, j, k); }

QVector metric_trace(const RPoly& cubic, const QMatrix& metric_inv) {
  const std::size_t n = metric_inv.rows();
  Tensor3 t = tensor_of(cubic, n);
  QVector tau(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(metric_inv(j, k))) tau[i] += t[i][j][k] * metric_inv(j, k);
  return tau;
}

L1Tensor extract_L1(const Jet3& j) {
  auto ginv = inverse(j.Q);
  if (!ginv) throw DegenerateForm("extract_L1: second fundamental form is degenerate");
  const std::size_t n = j.n;
  QVector tau = metric_trace(j.cubic, *ginv);
  QVector l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = tau[i] * 3 / Rational(static_cast<long>(n + 2));
  L1Tensor out;
  out.n = n;
  out.metric = j.Q;
  out.metric_inv = *ginv;
  out.T = j.cubic - linear_poly(l) * j.quadratic();
  out.D_shift = *ginv * l;
  for (const auto& x : metric_trace(out.T, out.metric_inv))
    if (!is_zero(x)) throw std::logic_error("extract_L1: trace removal failed");
  return out;
}

QMatrix l1_operator(const L1Tensor& t, std::size_t k) {
  const std::size_t n = t.n;
  Tensor3 tt = tensor_of(t.T, n);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a) m(i, j) += t.metric_inv(i, a) * tt[a][j][k];
  return m;
}

Rational pseudo_norm_sq(const L1Tensor& t) {
  const std::size_t n = t.n;
  if (t.T.is_zero()) return 0;
  const QMatrix& g = t.metric_inv;
  Tensor3 a = tensor_of(t.T, n);
  // Raise one index at a time.
  auto raise = [&](const Tensor3& x, int slot) {
    Tensor3 y(n, std::vector<QVector>(n, QVector(n, Rational(0))));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t r = 0; r < n; ++r) {
            const std::size_t src = slot == 0 ? i : slot == 1 ? j : k;
            if (is_zero(g(src, r))) continue;
            const Rational& v = slot == 0 ? x[r][j][k] : slot == 1 ? x[i][r][k] : x[i][j][r];
            y[i][j][k] += g(src, r) * v;
          }
    return y;
  };
  Tensor3 up = raise(raise(raise(a, 0), 1), 2);
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s += a[i][j][k] * up[i][j][k];
  return s;
}

std::string to_string(OrbitTag tag) {
  switch (tag) {
    case OrbitTag::Zero: return "Zero";
    case OrbitTag::CubeNull: return "CubeNull";
    case OrbitTag::SquareNullLinear: return "SquareNullLinear";
    case OrbitTag::NullTimesQuadric: return "NullTimesQuadric";
    case OrbitTag::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::string to_string(TubeResult r) {
  switch (r) {
    case TubeResult::True: return "true";
    case TubeResult::False: return "false";
    case TubeResult::NotApplicable: return "n/a";
  }
  return "n/a";
}

std::vector<QVector> rational_linear_factors(const RPoly& cubic) {
  if (cubic.is_zero()) return {};
  const std::size_t n = cubic.nvars();
  if (n == 1) return {QVector{1}};
  std::vector<QVector> found;
  auto add = [&](const QVector& l) {
    QVector p = primitive(l);
    for (const auto& f : found)
      if (f == p) return;
    found.push_back(p);
  };

  // Each rational factor l meets a generic line a + t d in one rational
  // point; n - 1 such points on independent lines span ker l.
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coord(-3, 3);
  const int rounds = 6;
  for (int round = 0; round < rounds; ++round) {
    std::vector<std::vector<QVector>> points;
    for (std::size_t line = 0; line + 1 < n; ++line) {
      std::vector<QVector> pts;
      for (int attempt = 0; attempt < 20 && pts.empty(); ++attempt) {
        QVector a(n), d(n);
        for (std::size_t i = 0; i < n; ++i) {
          a[i] = coord(rng);
          d[i] = coord(rng);
        }
        QVector c = restrict_to_line(cubic, a, d);
        if (is_zero(c[3])) continue;
        std::set<Rational> roots;
        for (const auto& r : rational_roots(c)) roots.insert(r);
        for (const auto& r : roots) {
          QVector pt(n);
          for (std::size_t i = 0; i < n; ++i) pt[i] = a[i] + r * d[i];
          pts.push_back(pt);
        }
        if (pts.empty()) break;  // no rational root on a generic line: no rational factor
      }
      if (pts.empty()) return found;
      points.push_back(std::move(pts));
    }
    std::vector<std::size_t> choice(points.size(), 0);
    for (;;) {
      std::vector<QVector> rows;
      for (std::size_t l = 0; l < points.size(); ++l) rows.push_back(points[l][choice[l]]);
      auto ns = nullspace(QMatrix::from_rows(rows, n));
      if (ns.size() == 1 && cubic.divide_exact(linear_poly(ns[0])).has_value()) add(ns[0]);
      std::size_t l = 0;
      while (l < choice.size() && ++choice[l] == points[l].size()) choice[l++] = 0;
      if (l == choice.size()) break;
    }
  }
  return found;
}

OrbitType classify_L1(const L1Tensor& t) {
  if (t.is_zero()) return {OrbitTag::Zero, {}, ""};
  const std::size_t n = t.n;
  Congruence sig = congruence_diagonalize(t.metric);
  if (n < 2 || std::min(sig.p, sig.q) != 1 || sig.rank != n)
    return {OrbitTag::Unclassified, {}, "metric is not Lorentzian"};
  const QMatrix& ginv = t.metric_inv;

  OrbitType best{OrbitTag::Unclassified, {}, "no rational null linear factor"};
  auto rank_of = [](OrbitTag tag) {
    switch (tag) {
      case OrbitTag::CubeNull: return 3;
      case OrbitTag::SquareNullLinear: return 2;
      case OrbitTag::NullTimesQuadric: return 1;
      default: return 0;
    }
  };

  for (const auto& lambda : rational_linear_factors(t.T)) {
    if (!is_zero(bilinear(lambda, ginv, lambda))) continue;
    RPoly lpoly = linear_poly(lambda);
    RPoly r = *t.T.divide_exact(lpoly);
    OrbitType cand;
    if (auto m = r.divide_exact(lpoly)) {
      // T = l^2 m.
      QVector mv(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i) mv[i] = m->coeff(Monomial::unit(i));
      cand.tag = rank({lambda, mv}, n) == 1 ? OrbitTag::CubeNull : OrbitTag::SquareNullLinear;
    } else {
      // T = l R. With v = g^{-1} l, v spans the radical of the metric on
      // ker l; R - kappa f2 must have v in its radical on all of R^n.
      QVector v = ginv * lambda;
      QMatrix rb = quadratic_form_matrix(r, n);
      auto ker = nullspace(QMatrix::from_rows({lambda}, n));
      bool radical = true;
      for (const auto& b : ker)
        if (!is_zero(bilinear(v, rb, b))) radical = false;
      if (!radical) {
        cand = {OrbitTag::Unclassified, {}, "quadric factor depends on the null direction"};
      } else {
        std::size_t ai = 0;
        while (is_zero(lambda[ai])) ++ai;
        QVector a(n, Rational(0));
        a[ai] = 1;
        Rational kappa = bilinear(v, rb, a) / lambda[ai];
        QMatrix rp = rb - t.metric * kappa;
        std::vector<QVector> span{v};
        span.insert(span.end(), ker.begin(), ker.end());
        std::vector<QVector> w;
        for (auto idx : independent_subset(span, n))
          if (idx != 0) w.push_back(span[idx]);
        if (w.empty()) {
          cand = {OrbitTag::NullTimesQuadric, {}, ""};
        } else {
          QMatrix wm = QMatrix::from_columns(w, n);
          QMatrix qm = wm.transpose() * rp * wm;
          QMatrix gm = wm.transpose() * t.metric * wm;
          bool complete = false;
          auto alphas = rational_roots(charpoly(*inverse(gm) * qm), &complete);
          if (!complete) {
            cand = {OrbitTag::Unclassified, {}, "irrational eigenvalues in the quadric factor"};
          } else {
            Rational lead = 0;
            for (const auto& x : alphas)
              if (abs(x) > abs(lead) || (abs(x) == abs(lead) && x > lead)) lead = x;
            if (is_zero(lead)) {
              cand = {OrbitTag::Unclassified, {}, "quadric factor vanishes on the null complement"};
            } else {
              for (auto& x : alphas) x /= lead;
              std::sort(alphas.begin(), alphas.end(), [](const Rational& x, const Rational& y) { return x > y; });
              cand = {OrbitTag::NullTimesQuadric, alphas, ""};
            }
          }
        }
      }
    }
    if (rank_of(cand.tag) > rank_of(best.tag) || (best.tag == OrbitTag::Unclassified && !cand.diagnostic.empty()))
      best = cand;
  }
  return best;
}

TubeWitness tube_criterion(const Hypersurface& s, const QVector& p) {
  return tube_criterion(s, p, isotropy_at(symmetry_algebra(s), p));
}

TubeWitness tube_criterion(const Hypersurface& s, const QVector& p, const LieAlgebraBasis& isotropy) {
  TubeWitness out;
  out.isotropy_dim = isotropy.size();
  Jet3 jet = graph_jet(s, p);
  L1Tensor l1 = extract_L1(jet);
  if (l1.is_zero()) return out;
  const std::size_t n = jet.n;
  QMatrix minv = *inverse(jet.frame);

  std::vector<RPoly> images;
  for (const auto& x : isotropy.fields()) {
    for (const auto& v : x.evaluate(p))
      if (!is_zero(v)) throw std::invalid_argument("tube_criterion: field does not vanish at p");
    QMatrix ahat = minv * x.A * jet.frame;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_zero(ahat(n, c))) throw std::logic_error("tube_criterion: isotropy field leaves the tangent plane");
    QMatrix a(n, n);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = ahat(i, j);
      tr += a(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) a(i, i) -= tr / Rational(static_cast<long>(n));
    images.push_back(derive_linear(l1.T, a));
  }
  images.push_back(-l1.T);

  std::map<Monomial, std::size_t, GrlexLess> row_of;
  for (const auto& img : images)
    for (const auto& [m, c] : img.terms()) row_of.emplace(m, row_of.size());
  QMatrix sys(row_of.size(), images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (const auto& [m, c] : images[k].terms()) sys(row_of.at(m), k) = c;

  out.result = TubeResult::False;
  for (const auto& v : nullspace(sys)) {
    if (is_zero(v.back())) continue;
    out.result = TubeResult::True;
    out.lambda = v.back();
    out.combination.assign(v.begin(), v.end() - 1);
    break;
  }
  return out;
}

}  // namespace afh
