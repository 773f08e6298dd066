#include "afh/holo/cm.hpp"

#include <stdexcept>
#include <vector>

namespace afh {

namespace {

using Series = TruncSeries<GaussRational>;

// Variable layout of the expansion: w_1..w_n, conj w_1..conj w_n, u, v with
// w_{n+1} = u + i v.
struct Layout {
  std::size_t n;
  std::size_t nvars() const { return 2 * n + 2; }
  std::size_t w(std::size_t j) const { return j - 1; }  // 1-based
  std::size_t wb(std::size_t j) const { return n + j - 1; }
  std::size_t u() const { return 2 * n; }
  std::size_t v() const { return 2 * n + 1; }
};

Series var(const Layout& l, std::size_t i, int cap) { return Series::variable(l.nvars(), i, cap); }
Series cst(const Layout& l, const GaussRational& c, int cap) { return Series::constant(l.nvars(), c, cap); }

// The printed z(w); `unit` is i for z and -i for conj z, with `w` holding
// w_1..w_{n+1} or their conjugates.
std::vector<Series> z_of_w(const Layout& l, const std::vector<Series>& w, const GaussRational& unit, int cap) {
  const std::size_t n = l.n;
  const Rational d = cm_d(n);
  const GaussRational id10 = unit * GaussRational(d / 10);
  Series two_plus = cst(l, 2, cap) + w[0];
  Series inv = two_plus.inverse();
  std::vector<Series> z;
  z.push_back(w[0] + cst(l, 1, cap));
  Series z2 = w[1] - w[0] * w[n] * id10;
  for (std::size_t j = 3; j <= n; ++j) z2 -= (w[j - 1] * w[j - 1]) * (inv * inv) * GaussRational(2);
  z.push_back(z2);
  for (std::size_t j = 3; j <= n; ++j) z.push_back(w[j - 1] * inv * GaussRational(2));
  Series inner = w[1] - two_plus * w[n] * id10;
  z.push_back(w[n] * (-unit) + w[1] + w[0] * inner * GaussRational(Rational(1, 2)));
  return z;
}

std::size_t u_terms(const Series& s, const Layout& l) {
  std::size_t count = 0;
  for (const auto& [m, c] : s.poly().terms())
    if (m[l.u()] > 0) ++count;
  return count;
}

BigradedJet bigrade(const Poly<GaussRational>& series, const Layout& l, int cap) {
  BigradedJet jet;
  jet.n = l.n;
  jet.cap = cap;
  const std::size_t nv = 2 * l.n;
  for (const auto& [m, c] : series.terms()) {
    if (m[l.u()] > 0 || m[l.v()] > 0) continue;
    int k = 0, b = 0;
    Monomial r;
    for (std::size_t i = 0; i < nv; ++i) {
      (i < l.n ? k : b) += m[i];
      r.set(i, m[i]);
    }
    auto [it, inserted] = jet.pieces.try_emplace({k, b}, CPoly(nv));
    it->second.add_term(r, c);
  }
  return jet;
}

}  // namespace

CPoly BigradedJet::piece(int k, int l) const {
  auto it = pieces.find({k, l});
  return it == pieces.end() ? CPoly(2 * n) : it->second;
}

bool BigradedJet::conjugate_symmetric() const {
  for (const auto& [kl, p] : pieces)
    if (conjugate_swap(p) != piece(kl.second, kl.first)) return false;
  return true;
}

Rational cm_d(std::size_t n) {
  Rational d(5 * (static_cast<long>(n) - 2), static_cast<long>(n) + 2);
  d.canonicalize();
  return d;
}

CMExpansion cm_expand(std::size_t n, int cap) {
  if (n < 3) throw std::invalid_argument("cm_expand requires n >= 3");
  if (cap < 6) throw std::invalid_argument("cm_expand needs cap >= 6 to determine F_33");
  Layout l{n};
  const GaussRational i = GaussRational::i();
  std::vector<Series> w, wb;
  for (std::size_t j = 1; j <= n; ++j) {
    w.push_back(var(l, l.w(j), cap));
    wb.push_back(var(l, l.wb(j), cap));
  }
  w.push_back(var(l, l.u(), cap) + var(l, l.v(), cap) * i);
  wb.push_back(var(l, l.u(), cap) - var(l, l.v(), cap) * i);
  std::vector<Series> z = z_of_w(l, w, i, cap), zb = z_of_w(l, wb, -i, cap);
  std::vector<Series> x;
  for (std::size_t j = 0; j <= n; ++j) x.push_back((z[j] + zb[j]) * GaussRational(Rational(1, 2)));
  Series e = x[n] - x[0] * x[1];
  for (std::size_t j = 2; j < n; ++j) e -= x[0] * x[j] * x[j];

  // E = sum_k E_k v^k with E_k free of v.
  std::vector<Series> ek;
  for (const auto& [m, c] : e.poly().terms()) {
    const std::size_t k = m[l.v()];
    while (ek.size() <= k) ek.push_back(cst(l, 0, cap));
    Monomial r = m;
    r.set(l.v(), 0);
    ek[k] += Series(CPoly::term(l.nvars(), r, c), cap);
  }
  if (ek.size() < 2) throw std::logic_error("cm_expand: equation does not involve Im w_{n+1}");
  const GaussRational c1 = ek[1].poly().coeff(Monomial{});
  if (c1.is_zero()) throw std::logic_error("cm_expand: Im w_{n+1} does not enter linearly");
  const GaussRational inv_c1 = GaussRational(1) / c1;

  CMExpansion out;
  Series vs = cst(l, 0, cap);
  for (int it = 0; it <= cap + 1; ++it) {
    Series value = cst(l, 0, cap), power = cst(l, 1, cap);
    for (std::size_t k = 0; k < ek.size(); ++k) {
      value += ek[k] * power;
      power = power * vs;
    }
    out.iterations = it + 1;
    if (value.is_zero()) break;
    vs -= value * inv_c1;
  }
  out.residual_u_terms = u_terms(vs, l);
  out.jet = bigrade(vs.poly(), l, cap);
  return out;
}

BigradedJet cm_closed_form(std::size_t n, int cap) {
  if (n < 3) throw std::invalid_argument("cm_closed_form requires n >= 3");
  Layout l{n};
  auto w = [&](std::size_t j) { return var(l, l.w(j), cap); };
  auto wb = [&](std::size_t j) { return var(l, l.wb(j), cap); };
  Series sum = cst(l, 0, cap);
  for (std::size_t j = 3; j <= n; ++j) sum += w(j) * wb(j);
  Series abs1 = w(1) * wb(1);
  Series num = (w(1) + cst(l, 1, cap)) * sum * GaussRational(4) +
               abs1 * (w(2) * GaussRational(2) + w(1) * wb(2)) + w(1) * wb(2) * GaussRational(4) +
               w(1) * w(1) * wb(2) * GaussRational(2);
  std::vector<std::size_t> swap(l.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    swap[j] = j + n;
    swap[j + n] = j;
  }
  swap[l.u()] = l.u();
  swap[l.v()] = l.v();
  Series num_bar(num.poly().map_coeffs([](const GaussRational& c) { return c.conj(); }).reindexed(l.nvars(), swap),
                 cap);
  Series den = (cst(l, 2, cap) + w(1)) * (cst(l, 2, cap) + wb(1)) * (cst(l, 20, cap) - abs1 * GaussRational(cm_d(n)));
  // Im w_{n+1} = 10 (N + conj N) / (2 D), D real.
  Series v = (num + num_bar) * den.inverse() * GaussRational(5);
  return bigrade(v.poly(), l, cap);
}

std::map<std::pair<int, int>, CPoly> printed_cm_pieces(std::size_t n, const PrintedCM& c) {
  const std::size_t nv = 2 * n;
  const Rational d = cm_d(n);
  auto w = [&](std::size_t j) { return CPoly::variable(nv, j - 1); };
  auto wb = [&](std::size_t j) { return CPoly::variable(nv, n + j - 1); };
  auto k = [](const Rational& r) { return GaussRational(r); };
  CPoly re12 = (w(1) * wb(2) + w(2) * wb(1)) * k(Rational(1, 2));
  CPoly sum(nv);
  for (std::size_t j = 3; j <= n; ++j) sum += w(j) * wb(j);
  CPoly abs1 = w(1) * wb(1);
  Rational over(c.f22_sum / Rational(static_cast<long>(n) + 2));
  std::map<std::pair<int, int>, CPoly> out;
  out[{1, 1}] = (re12 + sum) * k(c.f11);
  out[{2, 2}] = abs1 * (re12 * k(d * c.f22_re) + sum * k(over)) * k(c.f22);
  out[{3, 2}] = w(1) * abs1 * sum * k(c.f32);
  out[{2, 3}] = conjugate_swap(out[{3, 2}]);
  out[{3, 3}] = abs1 * abs1 * ((re12 + sum) * k(d * c.f33_re) - sum) * k(d * c.f33);
  return out;
}

CPoly cm_trace(const CPoly& f, std::size_t n, int k) {
  if (f.nvars() != 2 * n) throw std::invalid_argument("cm_trace: piece has the wrong arity");
  CPoly cur = f;
  for (int t = 0; t < k; ++t) {
    CPoly next = (cur.derivative(0).derivative(n + 1) + cur.derivative(1).derivative(n)) * GaussRational(4);
    for (std::size_t j = 2; j < n; ++j) next += cur.derivative(j).derivative(n + j) * GaussRational(2);
    cur = next;
  }
  return cur;
}

}  // namespace afh
