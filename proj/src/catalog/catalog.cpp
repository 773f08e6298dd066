#include "afh/catalog/catalog.hpp"

#include "afh/algebra/parse.hpp"

#include <array>
#include <stdexcept>

namespace afh {

namespace {

const std::array<const char*, 9> kNames = {"t1", "t2.1", "t2.2", "t2.3", "t2.4", "t2.5", "t2.6", "t2.7", "sec6"};

std::string x(std::size_t i) { return "x" + std::to_string(i); }

// sum_{i=lo}^{hi} x_i^2 as text, "0" when empty.
std::string sum_sq(std::size_t lo, std::size_t hi) {
  std::string s;
  for (std::size_t i = lo; i <= hi; ++i) s += (s.empty() ? "" : " + ") + x(i) + "^2";
  return s.empty() ? "0" : s;
}

}  // namespace

std::string family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (name == kNames[i]) return static_cast<Family>(i);
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (std::size_t i = 0; i < kNames.size(); ++i) out.push_back(static_cast<Family>(i));
  return out;
}

bool is_theorem2(Family f) { return f != Family::T1Quadric && f != Family::Sec6Gamma; }

void SurfaceId::validate() const {
  if (family == Family::T1Quadric) {
    if (n < 1) throw std::invalid_argument("t1 requires n >= 1");
  } else if (family == Family::Sec6Gamma) {
    if (n < 3) throw std::invalid_argument("sec6 requires n >= 3");
  } else if (n < 4) {
    throw std::invalid_argument(family_name(family) + " requires n >= 4");
  }
  if (alpha.has_value() != (family == Family::T2_3))
    throw std::invalid_argument("alpha is required for t2.3 and only for t2.3");
}

std::string SurfaceId::label() const {
  std::string s = family_name(family) + " n=" + std::to_string(n);
  if (alpha) s += " alpha=" + to_string(*alpha);
  return s;
}

RPoly t2_5_alternate(std::size_t n) {
  const std::string mid = sum_sq(2, n - 1);
  return parse_real_poly("(1 - 2 " + x(n) + ")(" + x(n + 1) + " + x1 " + x(n) + " + 1/2 (" + mid + ")) + " + x(n) +
                             " (" + mid + ")",
                         n + 1);
}

Hypersurface make_surface(const SurfaceId& id) {
  id.validate();
  const std::size_t n = id.n;
  const std::string top = x(n + 1);
  const std::string base = "x1 " + x(n) + " + " + sum_sq(2, n - 1);
  QVector origin(n + 1, Rational(0));
  QVector unit = origin;
  unit[0] = 1;
  auto graph = [&](const std::string& rhs, const QVector& p) {
    return Hypersurface(n, parse_real_poly(top + " - (" + rhs + ")", n + 1), p);
  };
  switch (id.family) {
    case Family::T1Quadric:
      return graph(sum_sq(1, n), origin);
    case Family::T2_1:
      return graph(base, origin);
    case Family::T2_2:
      return graph(base + " + x1^3", origin);
    case Family::T2_3:
      return graph(base + " + x1^2 x2 + (" + to_string(*id.alpha) + ") x1^4", origin);
    case Family::T2_4:
      return graph("x1 " + x(n) + " + x1 (" + sum_sq(2, n - 1) + ")", unit);
    case Family::T2_5:
      return {n,
              parse_real_poly(top + " - 2 " + top + " " + x(n) + " - 2 x1 " + x(n) + "^2 + x1 " + x(n) + " + 1/2 (" +
                                  sum_sq(2, n - 1) + ")",
                              n + 1),
              origin};
    case Family::T2_6:
      return graph(base + " + x1 x2^2", origin);
    case Family::T2_7:
      return {n,
              parse_real_poly("(1 - 2 " + x(n) + ")(" + top + " + x1 " + x(n) + " + 1/2 (" + sum_sq(2, n - 1) +
                                  ")) + " + x(n) + " x2^2",
                              n + 1),
              origin};
    case Family::Sec6Gamma: {
      RPoly f = parse_real_poly(top + " - (x1 x2 + x1 (" + sum_sq(3, n) + "))", n + 1);
      return {n, f, unit, OpenCondition{RPoly::variable(n + 1, 0), 1, "x1 > 0"}};
    }
  }
  throw std::invalid_argument("make_surface: unknown family");
}

// --- group of the Sec6 surface ---

GroupParams GroupParams::identity(std::size_t n) {
  GroupParams g;
  g.s.assign(n - 2, Rational(0));
  return g;
}

void GroupParams::validate(std::size_t n) const {
  if (sgn(q) <= 0) throw std::invalid_argument("group parameter q must be positive");
  if (sgn(r) == 0) throw std::invalid_argument("group parameter r must be nonzero");
  if (s.size() + 2 != n) throw std::invalid_argument("group parameter s must have n - 2 entries");
}

namespace {

template <class T, class Lift>
std::vector<T> act(const GroupParams& g, const std::vector<T>& x, Lift lift, const GroupMapVariant& v) {
  const std::size_t n = x.size() - 1;
  g.validate(n);
  T r2 = lift(g.r * g.r);
  T lin = x[1] + lift(g.t);
  Rational ssq = 0;
  for (std::size_t j = 2; j < n; ++j) {
    lin = lin - lift(2 * g.s[j - 2]) * x[j];
    ssq += g.s[j - 2] * g.s[j - 2];
  }
  std::vector<T> y;
  y.push_back(lift(g.q) * x[0]);
  y.push_back(r2 * lin * lift(Rational(v.flip_x2_sign ? -1 : 1)));
  for (std::size_t j = 2; j < n; ++j) y.push_back(lift(g.r) * (x[j] + lift(g.s[j - 2])));
  T last = x[n] + lift(g.t) * x[0];
  if (!v.drop_sum_s_sq) last = last + lift(ssq) * x[0];
  y.push_back(lift(g.q) * r2 * last);
  return y;
}

}  // namespace

QVector group_act(const GroupParams& g, const QVector& x, const GroupMapVariant& v) {
  return act(g, x, [](const Rational& c) { return c; }, v);
}

GroupParams compose(const GroupParams& a, const GroupParams& b) {
  if (a.s.size() != b.s.size()) throw std::invalid_argument("compose: dimension mismatch");
  GroupParams c;
  c.q = a.q * b.q;
  c.r = a.r * b.r;
  c.t = b.t + a.t / (b.r * b.r);
  for (std::size_t j = 0; j < a.s.size(); ++j) {
    c.s.push_back(b.s[j] + a.s[j] / b.r);
    c.t -= 2 * a.s[j] * b.s[j] / b.r;
  }
  return c;
}

GroupParams inverse(const GroupParams& g) {
  GroupParams i;
  i.q = 1 / g.q;
  i.r = 1 / g.r;
  Rational r2 = g.r * g.r;
  i.t = -g.t * r2;
  for (const auto& s : g.s) {
    i.s.push_back(-s * g.r);
    i.t -= 2 * r2 * s * s;
  }
  return i;
}

bool surface_invariance(const GroupParams& g, std::size_t n, const GroupMapVariant& v) {
  Hypersurface s = make_surface({Family::Sec6Gamma, n, std::nullopt});
  std::vector<RPoly> vars;
  for (std::size_t i = 0; i <= n; ++i) vars.push_back(RPoly::variable(n + 1, i));
  auto image = act(g, vars, [n](const Rational& c) { return RPoly::constant(n + 1, c); }, v);
  return poly_compose<Rational>(s.F(), image) == s.F() * (g.q * g.r * g.r);
}

namespace {

// Element of Q(x)[sqrt(h), sqrt(x_1)]: four rational-function coefficients
// indexed by the parities of the two radicals.
struct RadicalFrac {
  struct Frac {
    RPoly num, den;
  };
  static inline RPoly h_poly, x1_poly;
  std::array<Frac, 4> c;  // index = a + 2 b for sqrt(h)^a sqrt(x1)^b

  static Frac zero_frac() { return {RPoly(h_poly.nvars()), RPoly::constant(h_poly.nvars(), Rational(1))}; }

  static RadicalFrac of(const RPoly& num, const RPoly& den = {}, int a = 0, int b = 0) {
    RadicalFrac r;
    for (auto& f : r.c) f = zero_frac();
    r.c[a + 2 * b] = {num, den.nvars() ? den : RPoly::constant(num.nvars(), Rational(1))};
    return r;
  }
  static RadicalFrac constant(const Rational& v) { return of(RPoly::constant(h_poly.nvars(), v)); }

  friend RadicalFrac operator+(const RadicalFrac& l, const RadicalFrac& r) {
    RadicalFrac out;
    for (int i = 0; i < 4; ++i) {
      const Frac &a = l.c[i], &b = r.c[i];
      if (a.num.is_zero()) out.c[i] = b;
      else if (b.num.is_zero()) out.c[i] = a;
      else if (a.den == b.den) out.c[i] = {a.num + b.num, a.den};
      else out.c[i] = {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    return out;
  }
  friend RadicalFrac operator-(const RadicalFrac& l, const RadicalFrac& r) { return l + r * constant(-1); }
  friend RadicalFrac operator*(const RadicalFrac& l, const RadicalFrac& r) {
    RadicalFrac out;
    for (auto& f : out.c) f = zero_frac();
    for (int i = 0; i < 4; ++i) {
      if (l.c[i].num.is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (r.c[j].num.is_zero()) continue;
        int a1 = i % 2, b1 = i / 2, a2 = j % 2, b2 = j / 2;
        RPoly num = l.c[i].num * r.c[j].num;
        if (a1 && a2) num = num * h_poly;
        if (b1 && b2) num = num * x1_poly;
        RadicalFrac term = of(num, l.c[i].den * r.c[j].den, (a1 + a2) % 2, (b1 + b2) % 2);
        out = out + term;
      }
    }
    return out;
  }
  bool equals(const RadicalFrac& o) const {
    for (int i = 0; i < 4; ++i)
      if (c[i].num * o.c[i].den != o.c[i].num * c[i].den) return false;
    return true;
  }
};

}  // namespace

bool verify_transitivity(std::size_t n, Side side, const TransitivityVariant& v) {
  if (n < 3) throw std::invalid_argument("verify_transitivity requires n >= 3");
  const std::size_t nv = n + 1;
  std::vector<RPoly> xs;
  for (std::size_t i = 0; i < nv; ++i) xs.push_back(RPoly::variable(nv, i));
  RPoly gamma = xs[0] * xs[1];
  for (std::size_t j = 2; j < n; ++j) gamma += xs[0] * xs[j] * xs[j];
  const int sign = side == Side::Greater ? 1 : -1;
  const int param_sign = v.wrong_side ? -sign : sign;
  RadicalFrac::h_poly = (xs[n] - gamma) * Rational(param_sign);
  RadicalFrac::x1_poly = xs[0];
  const RPoly one = RPoly::constant(nv, Rational(1));

  // q = x1, r = sqrt(h)/sqrt(x1), t = x1 x2 / h, s_j = x_j sqrt(x1)/sqrt(h).
  RadicalFrac q = RadicalFrac::of(xs[0]);
  RadicalFrac r = RadicalFrac::of(one, xs[0], 1, 1);
  RadicalFrac t = RadicalFrac::of(xs[0] * xs[1], RadicalFrac::h_poly);
  std::vector<RadicalFrac> s;
  for (std::size_t j = 2; j < n; ++j) s.push_back(RadicalFrac::of(xs[j], RadicalFrac::h_poly, 1, 1));

  // The printed map applied to the base point (1, 0, ..., 0, sign), with
  // symbolic parameters.
  RadicalFrac r2 = r * r;
  RadicalFrac ssq = RadicalFrac::constant(0);
  for (const auto& sj : s) ssq = ssq + sj * sj;
  std::vector<RadicalFrac> image;
  image.push_back(q);
  image.push_back(r2 * t * RadicalFrac::constant(v.map.flip_x2_sign ? -1 : 1));
  for (const auto& sj : s) image.push_back(r * sj);
  RadicalFrac last = RadicalFrac::constant(sign) + t;
  if (!v.map.drop_sum_s_sq) last = last + ssq;
  image.push_back(q * r2 * last);

  for (std::size_t i = 0; i < nv; ++i)
    if (!image[i].equals(RadicalFrac::of(xs[i]))) return false;
  return true;
}

}  // namespace afh
