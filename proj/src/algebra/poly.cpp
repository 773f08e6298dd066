#include "afh/algebra/poly.hpp"

#include <sstream>

namespace afh {

namespace {

// Shared composition driver. `cap` < 0 means no truncation.
template <class K>
Poly<K> compose_impl(const Poly<K>& f, const std::vector<const Poly<K>*>& subst, int cap) {
  if (subst.size() != f.nvars()) throw std::invalid_argument("poly_compose: arity mismatch");
  if (subst.empty()) return f;
  const std::size_t out_vars = subst.front()->nvars();
  for (const auto* s : subst)
    if (s->nvars() != out_vars) throw std::invalid_argument("poly_compose: substituents differ in nvars");

  std::vector<std::vector<Poly<K>>> powers(subst.size());
  auto power = [&](std::size_t v, int k) -> const Poly<K>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly<K>::constant(out_vars, K(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back().multiply(*subst[v], cap));
    return cache[static_cast<std::size_t>(k)];
  };

  Poly<K> out(out_vars);
  for (const auto& [m, c] : f.terms()) {
    Poly<K> t = Poly<K>::constant(out_vars, c);
    for (std::size_t v = 0; v < subst.size() && !t.is_zero(); ++v) {
      if (m[v] == 0) continue;
      t = t.multiply(power(v, m[v]), cap);
    }
    out += t;
  }
  return out;
}

}  // namespace

template <class K>
Poly<K> poly_compose(const Poly<K>& f, std::span<const Poly<K>> subst) {
  std::vector<const Poly<K>*> ptrs;
  for (const auto& s : subst) ptrs.push_back(&s);
  return compose_impl(f, ptrs, -1);
}

template <class K>
TruncSeries<K> poly_compose(const Poly<K>& f, std::span<const TruncSeries<K>> subst) {
  if (subst.empty()) throw std::invalid_argument("poly_compose: no substituents");
  int cap = subst.front().cap();
  std::vector<const Poly<K>*> ptrs;
  for (const auto& s : subst) {
    cap = std::min(cap, s.cap());
    ptrs.push_back(&s.poly());
  }
  return {compose_impl(f, ptrs, cap), cap};
}

std::vector<std::string> variable_names(std::size_t nvars, VarStyle style) {
  std::vector<std::string> names;
  names.reserve(nvars);
  if (style == VarStyle::Real) {
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
  }
  if (nvars % 2 != 0) throw std::invalid_argument("complex variable set must have even size");
  const std::size_t half = nvars / 2;
  for (std::size_t i = 0; i < half; ++i) names.push_back("z" + std::to_string(i + 1));
  for (std::size_t i = 0; i < half; ++i) names.push_back("c" + std::to_string(i + 1));
  return names;
}

namespace {

std::string coeff_text(const Rational& c, bool& negative) {
  negative = sgn(c) < 0;
  return to_string(Rational(abs(c)));
}

std::string coeff_text(const GaussRational& c, bool& negative) {
  if (c.is_real()) return coeff_text(c.re(), negative);
  if (sgn(c.re()) == 0) {
    negative = sgn(c.im()) < 0;
    return to_string(Rational(abs(c.im()))) + "*i";
  }
  negative = false;
  return "(" + to_string(c) + ")";
}

}  // namespace

template <class K>
std::string to_string(const Poly<K>& p, const std::vector<std::string>& names) {
  if (names.size() < p.nvars()) throw std::invalid_argument("not enough variable names");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = false;
    std::string coeff = coeff_text(c, negative);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = coeff == "1";
    bool wrote = false;
    if (!unit || m.degree() == 0) {
      os << coeff;
      wrote = true;
    }
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (m[v] == 0) continue;
      if (wrote) os << "*";
      os << names[v];
      if (m[v] > 1) os << "^" << m[v];
      wrote = true;
    }
  }
  return os.str();
}

template <class K>
std::string to_string(const Poly<K>& p, VarStyle style) {
  std::size_t n = p.nvars();
  if (style == VarStyle::Complex && n % 2 != 0) style = VarStyle::Real;
  return to_string(p, variable_names(n, style));
}

CPoly conjugate_swap(const CPoly& p) {
  if (p.nvars() % 2 != 0) throw std::invalid_argument("conjugate_swap needs an even variable count");
  const std::size_t half = p.nvars() / 2;
  CPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial s;
    for (std::size_t v = 0; v < half; ++v) {
      s.set(v, m[v + half]);
      s.set(v + half, m[v]);
    }
    out.add_term(s, c.conj());
  }
  return out;
}

CPoly real_part(const CPoly& p) { return (p + conjugate_swap(p)) * GaussRational(Rational(1, 2)); }

CPoly to_complex(const RPoly& p) {
  CPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, GaussRational(c));
  return out;
}

template Poly<Rational> poly_compose(const Poly<Rational>&, std::span<const Poly<Rational>>);
template Poly<GaussRational> poly_compose(const Poly<GaussRational>&, std::span<const Poly<GaussRational>>);
template TruncSeries<Rational> poly_compose(const Poly<Rational>&, std::span<const TruncSeries<Rational>>);
template TruncSeries<GaussRational> poly_compose(const Poly<GaussRational>&,
                                                 std::span<const TruncSeries<GaussRational>>);
template std::string to_string(const Poly<Rational>&, VarStyle);
template std::string to_string(const Poly<GaussRational>&, VarStyle);
template std::string to_string(const Poly<Rational>&, const std::vector<std::string>&);
template std::string to_string(const Poly<GaussRational>&, const std::vector<std::string>&);

}  // namespace afh
