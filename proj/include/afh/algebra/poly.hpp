#pragma once

// Sparse multivariate polynomials over an exact scalar field, and the same
// structure truncated at a total-degree cap.

#include "afh/algebra/monomial.hpp"
#include "afh/algebra/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace afh {

template <class K>
class Poly {
 public:
  using Terms = std::map<Monomial, K, GrlexLess>;

  // Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  static Poly constant(std::size_t nvars, const K& c) {
    Poly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw std::out_of_range("variable index exceeds nvars");
    Poly p(nvars);
    p.add_term(Monomial::unit(var), K(1));
    return p;
  }
  static Poly term(std::size_t nvars, const Monomial& m, const K& c) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int degree() const { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first.degree(); }
  int min_degree() const { return terms_.empty() ? kZeroDegree : terms_.begin()->first.degree(); }

  K coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  // Leading term in grlex order. Requires a nonzero polynomial.
  const std::pair<const Monomial, K>& leading() const { return *terms_.rbegin(); }

  void add_term(const Monomial& m, const K& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const K& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= K(-1); }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) { return a.multiply(b, -1); }

  // Product keeping only terms of total degree <= cap (cap < 0: no cap).
  Poly multiply(const Poly& b, int cap) const {
    check_same(b);
    Poly out(nvars_);
    for (const auto& [ma, ca] : terms_) {
      int da = ma.degree();
      if (cap >= 0 && da + b.min_degree() > cap) break;
      for (const auto& [mb, cb] : b.terms_) {
        if (cap >= 0 && da + mb.degree() > cap) break;
        out.add_term(ma * mb, ca * cb);
      }
    }
    return out;
  }

  Poly pow(int k, int cap = -1) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly result = constant(nvars_, K(1));
    if (cap >= 0) result = result.truncated(cap);
    for (int i = 0; i < k; ++i) result = result.multiply(*this, cap);
    return result;
  }

  Poly truncated(int cap) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() > cap) break;
      out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  Poly homogeneous_part(int d) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  Poly derivative(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("derivative variable index");
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      if (e == 0) continue;
      Monomial d = m;
      d.set(var, e - 1);
      out.add_term(d, c * K(e));
    }
    return out;
  }

  K evaluate(std::span<const K> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
    K total(0);
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (std::size_t v = 0; v < nvars_; ++v)
        for (int k = 0; k < m[v]; ++k) t *= point[v];
      total += t;
    }
    return total;
  }

  // Applies f to every coefficient, dropping zeros.
  template <class F>
  Poly map_coeffs(F&& f) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  // Same polynomial viewed in a larger variable set; variable i maps to
  // positions[i].
  Poly reindexed(std::size_t new_nvars, std::span<const std::size_t> positions) const {
    if (positions.size() != nvars_) throw std::invalid_argument("reindex arity mismatch");
    Poly out(new_nvars);
    for (const auto& [m, c] : terms_) {
      Monomial r;
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (m[v] == 0) continue;
        if (positions[v] >= new_nvars) throw std::out_of_range("reindex target");
        r.set(positions[v], r[positions[v]] + m[v]);
      }
      out.add_term(r, c);
    }
    return out;
  }

  // Exact division by d; std::nullopt when d does not divide *this.
  std::optional<Poly> divide_exact(const Poly& d) const {
    check_same(d);
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    Poly rem = *this;
    Poly quot(nvars_);
    const auto& [dm, dc] = d.leading();
    while (!rem.is_zero()) {
      const auto& [rm, rc] = rem.leading();
      if (!dm.divides(rm)) return std::nullopt;
      Poly t = term(nvars_, dm.quotient_into(rm), rc / dc);
      quot += t;
      rem -= t * d;
    }
    return quot;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw std::invalid_argument("too many polynomial variables");
    return n;
  }
  static bool is_zero_scalar(const K& c) { return afh::is_zero(c); }
  void check_same(const Poly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using RPoly = Poly<Rational>;
using CPoly = Poly<GaussRational>;

// Polynomial truncated at a total-degree cap. Every stored term has degree
// <= cap and products discard anything above it.
template <class K>
class TruncSeries {
 public:
  TruncSeries(Poly<K> p, int cap) : cap_(check_cap(cap)), poly_(p.truncated(cap)) {}

  static TruncSeries constant(std::size_t nvars, const K& c, int cap) {
    return {Poly<K>::constant(nvars, c), cap};
  }
  static TruncSeries variable(std::size_t nvars, std::size_t var, int cap) {
    return {Poly<K>::variable(nvars, var), cap};
  }

  int cap() const { return cap_; }
  std::size_t nvars() const { return poly_.nvars(); }
  const Poly<K>& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  TruncSeries& operator+=(const TruncSeries& o) {
    cap_ = std::min(cap_, o.cap_);
    poly_ = (poly_ + o.poly_).truncated(cap_);
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    cap_ = std::min(cap_, o.cap_);
    poly_ = (poly_ - o.poly_).truncated(cap_);
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const K& s) {
    a.poly_ *= s;
    return a;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int cap = std::min(a.cap_, b.cap_);
    return {a.poly_.multiply(b.poly_, cap), cap};
  }

  TruncSeries pow(int k) const { return {poly_.pow(k, cap_), cap_}; }

  // 1/s for a series with nonzero constant term: geometric expansion of
  // 1/(c (1 + r)) with r = s/c - 1.
  TruncSeries inverse() const {
    K c0 = poly_.coeff(Monomial{});
    if (afh::is_zero(c0)) throw std::domain_error("series inverse needs a nonzero constant term");
    K inv0 = K(1) / c0;
    TruncSeries r = (*this) * inv0 - constant(nvars(), K(1), cap_);
    TruncSeries sum = constant(nvars(), K(1), cap_);
    TruncSeries power = sum;
    for (int k = 1; k <= cap_; ++k) {
      power = power * r;
      if (power.is_zero()) break;
      sum = sum + (k % 2 == 1 ? power * K(-1) : power);
    }
    return sum * inv0;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.cap_ == b.cap_ && a.poly_ == b.poly_;
  }

 private:
  static int check_cap(int cap) {
    if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
    return cap;
  }
  int cap_;
  Poly<K> poly_;
};

// Composition f(subst_1, ..., subst_k). Throws on arity mismatch.
template <class K>
Poly<K> poly_compose(const Poly<K>& f, std::span<const Poly<K>> subst);

template <class K>
TruncSeries<K> poly_compose(const Poly<K>& f, std::span<const TruncSeries<K>> subst);

// Variable naming for text I/O.
enum class VarStyle {
  Real,     // x1..xN
  Complex,  // z1..zN for the first half, c1..cN (conjugates) for the second
};

std::vector<std::string> variable_names(std::size_t nvars, VarStyle style);

template <class K>
std::string to_string(const Poly<K>& p, VarStyle style = VarStyle::Real);

template <class K>
std::string to_string(const Poly<K>& p, const std::vector<std::string>& names);

// Coefficient-wise conjugation combined with swapping variable i and
// i + half. Defines the reality involution on polynomials in (z, conj z).
CPoly conjugate_swap(const CPoly& p);

// Real part in the sense (p + conjugate_swap(p)) / 2.
CPoly real_part(const CPoly& p);

CPoly to_complex(const RPoly& p);

}  // namespace afh
