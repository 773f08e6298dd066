#pragma once

// Exact scalar fields: arbitrary-precision rationals (GMP) and the Gaussian
// rationals Q(i).

#include <gmpxx.h>

#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace afh {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (whitespace allowed around the slash). Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design of Q ⊂ Q(i)
  GaussRational(long re) : re_(re) {}                 // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

// "a", "b*i", "a+b*i" with each part in p/q form.
std::string to_string(const GaussRational& z);

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

// Scalar traits used by the templated polynomial and matrix code.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_complex = false;
  static Rational conj(const Rational& r) { return r; }
};

template <>
struct ScalarTraits<GaussRational> {
  static constexpr bool is_complex = true;
  static GaussRational conj(const GaussRational& z) { return z.conj(); }
};

}  // namespace afh
