#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace afh {

// Largest number of variables a polynomial may carry. Real surfaces use at
// most n+1 <= 9 variables; complex defining functions in (z, conj z) and the
// (w', conj w', Re w, Im w) series use at most 2(n+1) <= 18.
inline constexpr std::size_t kMaxVars = 20;

// Dense exponent vector.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  int operator[](std::size_t i) const { return e[i]; }

  static Monomial unit(std::size_t var, int power = 1) {
    Monomial m;
    m.set(var, power);
    return m;
  }

  void set(std::size_t var, int power) {
    if (var >= kMaxVars) throw std::out_of_range("monomial variable index");
    if (power < 0 || power > 255) throw std::overflow_error("monomial exponent out of range");
    e[var] = static_cast<std::uint8_t>(power);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent out of range");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  // Requires divides(other).
  Monomial quotient_into(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(other.e[i] - e[i]);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Graded lexicographic order: total degree first, then x1 > x2 > ... .
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    }
    return false;
  }
};

}  // namespace afh
