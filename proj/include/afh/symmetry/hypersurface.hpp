#pragma once

#include "afh/algebra/linalg.hpp"
#include "afh/algebra/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace afh {

class InvalidSurface : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Open condition sign * g(x) > 0.
struct OpenCondition {
  RPoly g;
  int sign = 1;
  std::string text;

  bool holds(const QVector& p) const { return sgn(g.evaluate(p)) * sign > 0; }
};

// The zero set of F in R^{n+1} with a regular reference point.
class Hypersurface {
 public:
  // Throws InvalidSurface unless F is nonzero, F(p) = 0 and grad F(p) != 0.
  Hypersurface(std::size_t n, RPoly f, QVector ref_point, std::optional<OpenCondition> constraint = {});

  std::size_t n() const { return n_; }
  std::size_t ambient_dim() const { return n_ + 1; }
  const RPoly& F() const { return f_; }
  const QVector& ref_point() const { return p_; }
  const std::optional<OpenCondition>& constraint() const { return constraint_; }

  bool contains(const QVector& p) const { return is_zero(f_.evaluate(p)); }
  QVector gradient(const QVector& p) const;

  // Same surface with a different regular reference point.
  Hypersurface at(QVector p) const { return {n_, f_, std::move(p), constraint_}; }

 private:
  std::size_t n_;
  RPoly f_;
  QVector p_;
  std::optional<OpenCondition> constraint_;
};

}  // namespace afh
