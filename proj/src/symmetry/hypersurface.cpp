#include "afh/symmetry/hypersurface.hpp"

#include <algorithm>

namespace afh {

Hypersurface::Hypersurface(std::size_t n, RPoly f, QVector ref_point, std::optional<OpenCondition> constraint)
    : n_(n), f_(std::move(f)), p_(std::move(ref_point)), constraint_(std::move(constraint)) {
  if (n_ == 0) throw InvalidSurface("surface dimension must be positive");
  if (f_.nvars() != n_ + 1)
    throw InvalidSurface("defining polynomial must have " + std::to_string(n_ + 1) + " variables");
  if (f_.is_zero()) throw InvalidSurface("defining polynomial is zero");
  if (p_.size() != n_ + 1) throw InvalidSurface("reference point has wrong dimension");
  if (!contains(p_)) throw InvalidSurface("reference point is not on the surface");
  QVector g = gradient(p_);
  if (std::all_of(g.begin(), g.end(), [](const Rational& x) { return is_zero(x); }))
    throw InvalidSurface("gradient vanishes at the reference point");
  if (constraint_ && constraint_->g.nvars() != n_ + 1)
    throw InvalidSurface("constraint polynomial has the wrong number of variables");
}

QVector Hypersurface::gradient(const QVector& p) const {
  QVector g(n_ + 1);
  for (std::size_t i = 0; i <= n_; ++i) g[i] = f_.derivative(i).evaluate(p);
  return g;
}

}  // namespace afh
