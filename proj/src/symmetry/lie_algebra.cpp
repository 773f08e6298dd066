#include "afh/symmetry/lie_algebra.hpp"

#include <map>
#include <stdexcept>

namespace afh {

namespace {

std::size_t coord_len(std::size_t dim) { return dim * dim + dim; }

std::vector<QVector> coords_of(const std::vector<AffineVectorField>& fields) {
  std::vector<QVector> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.push_back(f.coords());
  return out;
}

std::vector<AffineVectorField> fields_from(const std::vector<AffineVectorField>& base,
                                           const std::vector<QVector>& coeffs) {
  std::vector<AffineVectorField> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(combine(base, c));
  return out;
}

// Monomials of total degree <= d in nvars variables.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int d) {
  std::vector<Monomial> out{Monomial{}};
  std::size_t start = 0;
  for (int deg = 1; deg <= d; ++deg) {
    const std::size_t end = out.size();
    std::map<Monomial, int, GrlexLess> next;
    for (std::size_t k = start; k < end; ++k)
      for (std::size_t v = 0; v < nvars; ++v) next.emplace(out[k] * Monomial::unit(v), 0);
    for (const auto& [m, unused] : next) out.push_back(m);
    start = end;
  }
  return out;
}

bool has_monomial_factor(const RPoly& f) {
  Monomial g = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms())
    for (std::size_t v = 0; v < kMaxVars; ++v) g.e[v] = std::min(g.e[v], m.e[v]);
  return g.degree() > 0;
}

}  // namespace

LieAlgebraBasis::LieAlgebraBasis(std::size_t dim, std::vector<AffineVectorField> fields)
    : dim_(dim), fields_(std::move(fields)) {
  for (const auto& f : fields_)
    if (f.dim() != dim_) throw std::invalid_argument("Lie algebra basis: field dimension mismatch");
  if (!fields_.empty() && rank(coordinate_vectors(), coord_len(dim_)) != fields_.size())
    throw std::invalid_argument("Lie algebra basis: fields are linearly dependent");
}

LieAlgebraBasis LieAlgebraBasis::spanned_by(std::size_t dim, const std::vector<AffineVectorField>& fields) {
  std::vector<AffineVectorField> kept;
  for (auto idx : independent_subset(coords_of(fields), coord_len(dim))) kept.push_back(fields[idx]);
  return {dim, std::move(kept)};
}

std::optional<LieAlgebraBasis> LieAlgebraBasis::with_structure(const LieAlgebraBasis& basis) {
  const std::size_t m = basis.size();
  StructureTable table(m, std::vector<QVector>(m));
  for (std::size_t i = 0; i < m; ++i) {
    table[i][i] = QVector(m, Rational(0));
    for (std::size_t j = i + 1; j < m; ++j) {
      auto c = basis.coordinates_of(bracket(basis[i], basis[j]));
      if (!c) return std::nullopt;
      table[i][j] = *c;
      QVector neg = *c;
      for (auto& x : neg) x = -x;
      table[j][i] = std::move(neg);
    }
  }
  LieAlgebraBasis out = basis;
  out.structure_ = std::move(table);
  return out;
}

std::vector<QVector> LieAlgebraBasis::coordinate_vectors() const { return coords_of(fields_); }

std::optional<QVector> LieAlgebraBasis::coordinates_of(const AffineVectorField& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("Lie algebra basis: field dimension mismatch");
  return span_coordinates(coordinate_vectors(), x.coords());
}

bool LieAlgebraBasis::contains(const LieAlgebraBasis& other) const {
  for (const auto& f : other.fields())
    if (!contains(f)) return false;
  return true;
}

bool LieAlgebraBasis::same_span(const LieAlgebraBasis& other) const {
  return size() == other.size() && contains(other);
}

bool LieAlgebraBasis::is_closed() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!contains(bracket(fields_[i], fields_[j]))) return false;
  return true;
}

LieAlgebraBasis full_affine_algebra(std::size_t dim) {
  std::vector<AffineVectorField> fields;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) fields.push_back(AffineVectorField::linear(dim, i, j));
  for (std::size_t i = 0; i < dim; ++i) fields.push_back(AffineVectorField::translation(dim, i));
  return {dim, std::move(fields)};
}

LieAlgebraBasis symmetry_algebra(const Hypersurface& s, const SymmetryOptions& options) {
  if (options.mu_degree < 0) throw std::invalid_argument("multiplier degree must be nonnegative");
  const RPoly& f = s.F();
  if (options.mu_degree == 0 && has_monomial_factor(f))
    throw InvalidSurface("defining polynomial is reducible (common monomial factor); supply a multiplier degree");
  const std::size_t dim = s.ambient_dim();
  const auto mus = monomials_up_to(dim, options.mu_degree);

  // Unknowns: A (row-major), b, then one coefficient per multiplier monomial.
  std::vector<RPoly> images;
  images.reserve(coord_len(dim) + mus.size());
  std::vector<RPoly> partials;
  for (std::size_t i = 0; i < dim; ++i) partials.push_back(f.derivative(i));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) images.push_back(RPoly::variable(dim, j) * partials[i]);
  for (std::size_t i = 0; i < dim; ++i) images.push_back(partials[i]);
  for (const auto& m : mus) images.push_back(-(RPoly::term(dim, m, Rational(1)) * f));

  std::map<Monomial, std::size_t, GrlexLess> row_of;
  for (const auto& img : images)
    for (const auto& [m, c] : img.terms()) row_of.emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;

  QMatrix system(row_of.size(), images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (const auto& [m, c] : images[k].terms()) system(row_of.at(m), k) = c;

  std::vector<AffineVectorField> fields;
  for (const auto& v : nullspace(system)) {
    QVector head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(coord_len(dim)));
    fields.push_back(AffineVectorField::from_coords(head, dim));
  }
  return {dim, std::move(fields)};
}

LieAlgebraBasis isotropy_at(const LieAlgebraBasis& l, const QVector& p) {
  if (p.size() != l.dim()) throw std::invalid_argument("isotropy_at: point dimension mismatch");
  if (l.empty()) return LieAlgebraBasis(l.dim());
  std::vector<QVector> evals;
  for (const auto& f : l.fields()) evals.push_back(f.evaluate(p));
  auto coeffs = nullspace(QMatrix::from_columns(evals, l.dim()));
  return {l.dim(), fields_from(l.fields(), coeffs)};
}

std::size_t transitivity_rank(const LieAlgebraBasis& l, const QVector& p, const Hypersurface& s) {
  if (p.size() != s.ambient_dim() || l.dim() != s.ambient_dim())
    throw std::invalid_argument("transitivity_rank: dimension mismatch");
  if (!s.contains(p)) throw std::invalid_argument("transitivity_rank: point is not on the surface");
  if (l.empty()) return 0;
  std::vector<QVector> evals;
  for (const auto& f : l.fields()) evals.push_back(f.evaluate(p));
  const std::size_t e = rank(evals, l.dim());
  // Tangent plane T = ker grad F(p); dim(E cap T) = dim E + dim T - dim(E + T).
  QMatrix grad = QMatrix::from_rows({s.gradient(p)}, l.dim());
  auto tangent = nullspace(grad);
  std::vector<QVector> sum = evals;
  sum.insert(sum.end(), tangent.begin(), tangent.end());
  return e + tangent.size() - rank(sum, l.dim());
}

Filtration filtration(const LieAlgebraBasis& h, const LieAlgebraBasis& g_full, const QVector& p) {
  if (h.dim() != g_full.dim()) throw std::invalid_argument("filtration: dimension mismatch");
  if (!h.is_closed()) throw std::invalid_argument("filtration: h is not closed under the bracket");
  const std::size_t len = coord_len(h.dim());
  Filtration out;
  out.chain.push_back(isotropy_at(g_full, p));
  out.dims.push_back(out.chain.back().size());
  for (;;) {
    const LieAlgebraBasis& gi = out.chain.back();
    std::vector<QVector> sum = gi.coordinate_vectors();
    for (const auto& y : h.fields()) sum.push_back(y.coords());
    auto ann = annihilator(sum, len);

    LieAlgebraBasis next = gi;
    if (!ann.empty() && !gi.empty()) {
      // Row (phi, j), column k: phi([X_k, Y_j]).
      QMatrix cond(ann.size() * h.size(), gi.size());
      for (std::size_t k = 0; k < gi.size(); ++k)
        for (std::size_t j = 0; j < h.size(); ++j) {
          QVector br = bracket(gi[k], h[j]).coords();
          for (std::size_t a = 0; a < ann.size(); ++a) {
            Rational dot = 0;
            for (std::size_t t = 0; t < len; ++t)
              if (!is_zero(ann[a][t])) dot += ann[a][t] * br[t];
            cond(a * h.size() + j, k) = dot;
          }
        }
      next = LieAlgebraBasis(h.dim(), fields_from(gi.fields(), nullspace(cond)));
    }
    const bool stable = next.size() == gi.size();
    out.chain.push_back(std::move(next));
    out.dims.push_back(out.chain.back().size());
    if (stable) break;
  }
  out.stabilized_at = out.chain.size() - 2;
  return out;
}

bool check_prop_cs(const LieAlgebraBasis& h, const Filtration& filt, std::size_t i) {
  const LieAlgebraBasis& gi = filt.at(i);
  const LieAlgebraBasis& gnext = filt.at(i + 1);
  std::vector<AffineVectorField> small = h.fields();
  small.insert(small.end(), gnext.fields().begin(), gnext.fields().end());
  std::vector<AffineVectorField> big = h.fields();
  big.insert(big.end(), gi.fields().begin(), gi.fields().end());
  LieAlgebraBasis lhs = LieAlgebraBasis::spanned_by(h.dim(), small);
  // One elimination: membership in h + g_i is vanishing of every functional.
  std::vector<QVector> coords;
  for (const auto& f : big) coords.push_back(f.coords());
  const std::vector<QVector> ann = annihilator(coords, coords.front().size());
  auto in_rhs = [&](const QVector& v) {
    for (const auto& row : ann) {
      Rational dot = 0;
      for (std::size_t t = 0; t < v.size(); ++t)
        if (!is_zero(row[t]) && !is_zero(v[t])) dot += row[t] * v[t];
      if (!is_zero(dot)) return false;
    }
    return true;
  };
  for (std::size_t a = 0; a < lhs.size(); ++a)
    for (std::size_t b = a + 1; b < lhs.size(); ++b)
      if (!in_rhs(bracket(lhs[a], lhs[b]).coords())) return false;
  return true;
}

}  // namespace afh
