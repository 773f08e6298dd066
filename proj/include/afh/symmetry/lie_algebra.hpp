#pragma once

#include "afh/symmetry/hypersurface.hpp"
#include "afh/symmetry/vector_field.hpp"

#include <optional>
#include <vector>

namespace afh {

// Structure constants: [f_i, f_j] = sum_k c[i][j][k] f_k.
using StructureTable = std::vector<std::vector<QVector>>;

// Finite list of linearly independent affine fields on R^dim.
class LieAlgebraBasis {
 public:
  explicit LieAlgebraBasis(std::size_t dim) : dim_(dim) {}
  // Throws std::invalid_argument if the fields are dependent.
  LieAlgebraBasis(std::size_t dim, std::vector<AffineVectorField> fields);

  // Basis of the span of arbitrary fields (dependent ones dropped in order).
  static LieAlgebraBasis spanned_by(std::size_t dim, const std::vector<AffineVectorField>& fields);
  // Same basis with the structure table cached; nullopt if not bracket-closed.
  static std::optional<LieAlgebraBasis> with_structure(const LieAlgebraBasis& basis);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return fields_.size(); }
  bool empty() const { return fields_.empty(); }
  const std::vector<AffineVectorField>& fields() const { return fields_; }
  const AffineVectorField& operator[](std::size_t i) const { return fields_[i]; }
  const std::optional<StructureTable>& structure() const { return structure_; }

  std::vector<QVector> coordinate_vectors() const;
  std::optional<QVector> coordinates_of(const AffineVectorField& x) const;
  bool contains(const AffineVectorField& x) const { return coordinates_of(x).has_value(); }
  bool contains(const LieAlgebraBasis& other) const;
  bool same_span(const LieAlgebraBasis& other) const;
  bool is_closed() const;

 private:
  std::size_t dim_;
  std::vector<AffineVectorField> fields_;
  std::optional<StructureTable> structure_;
};

// All affine fields on R^dim: x_j d/dx_i in row-major order, then d/dx_i.
LieAlgebraBasis full_affine_algebra(std::size_t dim);

struct SymmetryOptions {
  // Total degree bound of the multiplier mu in X(F) = mu F. Zero means mu
  // is a constant, which is exact for irreducible F.
  int mu_degree = 0;
};

// Affine fields X with X(F) = mu F as a polynomial identity. Throws
// InvalidSurface when all terms of F share a monomial factor (F reducible)
// and options.mu_degree is zero.
LieAlgebraBasis symmetry_algebra(const Hypersurface& s, const SymmetryOptions& options = {});

// Fields of span(l) vanishing at p.
LieAlgebraBasis isotropy_at(const LieAlgebraBasis& l, const QVector& p);

// dim of {X_p : X in l} intersected with the tangent plane of s at p.
std::size_t transitivity_rank(const LieAlgebraBasis& l, const QVector& p, const Hypersurface& s);

// g_0 = isotropy of p in g_full, g_{i+1} = {X in g_i : [X, h] in g_i + h}.
// chain[stabilized_at] == chain[stabilized_at + 1] spans the same space and
// that pair is the end of the chain.
struct Filtration {
  std::vector<LieAlgebraBasis> chain;
  std::vector<std::size_t> dims;
  std::size_t stabilized_at = 0;

  // g_i, with indices past the end mapped to the stable term.
  const LieAlgebraBasis& at(std::size_t i) const { return chain[std::min(i, chain.size() - 1)]; }
  const LieAlgebraBasis& limit() const { return chain.back(); }
};

// Throws std::invalid_argument if h is not bracket-closed.
Filtration filtration(const LieAlgebraBasis& h, const LieAlgebraBasis& g_full, const QVector& p);

// For all X, Y in h + g_{i+1}: [X, Y] in h + g_i.
bool check_prop_cs(const LieAlgebraBasis& h, const Filtration& filt, std::size_t i);

}  // namespace afh
