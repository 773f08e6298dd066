#pragma once

#include "afh/algebra/linalg.hpp"
#include "afh/algebra/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace afh {

using CVector = std::vector<GaussRational>;

// Holomorphic polynomial vector field sum_j comps[j] d/dz_j on C^{n+1}.
struct HoloVectorField {
  std::size_t n = 0;
  std::vector<CPoly> comps;  // n + 1 polynomials in z_1 .. z_{n+1}

  static HoloVectorField zero(std::size_t n);
  std::size_t dim() const { return n + 1; }
  bool is_zero() const;
  CVector evaluate(const CVector& z) const;

  HoloVectorField& operator+=(const HoloVectorField& o);
  friend HoloVectorField operator+(HoloVectorField a, const HoloVectorField& b) { return a += b; }
  friend HoloVectorField operator*(const GaussRational& c, HoloVectorField a);
  friend bool operator==(const HoloVectorField& a, const HoloVectorField& b) { return a.n == b.n && a.comps == b.comps; }
};

// Real polynomial in (z_1..z_{n+1}, conj z_1..conj z_{n+1}).
struct RealDefiningPoly {
  std::size_t n = 0;
  CPoly rho;

  // Throws std::invalid_argument unless rho is fixed by conjugate_swap.
  RealDefiningPoly(std::size_t n, CPoly rho);
  // From a polynomial in the real parts x_j = (z_j + conj z_j)/2.
  static RealDefiningPoly from_real_parts(std::size_t n, const RPoly& f);
};

// rho for the tube over x_{n+1} = x_1 x_2 + x_1 sum_{j>=3} x_j^2.
RealDefiningPoly gamma_tilde(std::size_t n);

// 2 Re(sum_j Y_j d rho / dz_j) as a polynomial in (z, conj z).
CPoly real_part_action(const HoloVectorField& y, const RealDefiningPoly& rho);

struct Tangency {
  bool tangent = false;
  std::optional<CPoly> multiplier;  // real mu with real_part_action = mu rho
};

// Tangent iff real_part_action(Y, rho) = mu rho with a real polynomial mu.
Tangency tangency(const HoloVectorField& y, const RealDefiningPoly& rho);
bool holo_tangent(const HoloVectorField& y, const RealDefiningPoly& rho);

HoloVectorField holo_bracket(const HoloVectorField& x, const HoloVectorField& y);

// Real coordinates of fields over a shared monomial index: for every
// component and monomial, the real and imaginary part of the coefficient.
class RealEncoder {
 public:
  explicit RealEncoder(const std::vector<HoloVectorField>& seed);
  // nullopt when f uses a monomial outside the seed, hence outside its span.
  std::optional<QVector> encode(const HoloVectorField& f) const;
  std::size_t dim() const { return 2 * index_.size(); }

 private:
  struct KeyLess {
    bool operator()(const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return GrlexLess{}(a.second, b.second);
    }
  };
  std::map<std::pair<std::size_t, Monomial>, std::size_t, KeyLess> index_;
};

// Real-linear span dimension of the fields.
std::size_t real_span_dim(const std::vector<HoloVectorField>& fields);

struct ClosureResult {
  bool closed = false;
  std::size_t dim = 0;
  // structure[i][j] = coordinates of [f_i, f_j] in the basis (when closed).
  std::vector<std::vector<QVector>> structure;
  std::vector<std::pair<std::size_t, std::size_t>> failures;
};

// Requires real-linearly independent fields (std::invalid_argument otherwise).
ClosureResult algebra_closure(const std::vector<HoloVectorField>& fields);

// Real dimension of the combinations of the fields vanishing at p0. Throws
// std::invalid_argument if p0 is not on rho = 0.
std::size_t isotropy_dim_at(const std::vector<HoloVectorField>& fields, const CVector& p0, const RealDefiningPoly& rho);

struct LabeledField {
  std::string label;
  HoloVectorField field;
};

// Y_1 .. Y_{n^2-2n+8} in order, with the corrections needed for tangency:
// Y_{n+j} moves along d/dz_2 and I_{j,k} carries -2i z_j z_k d/dz_2.
std::vector<LabeledField> section6_generators(std::size_t n);
std::vector<HoloVectorField> fields_of(const std::vector<LabeledField>& labeled);

// Base point (1, 0, ..., 0).
CVector section6_base_point(std::size_t n);

struct Sl2Triple {
  HoloVectorField a, h, b;
};

// A = Y_last / 2, H = Y_{n+2}, B = Y_last / 2 + Y_1 / 4.
Sl2Triple sl2_triple(std::size_t n);

// Killing form tr(ad x ad y) of a closed family, from its structure constants.
QMatrix killing_form(const ClosureResult& closure);

}  // namespace afh
