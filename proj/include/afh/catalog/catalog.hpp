#pragma once

#include "afh/symmetry/hypersurface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace afh {

enum class Family { T1Quadric, T2_1, T2_2, T2_3, T2_4, T2_5, T2_6, T2_7, Sec6Gamma };

// CLI names: t1, t2.1 ... t2.7, sec6.
std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();
bool is_theorem2(Family f);

struct SurfaceId {
  Family family = Family::T1Quadric;
  std::size_t n = 4;
  std::optional<Rational> alpha;  // present iff family == T2_3

  // Throws std::invalid_argument on a bad family/n/alpha combination.
  void validate() const;
  std::string label() const;
};

// Defining polynomial with the printed normal form; explicit families are
// written as x_{n+1} - (rhs). Reference point is the origin unless the jet is
// degenerate there (T2_4, Sec6Gamma), in which case (1, 0, ..., 0, *).
Hypersurface make_surface(const SurfaceId& id);

// The alternate printed form of T2_5, expanded.
RPoly t2_5_alternate(std::size_t n);

// Affine group of the Sec6 surface. s holds s_3 .. s_n.
struct GroupParams {
  Rational q = 1;
  Rational r = 1;
  Rational t = 0;
  std::vector<Rational> s;

  static GroupParams identity(std::size_t n);
  void validate(std::size_t n) const;
};

// Test hooks that break one term of the printed map.
struct GroupMapVariant {
  bool flip_x2_sign = false;   // x_2 -> -r^2 (...)
  bool drop_sum_s_sq = false;  // x_{n+1} map without x_1 sum s_j^2
};

QVector group_act(const GroupParams& g, const QVector& x, const GroupMapVariant& v = {});

// compose(a, b) acts as a after b.
GroupParams compose(const GroupParams& a, const GroupParams& b);
GroupParams inverse(const GroupParams& g);

// F o g == q r^2 F for the Sec6 surface of dimension n.
bool surface_invariance(const GroupParams& g, std::size_t n, const GroupMapVariant& v = {});

enum class Side { Greater, Less };

struct TransitivityVariant {
  GroupMapVariant map;
  bool wrong_side = false;  // use the other side's sign of h in the parameters
};

// Substitutes the parameter formulas (q, r, t, s_j as functions of x and
// sqrt(h), sqrt(x_1)) into the image of the base point (1, 0, ..., 0, +-1)
// and checks the result equals x identically.
bool verify_transitivity(std::size_t n, Side side, const TransitivityVariant& v = {});

}  // namespace afh
