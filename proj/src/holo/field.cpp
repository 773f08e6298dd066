#include "afh/holo/field.hpp"

#include <stdexcept>

namespace afh {

namespace {

const GaussRational kI = GaussRational::i();

void check_dims(const HoloVectorField& a, const HoloVectorField& b) {
  if (a.n != b.n) throw std::invalid_argument("holomorphic fields of different dimension");
}

// Holomorphic polynomial in z_1..z_{n+1} viewed in the 2(n+1) variables (z, conj z).
CPoly lift(const CPoly& p, std::size_t n) {
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i <= n; ++i) pos[i] = i;
  return p.reindexed(2 * (n + 1), pos);
}

}  // namespace

HoloVectorField HoloVectorField::zero(std::size_t n) { return {n, std::vector<CPoly>(n + 1, CPoly(n + 1))}; }

bool HoloVectorField::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

CVector HoloVectorField::evaluate(const CVector& z) const {
  CVector out;
  for (const auto& c : comps) out.push_back(c.evaluate(z));
  return out;
}

HoloVectorField& HoloVectorField::operator+=(const HoloVectorField& o) {
  check_dims(*this, o);
  for (std::size_t j = 0; j < comps.size(); ++j) comps[j] += o.comps[j];
  return *this;
}

HoloVectorField operator*(const GaussRational& c, HoloVectorField a) {
  for (auto& p : a.comps) p *= c;
  return a;
}

RealDefiningPoly::RealDefiningPoly(std::size_t n_, CPoly rho_) : n(n_), rho(std::move(rho_)) {
  if (rho.nvars() != 2 * (n + 1)) throw std::invalid_argument("defining polynomial needs 2(n+1) variables");
  if (conjugate_swap(rho) != rho) throw std::invalid_argument("defining polynomial is not real");
}

RealDefiningPoly RealDefiningPoly::from_real_parts(std::size_t n, const RPoly& f) {
  const std::size_t m = n + 1;
  if (f.nvars() != m) throw std::invalid_argument("real-part polynomial needs n+1 variables");
  std::vector<CPoly> x;
  for (std::size_t j = 0; j < m; ++j)
    x.push_back((CPoly::variable(2 * m, j) + CPoly::variable(2 * m, j + m)) * GaussRational(Rational(1, 2)));
  return {n, poly_compose<GaussRational>(to_complex(f), x)};
}

RealDefiningPoly gamma_tilde(std::size_t n) {
  if (n < 2) throw std::invalid_argument("gamma_tilde requires n >= 2");
  const std::size_t m = n + 1;
  RPoly x1 = RPoly::variable(m, 0);
  RPoly f = RPoly::variable(m, n) - x1 * RPoly::variable(m, 1);
  for (std::size_t j = 2; j < n; ++j) f -= x1 * RPoly::variable(m, j) * RPoly::variable(m, j);
  return RealDefiningPoly::from_real_parts(n, f);
}

CPoly real_part_action(const HoloVectorField& y, const RealDefiningPoly& rho) {
  if (y.n != rho.n) throw std::invalid_argument("real_part_action: dimension mismatch");
  CPoly p(2 * (y.n + 1));
  for (std::size_t j = 0; j <= y.n; ++j) p += lift(y.comps[j], y.n) * rho.rho.derivative(j);
  return p + conjugate_swap(p);
}

Tangency tangency(const HoloVectorField& y, const RealDefiningPoly& rho) {
  CPoly r = real_part_action(y, rho);
  const std::size_t nv = r.nvars();
  if (r.is_zero()) return {true, CPoly(nv)};
  // Prefer a variable in which rho is linear with constant coefficient:
  // then rho divides r iff the division in that variable leaves nothing.
  for (std::size_t v = 0; v < nv; ++v) {
    CPoly lead(nv), rest(nv);
    bool linear = true;
    for (const auto& [m, c] : rho.rho.terms()) {
      if (m[v] > 1) linear = false;
      Monomial reduced = m;
      reduced.set(v, 0);
      (m[v] == 1 ? lead : rest).add_term(reduced, c);
    }
    if (!linear || lead.degree() != 0) continue;
    const GaussRational c = lead.coeff(Monomial{});
    CPoly rem = r, mu(nv);
    while (true) {
      int top = 0;
      for (const auto& [m, coeff] : rem.terms()) top = std::max(top, static_cast<int>(m[v]));
      if (top == 0) break;
      CPoly slice(nv);
      for (const auto& [m, coeff] : rem.terms())
        if (m[v] == top) {
          Monomial q = m;
          q.set(v, top - 1);
          slice.add_term(q, coeff / c);
        }
      mu += slice;
      rem -= slice * rho.rho;
    }
    if (!rem.is_zero() || conjugate_swap(mu) != mu) return {false, std::nullopt};
    return {true, mu};
  }
  // Fallback: constant real multiplier.
  GaussRational ratio = r.leading().second / rho.rho.leading().second;
  if (ratio.is_real() && r == rho.rho * ratio) return {true, CPoly::constant(nv, ratio)};
  return {false, std::nullopt};
}

bool holo_tangent(const HoloVectorField& y, const RealDefiningPoly& rho) { return tangency(y, rho).tangent; }

HoloVectorField holo_bracket(const HoloVectorField& x, const HoloVectorField& y) {
  check_dims(x, y);
  HoloVectorField out = HoloVectorField::zero(x.n);
  for (std::size_t j = 0; j <= x.n; ++j)
    for (std::size_t k = 0; k <= x.n; ++k)
      out.comps[j] += x.comps[k] * y.comps[j].derivative(k) - y.comps[k] * x.comps[j].derivative(k);
  return out;
}

RealEncoder::RealEncoder(const std::vector<HoloVectorField>& seed) {
  for (const auto& f : seed)
    for (std::size_t j = 0; j < f.comps.size(); ++j)
      for (const auto& [m, c] : f.comps[j].terms()) index_.emplace(std::make_pair(j, m), index_.size());
}

std::optional<QVector> RealEncoder::encode(const HoloVectorField& f) const {
  QVector v(dim(), Rational(0));
  for (std::size_t j = 0; j < f.comps.size(); ++j)
    for (const auto& [m, c] : f.comps[j].terms()) {
      auto it = index_.find({j, m});
      if (it == index_.end()) return std::nullopt;
      v[2 * it->second] = c.re();
      v[2 * it->second + 1] = c.im();
    }
  return v;
}

std::size_t real_span_dim(const std::vector<HoloVectorField>& fields) {
  RealEncoder enc(fields);
  std::vector<QVector> vs;
  for (const auto& f : fields) vs.push_back(*enc.encode(f));
  return rank(vs, enc.dim());
}

ClosureResult algebra_closure(const std::vector<HoloVectorField>& fields) {
  RealEncoder enc(fields);
  std::vector<QVector> basis;
  for (const auto& f : fields) basis.push_back(*enc.encode(f));
  if (rank(basis, enc.dim()) != fields.size())
    throw std::invalid_argument("algebra_closure: fields are not real-linearly independent");
  ClosureResult out;
  out.dim = fields.size();
  out.structure.assign(fields.size(), std::vector<QVector>(fields.size(), QVector(fields.size(), Rational(0))));
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      auto v = enc.encode(holo_bracket(fields[i], fields[j]));
      std::optional<QVector> coords;
      if (v) coords = span_coordinates(basis, *v);
      if (!coords) {
        out.failures.emplace_back(i, j);
        continue;
      }
      out.structure[i][j] = *coords;
      for (auto& c : *coords) c = -c;
      out.structure[j][i] = *coords;
    }
  out.closed = out.failures.empty();
  return out;
}

std::size_t isotropy_dim_at(const std::vector<HoloVectorField>& fields, const CVector& p0, const RealDefiningPoly& rho) {
  CVector both = p0;
  for (const auto& z : p0) both.push_back(z.conj());
  if (both.size() != rho.rho.nvars() || !rho.rho.evaluate(both).is_zero())
    throw std::invalid_argument("isotropy_dim_at: base point is not on the hypersurface");
  std::vector<QVector> evals;
  for (const auto& f : fields) {
    QVector e;
    for (const auto& z : f.evaluate(p0)) {
      e.push_back(z.re());
      e.push_back(z.im());
    }
    evals.push_back(e);
  }
  return real_span_dim(fields) - rank(evals, 2 * p0.size());
}

namespace {

struct FieldBuilder {
  std::size_t n;
  HoloVectorField f;
  explicit FieldBuilder(std::size_t n_) : n(n_), f(HoloVectorField::zero(n_)) {}
  CPoly z(std::size_t j) const { return CPoly::variable(n + 1, j - 1); }  // 1-based
  CPoly one() const { return CPoly::constant(n + 1, GaussRational(1)); }
  FieldBuilder& add(std::size_t j, const CPoly& p) {
    f.comps[j - 1] += p;
    return *this;
  }
};

}  // namespace

std::vector<LabeledField> section6_generators(std::size_t n) {
  if (n < 3) throw std::invalid_argument("section6_generators requires n >= 3");
  std::vector<LabeledField> out;
  auto push = [&](std::string name, const FieldBuilder& b) {
    std::string label = "Y" + std::to_string(out.size() + 1);
    if (!name.empty()) label += " = " + name;
    out.push_back({label, b.f});
  };
  const std::size_t top = n + 1;
  for (std::size_t j = 1; j <= top; ++j) {
    FieldBuilder b(n);
    push("", b.add(j, b.one() * kI));
  }
  {
    FieldBuilder b(n);
    push("", b.add(1, b.z(1)).add(top, b.z(top)));
  }
  for (std::size_t j = 3; j <= n; ++j) {
    FieldBuilder b(n);
    push("", b.add(2, b.z(j) * GaussRational(-2)).add(j, b.one()));
  }
  {
    FieldBuilder b(n);
    push("", b.add(2, b.one()).add(top, b.z(1)));
  }
  {
    FieldBuilder b(n);
    b.add(2, b.z(2) * GaussRational(2)).add(top, b.z(top) * GaussRational(2));
    for (std::size_t j = 3; j <= n; ++j) b.add(j, b.z(j));
    push("", b);
  }
  for (std::size_t j = 3; j <= n; ++j)
    for (std::size_t k = j + 1; k <= n; ++k) {
      FieldBuilder b(n);
      push("R_{" + std::to_string(j) + "," + std::to_string(k) + "}", b.add(j, b.z(k)).add(k, -b.z(j)));
    }
  for (std::size_t j = 3; j <= n; ++j)
    for (std::size_t k = j + 1; k <= n; ++k) {
      FieldBuilder b(n);
      b.add(j, b.z(k) * kI).add(k, b.z(j) * kI).add(2, b.z(j) * b.z(k) * (GaussRational(-2) * kI));
      push("I_{" + std::to_string(j) + "," + std::to_string(k) + "}", b);
    }
  for (std::size_t j = 3; j <= n; ++j) {
    FieldBuilder b(n);
    push("", b.add(2, b.z(j) * b.z(j) * (-kI)).add(j, b.z(j) * kI));
  }
  {
    FieldBuilder b(n);
    push("", b.add(2, (b.z(1) - b.one()) * (GaussRational(2) * kI)).add(top, (b.z(1) * b.z(1) - b.one()) * kI));
  }
  {
    FieldBuilder b(n);
    b.add(1, (b.z(1) * b.z(1) - b.one()) * GaussRational(Rational(0), Rational(1, 2)));
    b.add(2, b.z(top) * kI).add(top, b.z(1) * b.z(top) * kI);
    push("", b);
  }
  return out;
}

std::vector<HoloVectorField> fields_of(const std::vector<LabeledField>& labeled) {
  std::vector<HoloVectorField> out;
  for (const auto& l : labeled) out.push_back(l.field);
  return out;
}

CVector section6_base_point(std::size_t n) {
  CVector p(n + 1, GaussRational(0));
  p[0] = 1;
  return p;
}

Sl2Triple sl2_triple(std::size_t n) {
  auto gens = section6_generators(n);
  const HoloVectorField& last = gens.back().field;
  HoloVectorField a = GaussRational(Rational(1, 2)) * last;
  HoloVectorField h = gens[n + 1].field;
  HoloVectorField b = a + GaussRational(Rational(1, 4)) * gens[0].field;
  return {a, h, b};
}

QMatrix killing_form(const ClosureResult& c) {
  if (!c.closed) throw std::invalid_argument("killing_form needs a closed family");
  const std::size_t d = c.dim;
  QMatrix k(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Rational t = 0;
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t m = 0; m < d; ++m) t += c.structure[a][j][m] * c.structure[b][m][j];
      k(a, b) = t;
    }
  return k;
}

}  // namespace afh
