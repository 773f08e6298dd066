#include "afh/suites/suites.hpp"

#include "afh/holo/cm.hpp"
#include "afh/holo/field.hpp"
#include "afh/invariants/l1.hpp"

#include <chrono>
#include <future>
#include <random>

namespace afh {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotApplicable:
      return "n/a";
  }
  return "?";
}

bool Section::failed() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return true;
  return false;
}

std::vector<Section> run_parallel(const std::vector<std::function<Section()>>& tasks, unsigned jobs) {
  std::vector<Section> out(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  for (std::size_t start = 0; start < tasks.size(); start += jobs) {
    std::vector<std::future<Section>> batch;
    for (std::size_t i = start; i < std::min(tasks.size(), start + jobs); ++i)
      batch.push_back(std::async(std::launch::async, tasks[i]));
    for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
  }
  return out;
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string title) { section_.title = std::move(title); }

  // Runs f, which returns the value string; status from comparison with expected.
  template <class F>
  void expect(const std::string& name, const std::string& expected, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    std::string value = f();
    push(name, value == expected ? Status::Pass : Status::Fail, value, expected, t0);
  }
  // Runs f, which returns (status, value).
  template <class F>
  void check(const std::string& name, const std::string& expected, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto [status, value] = f();
    push(name, status, value, expected, t0);
  }
  template <class F>
  void info(const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    std::string value = f();
    push(name, Status::Pass, value, "", t0);
  }
  void not_applicable(const std::string& name, const std::string& why) {
    section_.checks.push_back({name, Status::NotApplicable, why, "", 0});
  }
  Section take() { return std::move(section_); }

 private:
  void push(const std::string& name, Status s, std::string value, std::string expected,
            std::chrono::steady_clock::time_point t0) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    section_.checks.push_back({name, s, std::move(value), std::move(expected), secs});
  }
  Section section_;
};

std::string sig_string(std::size_t p, std::size_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string list_string(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "]";
}

std::vector<std::string> u_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
  return names;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::pair<Status, std::string> holds(bool ok, std::string value) {
  return {ok ? Status::Pass : Status::Fail, std::move(value)};
}

}  // namespace

Section analyze_surface(const std::string& title, const Hypersurface& s) {
  Recorder r(title);
  const QVector& p = s.ref_point();
  const std::size_t n = s.n();
  LieAlgebraBasis sym = symmetry_algebra(s);
  LieAlgebraBasis iso = isotropy_at(sym, p);
  r.info("symmetry_dim", [&] { return std::to_string(sym.size()); });
  r.info("isotropy_dim", [&] { return std::to_string(iso.size()); });
  r.info("transitivity_rank", [&] { return std::to_string(transitivity_rank(sym, p, s)); });
  r.info("filtration_dims", [&] {
    Filtration f = filtration(sym, full_affine_algebra(n + 1), p);
    std::vector<std::string> dims;
    for (auto d : f.dims) dims.push_back(std::to_string(d));
    return list_string(dims);
  });
  Jet3 jet = graph_jet(s, p);
  Signature raw = second_fundamental_signature(jet);
  r.info("signature", [&] { return sig_string(std::max(raw.p, raw.q), std::min(raw.p, raw.q)); });
  r.info("signature_graph_orientation", [&] { return sig_string(raw.p, raw.q); });
  if (raw.degenerate()) {
    r.not_applicable("l1", "second fundamental form is degenerate");
    return r.take();
  }
  std::optional<AdaptedFrame> frame;
  try {
    frame = adapt_frame(jet);
  } catch (const std::domain_error& e) {
    r.not_applicable("adapted_frame", e.what());
  }
  if (frame) r.info("adapted_metric_scale", [&] { return to_string(frame->metric.scale); });
  L1Tensor t = extract_L1(frame ? frame->jet : jet);
  r.info("l1_trace_free_cubic", [&] { return to_string(t.T, u_names(n)); });
  r.info("l1_trace_shift", [&] { return list_string(to_strings(t.D_shift)); });
  r.info("pseudo_norm_sq", [&] { return to_string(pseudo_norm_sq(t)); });
  OrbitType orbit = classify_L1(t);
  r.info("orbit_type", [&] {
    std::string s2 = to_string(orbit.tag);
    if (!orbit.params.empty()) s2 += " " + list_string(to_strings(QVector(orbit.params)));
    return s2;
  });
  if (!orbit.diagnostic.empty()) r.info("orbit_diagnostic", [&] { return orbit.diagnostic; });
  TubeWitness tube = tube_criterion(s, p, iso);
  if (tube.result == TubeResult::NotApplicable) {
    r.not_applicable("tube_criterion", "trace-free L1 vanishes");
  } else {
    r.info("tube_criterion", [&] { return to_string(tube.result); });
    if (tube.result == TubeResult::True) r.info("tube_lambda", [&] { return to_string(tube.lambda); });
  }
  return r.take();
}

Section verify_theorem1(std::size_t n) {
  Hypersurface s = make_surface({Family::T1Quadric, n, std::nullopt});
  Recorder r("theorem1 n=" + std::to_string(n));
  const QVector& p = s.ref_point();
  const std::size_t expected_dim = n + n * (n - 1) / 2 + 1;
  r.expect("signature", sig_string(n, 0), [&] {
    Signature sig = second_fundamental_signature(graph_jet(s, p));
    return sig_string(sig.p, sig.q);
  });
  r.expect("l1_trace_free_zero", "true", [&] { return bool_string(extract_L1(graph_jet(s, p)).is_zero()); });
  LieAlgebraBasis sym = symmetry_algebra(s);
  r.expect("symmetry_dim_tangency", std::to_string(expected_dim), [&] { return std::to_string(sym.size()); });
  r.expect("symmetry_dim_filtration", std::to_string(expected_dim), [&] {
    Filtration f = filtration(sym, full_affine_algebra(n + 1), p);
    return std::to_string(f.limit().size() + transitivity_rank(sym, p, s));
  });
  return r.take();
}

std::vector<SurfaceId> theorem2_ids(std::size_t n) {
  std::vector<SurfaceId> ids;
  for (Family f : all_families()) {
    if (!is_theorem2(f)) continue;
    if (f == Family::T2_3) {
      for (Rational a : {Rational(0), Rational(1, 12), Rational(1, 7), Rational(1)}) ids.push_back({f, n, a});
    } else {
      ids.push_back({f, n, std::nullopt});
    }
  }
  return ids;
}

Section verify_theorem2(const SurfaceId& id) {
  Recorder r("theorem2 " + id.label());
  Hypersurface s = make_surface(id);
  const std::size_t n = id.n;
  const QVector& p = s.ref_point();
  Jet3 jet = graph_jet(s, p);
  AdaptedFrame frame = adapt_frame(jet);
  r.expect("signature", sig_string(n - 1, 1), [&] { return sig_string(frame.metric.p, frame.metric.q); });
  LieAlgebraBasis sym = symmetry_algebra(s);
  LieAlgebraBasis iso = isotropy_at(sym, p);
  const std::size_t bound = (n - 2) * (n - 3) / 2;
  r.check("isotropy_dim", ">= " + std::to_string(bound),
          [&] { return holds(iso.size() >= bound, std::to_string(iso.size())); });
  r.expect("transitivity_rank", std::to_string(n), [&] { return std::to_string(transitivity_rank(sym, p, s)); });
  L1Tensor t = extract_L1(frame.jet);
  r.expect("pseudo_norm_sq", "0", [&] { return to_string(pseudo_norm_sq(t)); });
  const OrbitTag expected = id.family == Family::T2_1   ? OrbitTag::Zero
                            : id.family == Family::T2_2 ? OrbitTag::CubeNull
                            : id.family == Family::T2_3 ? OrbitTag::SquareNullLinear
                                                        : OrbitTag::NullTimesQuadric;
  r.expect("orbit_type", to_string(expected), [&] { return to_string(classify_L1(t).tag); });
  if (t.is_zero()) {
    r.not_applicable("tube_criterion", "trace-free L1 vanishes");
  } else {
    r.expect("tube_criterion", "true", [&] { return to_string(tube_criterion(s, p, iso).result); });
  }
  return r.take();
}

namespace {

Rational seeded_rational(std::mt19937_64& rng, bool nonzero, bool positive) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  while (true) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    if (positive) v = abs(v);
    if (!nonzero || sgn(v) != 0) return v;
  }
}

GroupParams seeded_params(std::mt19937_64& rng, std::size_t n) {
  GroupParams g;
  g.q = seeded_rational(rng, true, true);
  g.r = seeded_rational(rng, true, false);
  g.t = seeded_rational(rng, false, false);
  for (std::size_t j = 0; j + 2 < n; ++j) g.s.push_back(seeded_rational(rng, false, false));
  return g;
}

}  // namespace

Section verify_section6_real(std::size_t n, std::uint64_t seed, int samples) {
  Recorder r("section6 real n=" + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<GroupParams> params;
  for (int i = 0; i < samples; ++i) params.push_back(seeded_params(rng, n));
  const std::string all = std::to_string(samples) + "/" + std::to_string(samples);
  r.expect("surface_invariance", all, [&] {
    int ok = 0;
    for (const auto& g : params) ok += surface_invariance(g, n);
    return std::to_string(ok) + "/" + std::to_string(samples);
  });
  r.expect("group_law", all, [&] {
    int ok = 0;
    QVector x(n + 1);
    for (auto& c : x) c = seeded_rational(rng, false, false);
    for (std::size_t i = 0; i < params.size(); ++i) {
      const GroupParams& a = params[i];
      const GroupParams& b = params[(i + 1) % params.size()];
      ok += group_act(compose(a, b), x) == group_act(a, group_act(b, x)) &&
            group_act(compose(a, inverse(a)), x) == x;
    }
    return std::to_string(ok) + "/" + std::to_string(samples);
  });
  r.expect("transitivity_greater", "true", [&] { return bool_string(verify_transitivity(n, Side::Greater)); });
  r.expect("transitivity_less", "true", [&] { return bool_string(verify_transitivity(n, Side::Less)); });
  return r.take();
}

Section verify_section6_fields(std::size_t n) {
  Recorder r("section6 fields n=" + std::to_string(n));
  auto labeled = section6_generators(n);
  auto gens = fields_of(labeled);
  RealDefiningPoly rho = gamma_tilde(n);
  const std::size_t total = n * n - 2 * n + 8;
  r.expect("tangent_fields", std::to_string(total) + "/" + std::to_string(total), [&] {
    std::size_t ok = 0;
    for (const auto& g : gens) ok += holo_tangent(g, rho);
    return std::to_string(ok) + "/" + std::to_string(gens.size());
  });
  r.expect("closure", "true", [&] { return bool_string(algebra_closure(gens).closed); });
  const std::size_t iso = isotropy_dim_at(gens, section6_base_point(n), rho);
  r.expect("isotropy_dim", std::to_string(n * n - 4 * n + 7), [&] { return std::to_string(iso); });
  r.expect("dimension_ledger", std::to_string(total), [&] { return std::to_string(2 * n + 1 + iso); });
  Sl2Triple t = sl2_triple(n);
  ClosureResult c = algebra_closure({t.a, t.h, t.b});
  r.expect("sl2_closure", "true", [&] { return bool_string(c.closed); });
  r.expect("sl2_killing_signature", "(2,1)", [&] {
    if (!c.closed) return std::string("not closed");
    Congruence k = congruence_diagonalize(killing_form(c));
    return sig_string(k.p, k.q);
  });
  r.expect("sl2_vanishing_at_p0", "A", [&] {
    CVector p0 = section6_base_point(n);
    std::string which;
    const std::pair<const char*, const HoloVectorField*> named[] = {{"A", &t.a}, {"H", &t.h}, {"B", &t.b}};
    for (const auto& [name, f] : named) {
      bool zero = true;
      for (const auto& z : f->evaluate(p0)) zero = zero && z.is_zero();
      if (zero) which += which.empty() ? name : std::string(",") + name;
    }
    return which.empty() ? std::string("none") : which;
  });
  r.not_applicable("pushforward_Y_tilde", "printed formula is garbled; not verified");
  r.not_applicable("jacobian_phi_t", "printed matrix is inconsistent with the unitary claim; not verified");
  return r.take();
}

Section verify_section6_cm(std::size_t n, int cap) {
  Recorder r("section6 chern-moser n=" + std::to_string(n));
  CMExpansion e = cm_expand(n, cap);
  r.expect("re_w_eliminated", "0", [&] { return std::to_string(e.residual_u_terms); });
  r.expect("closed_form_agrees", "true", [&] { return bool_string(e.jet.pieces == cm_closed_form(n, cap).pieces); });
  r.expect("conjugate_symmetric", "true", [&] { return bool_string(e.jet.conjugate_symmetric()); });
  auto printed = printed_cm_pieces(n);
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n; ++j) names.push_back("w" + std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j) names.push_back("wb" + std::to_string(j));
  auto piece_check = [&](const std::string& name, int k, int l) {
    r.check(name, to_string(printed[{k, l}], names), [&] {
      CPoly got = e.jet.piece(k, l);
      return holds(got == printed[{k, l}], to_string(got, names));
    });
  };
  piece_check("F11", 1, 1);
  piece_check("F22", 2, 2);
  piece_check("F32", 3, 2);
  piece_check("F33", 3, 3);
  r.expect("trace_F22", "0", [&] { return to_string(cm_trace(e.jet.piece(2, 2), n, 1), names); });
  r.expect("trace2_F32", "0", [&] { return to_string(cm_trace(e.jet.piece(3, 2), n, 2), names); });
  r.expect("trace3_F33", "0", [&] { return to_string(cm_trace(e.jet.piece(3, 3), n, 3), names); });
  return r.take();
}

}  // namespace afh
