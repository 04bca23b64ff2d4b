#include <algorithm>
#include <climits>

#include "condlab/conductor.hpp"

namespace condlab {

namespace {

using I64 = std::int64_t;

I64 choose2(I64 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// dim S_e in three variables
I64 dim_s(int e) { return e < 0 ? 0 : static_cast<I64>(e + 2) * (e + 1) / 2; }

I64 ideal_dim(const Ideal& I, int e) { return e < 0 ? 0 : I.dimension(e); }

VerdictReport start(const std::string& id, std::uint64_t seed, const RingPtr& ring) {
  VerdictReport v;
  v.statement_id = id;
  v.seed = seed;
  v.prime = ring->characteristic();
  return v;
}

BettiTable ideal_betti(const Ideal& I) {
  return betti_table(minimal_free_resolution(I.ring(), I.generators()), BettiTag::Ideal);
}

// Least degree of a generator of `gens` outside `base`; INT_MAX if none.
int indeg_modulo(const std::vector<Polynomial>& gens, const Ideal& base) {
  int best = INT_MAX;
  for (const auto& g : gens)
    if (!g.is_zero() && g.degree() < best && !base.contains(g)) best = g.degree();
  return best;
}

}  // namespace

VerdictReport verify_regularity_theorem(const ConductorReport& report, const CurveSpec& spec,
                                        const std::vector<Ideal>& sandwich) {
  VerdictReport v = start("plane-curves", report.seed, spec.ring());
  const int d = spec.degree();
  const int l = spec.num_components();
  v.observe("d", static_cast<I64>(d));
  v.observe("components", static_cast<I64>(l));
  v.observe("delta", report.delta);
  v.observe("route", to_string(report.route));
  if (report.smooth()) {
    v.note("smooth curve: the conductor is the unit ideal");
    v.expect("smooth_curve_is_irreducible", l == 1, true);
    return v;
  }
  v.observe("regularity", static_cast<I64>(report.regularity));
  v.observe("h0_jump_degree", static_cast<I64>(report.h0_jump_degree));
  v.require("reg_le_d_minus_1", report.regularity <= d - 1);
  v.expect("reg_lt_d_minus_1", report.regularity < d - 1, l == 1);
  v.expect("beta_1_d", report.degree_d_syzygies, static_cast<I64>(l - 1));
  if (sandwich.empty()) return v;
  if (l < 2) {
    v.note("intermediate ideals need a reducible curve; skipped");
    return v;
  }
  Ideal meet = intersection_points_ideal(spec);
  for (std::size_t k = 0; k < sandwich.size(); ++k) {
    const Ideal& J = sandwich[k];
    const std::string key = "sandwich_" + std::to_string(k) + "_";
    v.require(key + "contains_conductor", J.contains(report.conductor));
    v.require(key + "inside_intersection_ideal", meet.contains(J));
    v.require(key + "unmixed", is_saturated(J));
    BettiTable t = ideal_betti(J);
    v.expect(key + "reg", static_cast<I64>(regularity(t)), static_cast<I64>(d - 1));
    v.expect(key + "beta_1_d", t.beta(1, d), static_cast<I64>(l - 1));
  }
  return v;
}

VerdictReport kloosterman_check(const CurveSpec& spec, const Ideal& gamma, bool contains_intersections) {
  VerdictReport v = start("improved-kloosterman", spec.seed(), spec.ring());
  const int d = spec.degree();
  v.observe("d", static_cast<I64>(d));
  if (gamma.is_unit()) {
    v.note("empty set of points");
    return v;
  }
  BettiTable t = ideal_betti(gamma);
  v.observe("points", hilbert_polynomial_of_points(gamma.ring(), gamma.generators()));
  v.observe("regularity", static_cast<I64>(regularity(t)));
  v.require("reg_le_d_minus_1", regularity(t) <= d - 1);
  if (contains_intersections)
    v.expect("beta_1_d", t.beta(1, d), static_cast<I64>(spec.num_components() - 1));
  else
    v.observe("beta_1_d", t.beta(1, d));
  return v;
}

VerdictReport adjoint_completeness_check(const ConductorReport& report, const CurveSpec& spec) {
  VerdictReport v = start("adjoint", report.seed, spec.ring());
  const int d = spec.degree();
  v.observe("d", static_cast<I64>(d));
  v.observe("delta", report.delta);
  if (spec.num_components() != 1) throw PreconditionError("adjoint completeness needs an irreducible curve");
  v.expect("beta_1_d", report.degree_d_syzygies, I64{0});
  if (d < 3) {
    v.note("no adjoints below degree 3");
    return v;
  }
  const Ideal& c = report.conductor;
  v.expect("hf_quotient_d_minus_3", c.is_unit() ? 0 : c.quotient_dimension(d - 3), report.delta);
  v.expect("adjoints_d_minus_3", ideal_dim(c, d - 3), choose2(d - 1) - report.delta);
  return v;
}

VerdictReport jacobian_syzygy_analysis(const CurveSpec& spec, std::uint64_t seed) {
  VerdictReport v = start("derivatives", seed, spec.ring());
  Polynomial f = spec.total_form();
  const int d = spec.degree();
  const int l = spec.num_components();
  if (d % static_cast<int>(spec.ring()->characteristic()) == 0)
    throw PreconditionError("characteristic divides the degree");
  v.observe("d", static_cast<I64>(d));
  v.observe("components", static_cast<I64>(l));
  ConductorReport c = conductor_nodal(f, seed);
  v.observe("delta", c.delta);
  std::vector<Polynomial> partials;
  for (int i = 0; i < 3; ++i) partials.push_back(f.derivative(i));
  int mu = INT_MAX;
  for (const auto& s : syzygy_generators(partials))
    for (const auto& entry : s.components)
      if (!entry.is_zero()) mu = std::min(mu, entry.degree());
  v.observe("mu", static_cast<I64>(mu));
  v.require("mu_ge_d_minus_2", mu >= d - 2);
  v.expect("mu_eq_d_minus_2", mu == d - 2, l >= 2);
  if (l == 1 && !c.smooth()) v.expect("irreducibility_certificate_beta_1_d", c.degree_d_syzygies, I64{0});
  if (c.smooth()) v.note("smooth: partials form a regular sequence");
  return v;
}

VerdictReport linkage_regularity(const std::vector<Polynomial>& forms) {
  if (forms.size() != 3) throw PreconditionError("linkage_regularity takes three forms");
  const RingPtr& ring = forms[0].ring();
  if (ring->num_vars() != 3) throw PreconditionError("linkage_regularity works in three variables");
  VerdictReport v = start("reg-from-fitting", 0, ring);
  for (const auto& f : forms)
    if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError("linkage_regularity needs nonzero forms");
  Ideal a(ring, {forms[0], forms[1]});
  if (a.is_unit() || codimension(a) != 2) throw PreconditionError("first two forms are not a regular sequence");
  Ideal I = saturate(Ideal(ring, forms));
  if (I.is_unit() || codimension(I) != 2) throw PreconditionError("unmixed part is not of codimension two");

  FreeResolution res = minimal_free_resolution(ring, I.generators());
  const I64 direct = regularity(betti_table(res, BettiTag::Quotient));
  const int reg_a = forms[0].degree() + forms[1].degree() - 2;
  v.observe("reg_S_mod_a", static_cast<I64>(reg_a));
  v.observe("reg_direct", direct);

  Ideal colon = ideal_quotient(a, forms[2]);
  int indeg_colon = indeg_modulo(colon.generators(), a);
  if (indeg_colon == INT_MAX) throw PreconditionError("third form is a nonzerodivisor modulo the first two");
  v.observe("indeg_colon", static_cast<I64>(indeg_colon));
  v.expect("reg_colon", static_cast<I64>(reg_a - indeg_colon), direct);

  if (forms[2].degree() >= std::max(forms[0].degree(), forms[1].degree())) {
    std::vector<Polynomial> entries;
    for (const auto& s : syzygy_generators(forms))
      for (const auto& e : s.components) entries.push_back(e);
    int indeg_entries = indeg_modulo(entries, a);
    v.observe("indeg_syzygy_entries", static_cast<I64>(indeg_entries));
    v.expect("reg_syzygy_entries", static_cast<I64>(reg_a - indeg_entries), direct);
    // the Koszul column (f3, 0, -f1) puts f3 itself among the entries
    v.observe("third_form_degree", static_cast<I64>(forms[2].degree()));
    v.observe("entries_indeg_is_min_of_colon_and_third",
              indeg_entries == std::min(indeg_colon, forms[2].degree()));
  } else {
    v.note("third form is not of maximal degree; syzygy-entry formula skipped");
  }
  return v;
}

VerdictReport jacobian_linkage_regularity(const Polynomial& f, std::uint64_t seed) {
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> partials;
  for (int i = 0; i < 3; ++i) partials.push_back(f.derivative(i));
  Rng rng(seed);
  const PrimeField& F = ring->field();
  for (int attempt = 0; attempt < 5; ++attempt) {
    Coeff a[3][3];
    for (auto& row : a)
      for (auto& c : row) c = rng.scalar(F);
    auto m = [&](int r0, int r1, int c0, int c1) {
      return F.sub(F.mul(a[r0][c0], a[r1][c1]), F.mul(a[r0][c1], a[r1][c0]));
    };
    Coeff det = F.add(F.sub(F.mul(a[0][0], m(1, 2, 1, 2)), F.mul(a[0][1], m(1, 2, 0, 2))),
                      F.mul(a[0][2], m(1, 2, 0, 1)));
    if (det == 0) continue;
    std::vector<Polynomial> g;
    for (auto& row : a) {
      Polynomial s(ring);
      for (int j = 0; j < 3; ++j) s = s + partials[j].scaled(row[j]);
      g.push_back(s);
    }
    if (g[0].is_zero() || g[1].is_zero() || codimension(Ideal(ring, {g[0], g[1]})) != 2) continue;
    VerdictReport v = linkage_regularity(g);
    v.seed = seed;
    v.observe("d", static_cast<I64>(*f.homogeneous_degree()));
    return v;
  }
  throw RetryBudgetExhausted("no regular pair among combinations of the partials");
}

VerdictReport conductor_sequence_check(const CurveSpec& spec, int i, std::uint64_t seed) {
  if (spec.num_components() < 2) throw PreconditionError("the sequence needs at least two components");
  VerdictReport v = start("sequence", seed, spec.ring());
  const int d = spec.degree();
  const int di = spec.components().at(i).degree;
  v.observe("d", static_cast<I64>(d));
  v.observe("component", static_cast<I64>(i));
  ConductorReport cx = conductor_from_components(spec, seed);
  ConductorReport crest = conductor_from_components(spec.without(i), seed);
  ConductorReport ci = conductor_from_components(spec.only(i), seed);
  bool exact = true;
  for (int e = 0; e <= d + 4; ++e) {
    I64 lhs = ideal_dim(cx.conductor, e);
    I64 rhs = ideal_dim(crest.conductor, e - di) + ideal_dim(ci.conductor, e - d + di) - dim_s(e - d);
    if (lhs != rhs) {
      exact = false;
      v.note("degree " + std::to_string(e) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
    }
  }
  v.require("hilbert_exact_0_to_d_plus_4", exact);
  const int bound = std::max(d - 1, ci.regularity + d - di);
  v.observe("reg", static_cast<I64>(cx.regularity));
  v.observe("reg_bound", static_cast<I64>(bound));
  v.require("reg_le_bound", cx.regularity <= bound);
  // F_i C'_rest ∩ G_i C'_i = (F)
  const RingPtr& ring = spec.ring();
  Polynomial fi = spec.components()[i].form, gi = spec.cofactor(i);
  auto scaled = [&](const Ideal& c, const Polynomial& h) {
    std::vector<Polynomial> g;
    for (const auto& p : c.generators()) g.push_back(p * h);
    return Ideal(ring, g);
  };
  Ideal meet = ideal_intersection(scaled(crest.conductor, fi), scaled(ci.conductor, gi));
  v.require("intersection_is_principal_F", meet == Ideal(ring, {spec.total_form()}));
  return v;
}

VerdictReport partial_normalization_report(const CurveSpec& spec, const ConductorReport* conductor) {
  VerdictReport v = start("regB", conductor ? conductor->seed : spec.seed(), spec.ring());
  const int d = spec.degree();
  const int l = spec.num_components();
  v.observe("d", static_cast<I64>(d));
  v.observe("components", static_cast<I64>(l));
  if (l < 2) {
    v.note("one component: B = A, nothing to check");
    return v;
  }
  auto hf_hyper = [](int e, int deg) { return dim_s(e) - dim_s(e - deg); };
  auto hf_ba = [&](int e) {
    I64 s = -hf_hyper(e, d);
    for (const auto& c : spec.components()) s += hf_hyper(e, c.degree);
    return s;
  };
  int indeg = INT_MAX;
  for (int e = 0; e <= d + 4 && indeg == INT_MAX; ++e)
    if (hf_ba(e) != 0) indeg = e;
  v.expect("indeg_B_mod_A", static_cast<I64>(indeg), I64{0});
  v.expect("dim_B_mod_A_0", hf_ba(0), static_cast<I64>(l - 1));

  const RingPtr& ring = spec.ring();
  std::vector<ModuleElement> cols;
  for (int i = 0; i < l; ++i) {
    std::vector<Polynomial> c(l, Polynomial(ring));
    c[i] = spec.components()[i].form;
    cols.emplace_back(std::move(c));
  }
  cols.emplace_back(std::vector<Polynomial>(l, Polynomial::constant(ring, 1)));
  FreeResolution res = resolve(ring, FreeModuleShape::free(l), cols);
  bool hf_match = true;
  for (int e = 0; e <= d + 4; ++e) hf_match = hf_match && res.euler_characteristic(e) == hf_ba(e);
  v.require("resolution_hilbert_matches_arithmetic", hf_match);
  const int reg_ba = regularity(betti_table(res, BettiTag::Module));
  v.observe("reg_B_mod_A", static_cast<I64>(reg_ba));
  v.require("reg_B_mod_A_le_d_minus_2", reg_ba <= d - 2);
  if (conductor) {
    v.expect("beta_1_d_conductor", conductor->degree_d_syzygies, hf_ba(indeg));
    v.expect("reg_conductor", static_cast<I64>(conductor->regularity), static_cast<I64>(d - 1 - indeg));
  }
  return v;
}

VerdictReport symbolic_square_check(const Ideal& points, std::uint64_t seed, int samples) {
  VerdictReport v = start("indeg", seed, points.ring());
  Ideal sq = symbolic_square(points, seed);
  const int reg = regularity(ideal_betti(points));
  const int indeg = sq.initial_degree();
  v.observe("points", hilbert_polynomial_of_points(points.ring(), points.generators()));
  v.observe("reg_I", static_cast<I64>(reg));
  v.observe("indeg_square", static_cast<I64>(indeg));
  Rng rng(seed);
  bool none_reduced = true;
  I64 tested = 0;
  for (int e = indeg; e <= reg; ++e) {
    std::vector<Polynomial> candidates;
    for (const auto& g : sq.generators())
      if (g.degree() == e) candidates.push_back(g);
    for (int k = 0; k < samples; ++k) candidates.push_back(random_element(sq, e, rng));
    for (const auto& f : candidates) {
      if (f.is_zero()) continue;
      ++tested;
      if (is_squarefree(f)) none_reduced = false;
    }
  }
  v.observe("forms_tested_up_to_reg", tested);
  v.require("no_reduced_form_up_to_reg", none_reduced);
  I64 reduced_next = 0;
  for (int k = 0; k < samples; ++k) {
    Polynomial f = random_element(sq, reg + 1, rng);
    if (!f.is_zero() && is_squarefree(f)) ++reduced_next;
  }
  v.observe("reduced_samples_at_reg_plus_1", reduced_next);
  return v;
}

VerdictReport two_route_check(const CurveSpec& spec, std::uint64_t seed) {
  VerdictReport v = start("reduced", seed, spec.ring());
  v.observe("d", static_cast<I64>(spec.degree()));
  v.observe("components", static_cast<I64>(spec.num_components()));
  ConductorReport a = conductor_from_components(spec, seed);
  ConductorReport b = conductor_nodal(spec.total_form(), seed);
  v.observe("delta", a.delta);
  v.observe("reg_component_route", static_cast<I64>(a.regularity));
  v.observe("reg_jacobian_route", static_cast<I64>(b.regularity));
  v.require("routes_agree", a.conductor == b.conductor);
  return v;
}

VerdictReport singular_set_check(const CurveSpec& spec, std::uint64_t seed) {
  VerdictReport v = start("curves", seed, spec.ring());
  const RingPtr& ring = spec.ring();
  v.observe("d", static_cast<I64>(spec.degree()));
  // each local singular set, plus d_i d_j transversal intersections per pair
  I64 expected = 0;
  bool hinted = false;
  for (int i = 0; i < spec.num_components(); ++i) {
    const auto& c = spec.components()[i];
    Ideal local = c.conductor_hint ? *c.conductor_hint : conductor_nodal(c.form, seed).conductor;
    hinted = hinted || c.conductor_hint.has_value();
    if (!local.is_unit()) expected += hilbert_polynomial_of_points(ring, local.generators());
    for (int j = i + 1; j < spec.num_components(); ++j)
      expected += static_cast<I64>(c.degree) * spec.components()[j].degree;
  }
  Ideal sing = singular_set_ideal_nodescusps(spec, seed);
  if (sing.is_unit()) {
    v.expect("points", I64{0}, expected);
    return v;
  }
  v.expect("points", hilbert_polynomial_of_points(ring, sing.generators()), expected);
  v.require("reduced", points_are_reduced(sing, seed).reduced);
  v.require("saturated", is_saturated(sing));
  v.require("contains_F", sing.contains(spec.total_form()));
  v.require("contains_jacobian", sing.contains(jacobian_ideal(spec.total_form())));
  if (!hinted) v.require("equals_conductor", sing == conductor_from_components(spec, seed).conductor);
  return v;
}

}  // namespace condlab
