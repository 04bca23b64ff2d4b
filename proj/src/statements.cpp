#include "condlab/statements.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace condlab {

namespace {

using I64 = std::int64_t;

I64 choose2(I64 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

VerdictReport start(const std::string& id, std::uint64_t seed, const RingPtr& ring) {
  VerdictReport v;
  v.statement_id = id;
  v.seed = seed;
  v.prime = ring->characteristic();
  return v;
}

RingPtr plane(const StatementOptions& o, int wanted_cap = 0) {
  EngineConfig cfg;
  if (o.degree_cap)
    cfg.degree_cap = *o.degree_cap;
  else
    cfg.degree_cap = std::max(cfg.degree_cap, wanted_cap);
  return Ring::standard(3, o.prime, cfg);
}

void observe_betti(VerdictReport& v, const BettiTable& t) { v.observe("betti", t.grid()); }

// Small fixed family used by several statements: one reducible curve per
// component pattern, all nodal.
std::vector<CurveSpec> reducible_family(const RingPtr& r, std::uint64_t seed) {
  return reducible_corpus(r, 5, seed * 7919 + 3, 7);
}

// --- statements with built-in instances ---

std::vector<VerdictReport> example1(const StatementOptions& o) {
  std::vector<int> counts = o.lines ? std::vector<int>{*o.lines} : std::vector<int>{2, 3, 4, 5};
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  for (int l : counts) {
    if (l < 2) throw PreconditionError("example1 needs at least two lines");
    Rng rng(o.seed + static_cast<std::uint64_t>(l));
    std::vector<Polynomial> lines;
    for (int k = 0; k < l; ++k) lines.push_back(rng.form(r, 1));
    CurveSpec spec = CurveSpec::from_forms(lines, CurveOrigin::Explicit, o.seed);
    VerdictReport v = start("example1", o.seed, r);
    v.observe("lines", static_cast<I64>(l));
    std::vector<Polynomial> products;
    for (int i = 0; i < l; ++i) products.push_back(spec.cofactor(i));
    ConductorReport rep = conductor_from_components(spec, o.seed);
    const int d = l;
    v.require("singular_ideal_is_products", singular_set_ideal_nodescusps(spec, o.seed) == Ideal(r, products));
    v.expect("delta", rep.delta, choose2(l));
    v.expect("generators_degree_d_minus_1", rep.betti.beta(0, d - 1), static_cast<I64>(l));
    v.expect("total_generators", rep.betti.total(0), static_cast<I64>(l));
    v.expect("syzygies_degree_d", rep.betti.beta(1, d), static_cast<I64>(l - 1));
    v.expect("total_syzygies", rep.betti.total(1), static_cast<I64>(l - 1));
    v.expect("resolution_length", static_cast<I64>(rep.betti.max_index()), I64{1});
    v.expect("reg", static_cast<I64>(rep.regularity), static_cast<I64>(d - 1));
    v.expect("beta_1_d", rep.degree_d_syzygies, static_cast<I64>(l - 1));
    observe_betti(v, rep.betti);
    out.push_back(std::move(v));
  }
  return out;
}

VerdictReport determinantal_statement(const std::string& id, int m, const StatementOptions& o) {
  const I64 delta = 20 * choose2(m - 1) + 18 * m - 17;
  // eliminating a variable from delta points needs a degree-delta eliminant
  RingPtr r = plane(o, static_cast<int>(delta) + 8);
  VerdictReport v = start(id, o.seed, r);
  v.observe("m", static_cast<I64>(m));
  if (!o.degree_cap && r->config().degree_cap > EngineConfig{}.degree_cap)
    v.note("degree cap raised to " + std::to_string(r->config().degree_cap) + " for a degree-" +
           std::to_string(delta) + " eliminant");
  DeterminantalPoints pts = determinantal_points(r, m, o.seed);
  v.observe("attempts", static_cast<I64>(pts.attempts));
  v.expect("delta", pts.delta, delta);
  v.expect("reg_I", static_cast<I64>(pts.regularity), static_cast<I64>(6 * m - 5));
  v.expect("generators", pts.betti.total(0), static_cast<I64>(m + 1));
  v.expect("generators_of_degree_4m_minus_3", pts.betti.beta(0, 4 * m - 3), static_cast<I64>(m + 1));
  if (m == 2) {
    v.expect("beta_1_7", pts.betti.beta(1, 7), I64{1});
    v.expect("beta_1_8", pts.betti.beta(1, 8), I64{1});
  }
  v.require("reduced", points_are_reduced(pts.ideal, o.seed).reduced);
  observe_betti(v, pts.betti);

  Ideal sq = symbolic_square(pts.ideal, o.seed);
  const int indeg = sq.initial_degree();
  v.observe("indeg_square", static_cast<I64>(indeg));
  if (m == 2) v.expect("indeg_square", static_cast<I64>(indeg), I64{10});

  const int bezout = static_cast<int>((m + 2 * delta + (4 * m - 3) - 1) / (4 * m - 3));
  v.observe("bezout_floor", static_cast<I64>(bezout));
  v.expect("bezout_floor_is_5m_minus_2", static_cast<I64>(bezout), static_cast<I64>(5 * m - 2));
  v.observe("reg_plus_2", static_cast<I64>(6 * m - 3));
  v.observe("eight_m_minus_6", static_cast<I64>(8 * m - 6));

  std::optional<NodalCurve> curve;
  int found = -1;
  for (int D = indeg; D <= indeg + 2 && !curve; ++D) {
    curve = nodal_curve_through(pts.ideal, D, o.seed, 10, &sq);
    if (curve) found = D;
  }
  v.require("nodal_curve_found", curve.has_value());
  if (!curve) return v;
  v.observe("minimal_nodal_degree", static_cast<I64>(found));
  v.require("nodal_degree_ge_bezout_floor", found >= bezout);
  v.require("nodal_degree_ge_reg_plus_2", found >= 6 * m - 3);
  v.require("conductor_is_point_ideal", curve->report.conductor == pts.ideal);
  v.expect("beta_1_D_conductor", curve->report.degree_d_syzygies, I64{0});
  v.expect("reg_conductor", static_cast<I64>(curve->report.regularity), static_cast<I64>(6 * m - 5));
  v.observe("h0_jump_degree", static_cast<I64>(curve->report.h0_jump_degree));
  if (m == 2 && found == 10) v.expect("h0_jump_degree", static_cast<I64>(curve->report.h0_jump_degree), I64{2});
  v.observe("curve_attempts", static_cast<I64>(curve->attempts));
  return v;
}

std::vector<VerdictReport> sect3_example(const StatementOptions& o) {
  return {determinantal_statement("sect3-example", 2, o)};
}

std::vector<VerdictReport> example3(const StatementOptions& o) {
  int m = o.m.value_or(2);
  if (m < 2) throw PreconditionError("example3 needs m >= 2");
  return {determinantal_statement("example3", m, o)};
}

std::vector<VerdictReport> example2(const StatementOptions& o) {
  std::vector<int> degrees = o.degree ? std::vector<int>{*o.degree} : std::vector<int>{4, 5};
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  for (int d : degrees) {
    if (d < 4) throw PreconditionError("example2 needs d >= 4");
    VerdictReport v = start("example2", o.seed, r);
    v.observe("d", static_cast<I64>(d));
    ConductorReport rep;
    CurveSpec spec = rational_curve_implicitize(r, d, o.seed + static_cast<std::uint64_t>(d), 5, &rep);
    v.observe("degree_of_image", static_cast<I64>(spec.degree()));
    v.expect("delta", rep.delta, choose2(d - 1));
    v.expect("generators_degree_d_minus_2", rep.betti.beta(0, d - 2), static_cast<I64>(d - 1));
    v.expect("total_generators", rep.betti.total(0), static_cast<I64>(d - 1));
    v.expect("syzygies_degree_d_minus_1", rep.betti.beta(1, d - 1), static_cast<I64>(d - 2));
    v.expect("total_syzygies", rep.betti.total(1), static_cast<I64>(d - 2));
    v.expect("reg", static_cast<I64>(rep.regularity), static_cast<I64>(d - 2));
    observe_betti(v, rep.betti);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<VerdictReport> plane_curves(const StatementOptions& o) {
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  Rng rng(o.seed);
  std::vector<CurveSpec> specs = {CurveSpec::from_forms({rng.form(r, 1), rng.form(r, 1)}),
                                  CurveSpec::from_forms({random_nodal_cubic(r, rng), rng.form(r, 1)})};
  for (auto& s : reducible_family(r, o.seed)) specs.push_back(s);
  specs.push_back(rational_curve_implicitize(r, 4, o.seed));
  for (const auto& s : specs) {
    ConductorReport rep = conductor_from_components(s, o.seed);
    VerdictReport v = verify_regularity_theorem(rep, s);
    if (s.num_components() >= 2) {
      VerdictReport dual = partial_normalization_report(s, &rep);
      for (const auto& [k, val] : dual.computed)
        if (dual.expected.count(k)) v.expect("regB_" + k, val, dual.expected.at(k));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<VerdictReport> plane_curves_2(const StatementOptions& o) {
  RingPtr r = plane(o);
  Rng rng(o.seed + 11);
  std::vector<VerdictReport> out;
  std::vector<CurveSpec> specs = {CurveSpec::from_forms({random_nodal_cubic(r, rng), rng.form(r, 2)}),
                                  CurveSpec::from_forms({random_nodal_cubic(r, rng), rng.form(r, 1), rng.form(r, 1)})};
  for (const auto& s : specs) {
    ConductorReport rep = conductor_from_components(s, o.seed);
    Ideal meet = intersection_points_ideal(s);
    Ideal node = conductor_nodal(s.components()[0].form, o.seed).conductor;
    VerdictReport v = verify_regularity_theorem(rep, s, {rep.conductor, meet, ideal_intersection(meet, node)});
    v.statement_id = "plane-curves-2";
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<VerdictReport> improved_kloosterman(const StatementOptions& o) {
  RingPtr r = plane(o);
  Rng rng(o.seed + 13);
  std::vector<VerdictReport> out;
  CurveSpec s = CurveSpec::from_forms({random_nodal_cubic(r, rng), rng.form(r, 2)});
  ConductorReport rep = conductor_from_components(s, o.seed);
  Ideal meet = intersection_points_ideal(s);
  Ideal node = conductor_nodal(s.components()[0].form, o.seed).conductor;
  out.push_back(kloosterman_check(s, node, false));
  out.push_back(kloosterman_check(s, meet, true));
  out.push_back(kloosterman_check(s, rep.conductor, true));
  ConductorReport quartic;
  CurveSpec q = rational_curve_implicitize(r, 4, o.seed, 5, &quartic);
  out.push_back(kloosterman_check(q, quartic.conductor, true));
  for (auto& v : out) v.seed = o.seed;
  return out;
}

std::vector<VerdictReport> indeg(const StatementOptions& o) {
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  Rng rng(o.seed + 17);
  for (int n : {4, 6, 10}) {
    std::vector<std::vector<Coeff>> pts;
    for (int k = 0; k < n; ++k)
      pts.push_back({rng.nonzero_scalar(r->field()), rng.scalar(r->field()), rng.scalar(r->field())});
    out.push_back(symbolic_square_check(ideal_of_points(r, pts), o.seed));
  }
  out.push_back(symbolic_square_check(determinantal_points(r, 2, o.seed).ideal, o.seed));
  return out;
}

std::vector<VerdictReport> cohen_macaulay(const StatementOptions& o) {
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  for (const auto& s : reducible_family(r, o.seed)) {
    Ideal c = conductor_from_components(s, o.seed).conductor;
    VerdictReport v = cm_regularity_crosscheck(r, c.generators());
    v.seed = o.seed;
    out.push_back(std::move(v));
  }
  VerdictReport v = cm_regularity_crosscheck(r, determinantal_points(r, 2, o.seed).ideal.generators());
  v.seed = o.seed;
  out.push_back(std::move(v));
  return out;
}

std::vector<VerdictReport> adjoint(const StatementOptions& o) {
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  for (const auto& s : irreducible_corpus(r, o.seed)) {
    ConductorReport rep = conductor_nodal(s.total_form(), o.seed);
    out.push_back(adjoint_completeness_check(rep, s));
  }
  return out;
}

std::vector<VerdictReport> derivatives(const StatementOptions& o) {
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  for (const auto& s : reducible_family(r, o.seed)) out.push_back(jacobian_syzygy_analysis(s, o.seed));
  for (const auto& s : irreducible_corpus(r, o.seed)) out.push_back(jacobian_syzygy_analysis(s, o.seed));
  return out;
}

std::vector<VerdictReport> reg_from_fitting(const StatementOptions& o) {
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  auto x = [&](int i) { return Polynomial::variable(r, i); };
  VerdictReport mono = linkage_regularity({x(0).pow(2), x(1).pow(2), x(0) * x(1)});
  mono.seed = o.seed;
  out.push_back(std::move(mono));
  for (const auto& s : reducible_family(r, o.seed))
    out.push_back(jacobian_linkage_regularity(s.total_form(), o.seed));
  for (const auto& s : irreducible_corpus(r, o.seed))
    out.push_back(jacobian_linkage_regularity(s.total_form(), o.seed));
  return out;
}

std::vector<VerdictReport> reduced(const StatementOptions& o) {
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  for (const auto& s : reducible_corpus(r, 10, o.seed * 7919 + 5, 7)) out.push_back(two_route_check(s, o.seed));
  return out;
}

std::vector<VerdictReport> sequence(const StatementOptions& o) {
  RingPtr r = plane(o);
  std::vector<VerdictReport> out;
  for (const auto& s : reducible_family(r, o.seed))
    for (int i = 0; i < s.num_components(); ++i) out.push_back(conductor_sequence_check(s, i, o.seed));
  return out;
}

std::vector<VerdictReport> curves(const StatementOptions& o) {
  RingPtr r = plane(o);
  Rng rng(o.seed + 19);
  std::vector<VerdictReport> out;
  auto x = [&](int i) { return Polynomial::variable(r, i); };
  Polynomial cusp = x(1).pow(2) * x(2) - x(0).pow(3);
  Ideal cusp_point(r, {x(0), x(1)});
  for (Polynomial other : {rng.form(r, 1), rng.form(r, 2), random_nodal_cubic(r, rng)}) {
    CurveSpec s({{cusp, 0, cusp_point}, {other, 0, std::nullopt}}, CurveOrigin::Explicit, o.seed);
    out.push_back(singular_set_check(s, o.seed));
  }
  for (const auto& s : reducible_family(r, o.seed)) out.push_back(singular_set_check(s, o.seed));
  return out;
}

std::vector<VerdictReport> reg_b(const StatementOptions& o) {
  RingPtr r = plane(o);
  Rng rng(o.seed + 23);
  std::vector<VerdictReport> out;
  std::vector<CurveSpec> specs = {CurveSpec::from_forms({rng.form(r, 1), rng.form(r, 1)}),
                                  CurveSpec::from_forms({rng.form(r, 1), rng.form(r, 1), rng.form(r, 1)})};
  for (auto& s : reducible_family(r, o.seed)) specs.push_back(s);
  for (const auto& s : specs) {
    ConductorReport rep = conductor_from_components(s, o.seed);
    out.push_back(partial_normalization_report(s, &rep));
  }
  return out;
}

using Runner = std::function<std::vector<VerdictReport>(const StatementOptions&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"example1", example1},
      {"sect3-example", sect3_example},
      {"example2", example2},
      {"example3", example3},
      {"plane-curves", plane_curves},
      {"plane-curves-2", plane_curves_2},
      {"improved-kloosterman", improved_kloosterman},
      {"indeg", indeg},
      {"cohen-macaulay", cohen_macaulay},
      {"adjoint", adjoint},
      {"derivatives", derivatives},
      {"reg-from-fitting", reg_from_fitting},
      {"reduced", reduced},
      {"sequence", sequence},
      {"curves", curves},
      {"regB", reg_b},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, run] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_statement_id(const std::string& id) {
  const auto& ids = statement_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<VerdictReport> run_statement(const std::string& id, const StatementOptions& options) {
  for (const auto& [name, run] : registry())
    if (name == id) return run(options);
  throw PreconditionError("unknown statement '" + id + "'");
}

std::vector<VerdictReport> run_all_statements(const StatementOptions& options) {
  std::vector<VerdictReport> out;
  for (const auto& [name, run] : registry()) {
    auto part = run(options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<VerdictReport> verify_fixture(const Fixture& fixture, std::uint64_t seed) {
  const CurveSpec& s = fixture.spec;
  std::vector<VerdictReport> out;
  auto tag = [&](VerdictReport v) {
    if (!fixture.name.empty()) v.note("fixture " + fixture.name);
    out.push_back(std::move(v));
  };
  bool hinted = false;
  for (const auto& c : s.components()) hinted = hinted || c.conductor_hint.has_value();

  if (!fixture.components_known) {
    ConductorReport rep = conductor_nodal(s.total_form(), seed);
    VerdictReport v = start("plane-curves", seed, s.ring());
    v.observe("d", static_cast<I64>(s.degree()));
    v.observe("delta", rep.delta);
    v.note("component list unknown; only the regularity bound is asserted");
    if (!rep.smooth()) {
      v.observe("regularity", static_cast<I64>(rep.regularity));
      v.observe("beta_1_d", rep.degree_d_syzygies);
      v.observe("irreducible_by_syzygy_count", rep.degree_d_syzygies == 0);
      v.require("reg_le_d_minus_1", rep.regularity <= s.degree() - 1);
      v.expect("reg_lt_d_minus_1_iff_no_degree_d_syzygy", rep.regularity < s.degree() - 1,
               rep.degree_d_syzygies == 0);
    }
    tag(std::move(v));
    if (!rep.smooth()) {
      VerdictReport cm = cm_regularity_crosscheck(s.ring(), rep.conductor.generators());
      cm.seed = seed;
      tag(std::move(cm));
    }
    if (!rep.smooth()) tag(jacobian_linkage_regularity(s.total_form(), seed));
    if (rep.degree_d_syzygies == 0 && s.degree() >= 3) tag(adjoint_completeness_check(rep, s));
    return out;
  }

  ConductorReport rep = conductor_from_components(s, seed);
  tag(verify_regularity_theorem(rep, s));
  if (!rep.smooth()) {
    VerdictReport cm = cm_regularity_crosscheck(s.ring(), rep.conductor.generators());
    cm.seed = seed;
    tag(std::move(cm));
  }
  if (hinted) {
    tag(singular_set_check(s, seed));
  } else {
    if (s.num_components() >= 2) tag(two_route_check(s, seed));
    tag(jacobian_syzygy_analysis(s, seed));
    if (!rep.smooth()) tag(jacobian_linkage_regularity(s.total_form(), seed));
    if (s.num_components() == 1 && s.degree() >= 3) tag(adjoint_completeness_check(rep, s));
  }
  if (s.num_components() >= 2) {
    for (int i = 0; i < s.num_components(); ++i) tag(conductor_sequence_check(s, i, seed));
    tag(partial_normalization_report(s, &rep));
  }
  return out;
}

}  // namespace condlab
