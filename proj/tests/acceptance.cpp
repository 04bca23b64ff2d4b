// Acceptance run: one line per criterion, PASS or FAIL, with timings.
//
//   acceptance [--skip-slow] [--known-failure ACn ...]
//
// A criterion named with --known-failure still prints FAIL; it only stops
// that failure from turning the exit code nonzero. If it passes instead,
// the run exits nonzero so the list is kept honest.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "condlab/statements.hpp"
#include "oracle.hpp"

using namespace condlab;

namespace {

using I64 = std::int64_t;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  bool skipped = false;
  std::string detail;
  std::vector<std::string> problems;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 8) problems.push_back(what);
    }
  }
  void absorb(const VerdictReport& r, const std::string& where) {
    if (r.pass()) return;
    std::string keys;
    for (const auto& k : r.failures()) keys += (keys.empty() ? "" : ",") + k;
    check(false, where + " " + r.statement_id + " failed on " + keys);
  }
};

I64 get(const VerdictReport& r, const std::string& key) {
  auto it = r.computed.find(key);
  if (it == r.computed.end()) return -1;
  if (auto* v = std::get_if<I64>(&it->second)) return *v;
  return -1;
}

RingPtr plane(std::uint32_t p = 32003) { return Ring::standard(3, p); }

std::vector<CurveSpec> fixture_curves(bool multi_only) {
  std::vector<CurveSpec> out;
  for (const auto& e : std::filesystem::directory_iterator(CONDLAB_FIXTURE_DIR)) {
    if (e.path().extension() != ".curve") continue;
    Fixture f = load_fixture(e.path().string());
    if (!f.components_known) continue;
    if (multi_only && f.spec.num_components() < 2) continue;
    out.push_back(f.spec);
  }
  return out;
}

// --- criteria ---

Outcome ac1(std::uint32_t p) {
  Outcome o;
  StatementOptions opt;
  opt.prime = p;
  auto reports = run_statement("example1", opt);
  o.check(reports.size() == 4, "expected four line counts");
  for (const auto& r : reports) o.absorb(r, "lines=" + std::to_string(get(r, "lines")));
  o.detail = "l = 2..5, singular ideal = (G_i), reg = d-1, beta_1d = l-1";
  return o;
}

Outcome ac2() {
  Outcome o;
  auto reports = run_statement("sect3-example", {});
  const auto& r = reports.at(0);
  o.absorb(r, "m=2");
  o.check(get(r, "delta") == 19, "delta");
  o.check(get(r, "generators_of_degree_4m_minus_3") == 3, "three quintics");
  o.check(get(r, "beta_1_7") == 1 && get(r, "beta_1_8") == 1, "syzygy degrees 7, 8");
  o.check(get(r, "reg_I") == 7, "reg I");
  o.check(get(r, "indeg_square") == 10, "indeg of the symbolic square");
  o.check(get(r, "minimal_nodal_degree") == 10, "nodal curve of degree 10");
  o.check(get(r, "beta_1_D_conductor") == 0, "beta_1,10 of the conductor");
  std::ostringstream d;
  d << "delta=" << get(r, "delta") << " reg=" << get(r, "reg_I") << " indeg I^(2)=" << get(r, "indeg_square")
    << " nodal D=" << get(r, "minimal_nodal_degree") << " after " << get(r, "curve_attempts") << " tries";
  o.detail = d.str();
  return o;
}

Outcome ac3(bool skip) {
  Outcome o;
  if (skip) {
    o.skipped = true;
    o.detail = "skipped: slow tier disabled (CONDLAB_SLOW_TESTS=OFF)";
    return o;
  }
  StatementOptions opt;
  opt.m = 3;
  auto reports = run_statement("example3", opt);
  const auto& r = reports.at(0);
  o.check(get(r, "delta") == 57, "delta");
  o.check(get(r, "reg_I") == 13, "reg I");
  o.check(get(r, "generators") == 4 && get(r, "generators_of_degree_4m_minus_3") == 4, "4 generators of degree 9");
  o.check(r.computed.count("reduced") && std::get<bool>(r.computed.at("reduced")), "reduced");
  std::ostringstream d;
  d << "delta=" << get(r, "delta") << " reg=" << get(r, "reg_I") << " gens=" << get(r, "generators")
    << " (nodal D found=" << get(r, "minimal_nodal_degree") << ")";
  o.detail = d.str();
  return o;
}

Outcome ac4(std::uint32_t p, double* slowest) {
  Outcome o;
  std::ostringstream d;
  for (int deg : {4, 5}) {
    StatementOptions opt;
    opt.prime = p;
    opt.degree = deg;
    auto t0 = Clock::now();
    auto r = run_statement("example2", opt).at(0);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (slowest) *slowest = std::max(*slowest, secs);
    o.absorb(r, "d=" + std::to_string(deg));
    o.check(secs < 60, "d=" + std::to_string(deg) + " over 60 s");
    d << "d=" << deg << ": delta=" << get(r, "delta") << " reg=" << get(r, "reg") << "  ";
  }
  o.detail = d.str();
  return o;
}

std::vector<CurveSpec> ac5_corpus(const RingPtr& r) { return reducible_corpus(r, 12, 2024, 7); }

Outcome ac5(std::uint32_t p) {
  Outcome o;
  RingPtr r = plane(p);
  auto corpus = ac5_corpus(r);
  int k = 0;
  for (const auto& s : corpus) {
    const std::string where = "curve " + std::to_string(k++) + " (d=" + std::to_string(s.degree()) + ")";
    ConductorReport a = conductor_from_components(s, 1);
    ConductorReport b = conductor_nodal(s.total_form(), 1);
    o.check(a.conductor.groebner_basis() == b.conductor.groebner_basis(), where + ": routes differ");
    o.check(a.regularity == s.degree() - 1, where + ": reg != d-1");
    o.check(a.degree_d_syzygies == s.num_components() - 1, where + ": beta_1d != l-1");
    VerdictReport ba = partial_normalization_report(s, &a);
    o.absorb(ba, where);
    o.check(get(ba, "indeg_B_mod_A") >= 0 && a.regularity == s.degree() - 1 - get(ba, "indeg_B_mod_A"),
            where + ": reg != d-1-indeg(B/A)");
  }
  o.detail = std::to_string(corpus.size()) + " reducible nodal curves, d <= 7";
  return o;
}

Outcome ac6() {
  Outcome o;
  RingPtr r = plane();
  auto reducible = reducible_corpus(r, 6, 77, 7);
  auto irreducible = irreducible_corpus(r, 5);
  int disagreements = 0;
  auto linkage = [&](const CurveSpec& s, const std::string& where) {
    VerdictReport v = jacobian_linkage_regularity(s.total_form(), 1);
    if (!v.pass()) {
      ++disagreements;
      std::ostringstream m;
      m << where << ": linkage formulas disagree (direct " << get(v, "reg_direct") << ", colon "
        << get(v, "reg_colon") << ", syzygy entries " << get(v, "reg_syzygy_entries") << ")";
      o.check(false, m.str());
    }
  };
  int k = 0;
  for (const auto& s : reducible) {
    const std::string where = "reducible " + std::to_string(k++) + " d=" + std::to_string(s.degree());
    VerdictReport v = jacobian_syzygy_analysis(s, 1);
    o.check(get(v, "mu") == s.degree() - 2, where + ": mu != d-2");
    linkage(s, where);
  }
  k = 0;
  for (const auto& s : irreducible) {
    const std::string where = "irreducible " + std::to_string(k++) + " d=" + std::to_string(s.degree());
    VerdictReport v = jacobian_syzygy_analysis(s, 1);
    o.check(get(v, "mu") >= s.degree() - 1, where + ": mu < d-1");
    linkage(s, where);
  }
  o.detail = std::to_string(reducible.size()) + " reducible + " + std::to_string(irreducible.size()) +
             " irreducible curves; linkage disagreements: " + std::to_string(disagreements);
  return o;
}

Outcome ac7() {
  Outcome o;
  RingPtr r = plane();
  std::vector<CurveSpec> curves = irreducible_corpus(r, 11);
  for (const auto& e : std::filesystem::directory_iterator(CONDLAB_FIXTURE_DIR)) {
    if (e.path().extension() != ".curve") continue;
    Fixture f = load_fixture(e.path().string());
    if (f.spec.num_components() == 1 && f.spec.degree() >= 3) curves.push_back(f.spec);
  }
  int k = 0, used = 0;
  for (const auto& s : curves) {
    ConductorReport rep = conductor_nodal(s.total_form(), 1);
    if (rep.degree_d_syzygies != 0) continue;  // not certified irreducible
    ++used;
    VerdictReport v = adjoint_completeness_check(rep, s);
    o.absorb(v, "curve " + std::to_string(k));
    o.check(get(v, "hf_quotient_d_minus_3") == rep.delta, "curve " + std::to_string(k) + ": HF(S/C', d-3) != delta");
    ++k;
  }
  o.check(used >= 6, "too few irreducible curves");
  o.detail = std::to_string(used) + " irreducible nodal curves";
  return o;
}

Outcome ac8() {
  Outcome o;
  RingPtr r = plane();
  auto curves = reducible_corpus(r, 10, 31, 7);
  for (auto& s : fixture_curves(true)) curves.push_back(s);
  int checks = 0;
  for (std::size_t k = 0; k < curves.size(); ++k)
    for (int i = 0; i < curves[k].num_components(); ++i, ++checks)
      o.absorb(conductor_sequence_check(curves[k], i, 1), "curve " + std::to_string(k) + " split " + std::to_string(i));
  o.detail = std::to_string(curves.size()) + " multi-component curves, " + std::to_string(checks) + " splittings";
  return o;
}

Outcome ac9() {
  Outcome o;
  RingPtr r = plane();
  auto curves = reducible_corpus(r, 10, 41, 7);
  for (auto& s : fixture_curves(true)) curves.push_back(s);
  for (std::size_t k = 0; k < curves.size(); ++k) {
    ConductorReport rep = conductor_from_components(curves[k], 1);
    VerdictReport v = partial_normalization_report(curves[k], &rep);
    o.absorb(v, "curve " + std::to_string(k));
    o.check(get(v, "dim_B_mod_A_0") == curves[k].num_components() - 1, "dim (B/A)_0");
    o.check(rep.degree_d_syzygies == get(v, "dim_B_mod_A_0"), "beta_1d != dim (B/A)_0");
  }
  o.detail = std::to_string(curves.size()) + " multi-component curves";
  return o;
}

// (a) membership and dimensions against dense spans, (b) resolution sanity
Outcome ac10ab() {
  Outcome o;
  int resolutions = 0;
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 2;
    RingPtr r = Ring::standard(n);
    Rng rng(1000 + t);
    std::vector<Polynomial> gens;
    const int count = 2 + t % 3;
    for (int k = 0; k < count; ++k) gens.push_back(rng.form(r, 1 + (k + t) % 3));
    Ideal I(r, gens);
    const std::string where = "ideal " + std::to_string(t);
    for (int e = 0; e <= 6; ++e) {
      o.check(I.dimension(e) == static_cast<I64>(oracle::binom(e + n - 1, n - 1)) - oracle::hilbert_function(gens, e),
              where + ": dim I_" + std::to_string(e));
      Polynomial inside = random_element(I, e, rng);
      o.check(I.contains(inside), where + ": random element of I_" + std::to_string(e) + " rejected");
      Polynomial probe = rng.form(r, e);
      o.check(I.contains(probe) == oracle::in_ideal(gens, probe), where + ": membership in degree " + std::to_string(e));
      Polynomial shifted = inside + Polynomial::monomial(r, Monomial::variable(0, e), 1);
      if (e > 0)
        o.check(I.contains(shifted) == oracle::in_ideal(gens, shifted), where + ": near miss in degree " + std::to_string(e));
    }
    FreeResolution res = minimal_free_resolution(r, gens);
    ++resolutions;
    o.check(res.composites_vanish(), where + ": d^2 != 0");
    o.check(res.constant_entries() == 0, where + ": resolution not minimal");
    for (int e = 0; e <= 8; ++e)
      o.check(res.euler_characteristic(e) == oracle::hilbert_function(gens, e),
              where + ": alternating sum in degree " + std::to_string(e));
  }
  // resolutions of conductors and determinantal points
  RingPtr r = plane();
  std::vector<std::vector<Polynomial>> more;
  for (const auto& s : reducible_corpus(r, 6, 5, 7)) more.push_back(conductor_from_components(s).conductor.generators());
  more.push_back(determinantal_points(r, 2, 1).ideal.generators());
  for (const auto& g : more) {
    FreeResolution res = minimal_free_resolution(r, g);
    ++resolutions;
    o.check(res.composites_vanish(), "conductor resolution: d^2 != 0");
    for (int e = 0; e <= 10; ++e)
      o.check(res.euler_characteristic(e) == oracle::hilbert_function(g, e), "conductor alternating sum");
  }
  o.detail = "20 random ideals (degrees <= 6), " + std::to_string(resolutions) + " resolutions";
  return o;
}

// (c) saturation idempotence and colon round trips
Outcome ac10c() {
  Outcome o;
  for (int t = 0; t < 50; ++t) {
    RingPtr r = plane();
    Rng rng(5000 + t);
    const std::string where = "instance " + std::to_string(t);
    // points, thickened by products with random forms so saturation has work to do
    std::vector<std::vector<Coeff>> pts;
    for (int k = 0; k < 2 + t % 4; ++k)
      pts.push_back({rng.nonzero_scalar(r->field()), rng.scalar(r->field()), rng.scalar(r->field())});
    Ideal P = ideal_of_points(r, pts);
    Ideal I = ideal_product(P, Ideal(r, {rng.form(r, 1), rng.form(r, 1), rng.form(r, 1 + t % 2)}));
    Ideal s1 = saturate(I);
    Ideal s2 = saturate(s1);
    o.check(s1 == s2, where + ": saturation not idempotent");
    o.check(s1.contains(I), where + ": I not inside its saturation");
    o.check(s1 == P, where + ": saturation misses the point ideal");
    Ideal J(r, {rng.form(r, 1 + t % 2), rng.form(r, 2)});
    Ideal colon = ideal_quotient(I, J);
    o.check(I.contains(ideal_product(colon, J)), where + ": (I:J)J not in I");
    o.check(colon.contains(I), where + ": I not in I:J");
    o.check(ideal_quotient(ideal_product(I, J), J).contains(I), where + ": I not in IJ:J");
  }
  o.detail = "50 seeded instances";
  return o;
}

// (d) the same invariants at a second prime
Outcome ac10d() {
  Outcome o;
  for (const char* id : {"example1", "example2"}) {
    StatementOptions a, b;
    b.prime = 32009;
    auto ra = run_statement(id, a), rb = run_statement(id, b);
    o.check(ra.size() == rb.size(), std::string(id) + ": report counts differ");
    for (std::size_t k = 0; k < std::min(ra.size(), rb.size()); ++k) {
      o.check(rb[k].prime == 32009 && rb[k].pass(), std::string(id) + " fails at 32009");
      for (const auto& [key, want] : ra[k].expected)
        o.check(rb[k].computed.count(key) && rb[k].computed.at(key) == ra[k].computed.at(key),
                std::string(id) + ": " + key + " differs between primes");
    }
  }
  Outcome second = ac5(32009);
  o.check(second.pass, "two-route corpus fails at 32009");
  for (auto& p : second.problems) o.check(false, "32009 " + p);
  // the same integer curves read modulo both primes
  for (auto& s : fixture_curves(false)) {
    ConductorReport a = conductor_from_components(s), b = conductor_from_components(s.with_prime(32009));
    o.check(a.delta == b.delta && a.regularity == b.regularity && a.betti == b.betti,
            "fixture invariants differ between primes");
  }
  o.detail = "criteria 1, 4, 5 and the fixture corpus at p = 32009";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_slow = false;
  std::set<std::string> known;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if (a == "--skip-slow") {
      skip_slow = true;
    } else if (a == "--known-failure" && k + 1 < argc) {
      known.insert(argv[++k]);
    } else {
      std::cerr << "usage: acceptance [--skip-slow] [--known-failure ACn]...\n";
      return 2;
    }
  }

  double slowest_ac4 = 0;
  struct Criterion {
    std::string id;
    std::string title;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"AC1", "line arrangements", 5, [] { return ac1(32003); }},
      {"AC2", "19 determinantal points, degree-10 nodal curve", 120, ac2},
      {"AC3", "determinantal points at m=3", 1200, [&] { return ac3(skip_slow); }},
      {"AC4", "rational nodal quartic and quintic", 120, [&] { return ac4(32003, &slowest_ac4); }},
      {"AC5", "two-route conductor law on reducible curves", 300, [] { return ac5(32003); }},
      {"AC6", "Jacobian syzygy degrees and linkage regularity", 600, ac6},
      {"AC7", "adjoint completeness", 600, ac7},
      {"AC8", "conductor sequence", 600, ac8},
      {"AC9", "partial normalization", 600, ac9},
      {"AC10a/b", "membership vs dense spans; resolution sanity", 600, ac10ab},
      {"AC10c", "saturation idempotence and colon round trips", 600, ac10c},
      {"AC10d", "second prime 32009", 600, ac10d},
  };

  int unexpected = 0, failed = 0;
  double total = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    total += secs;
    if (secs > c.limit_s) o.check(false, "over the time limit of " + std::to_string(c.limit_s) + " s");
    const char* tag = o.skipped ? "SKIP" : (o.pass ? "PASS" : "FAIL");
    std::printf("[%s] %-8s %-50s %8.3f s  %s\n", tag, c.id.c_str(), c.title.c_str(), secs, o.detail.c_str());
    for (const auto& p : o.problems) std::printf("         - %s\n", p.c_str());
    const bool is_known = known.count(c.id) > 0;
    if (!o.pass && !o.skipped) {
      ++failed;
      if (is_known)
        std::printf("         (listed as a known failure)\n");
      else
        ++unexpected;
    } else if (is_known && !o.skipped) {
      std::printf("         (listed as a known failure but passed; update the list)\n");
      ++unexpected;
    }
  }
  std::printf("acceptance: %zu criteria, %d failing, %.2f s total\n", criteria.size(), failed, total);
  return unexpected == 0 ? 0 : 1;
}
