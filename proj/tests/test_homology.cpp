#include <random>

#include "condlab/homology.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace condlab;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Polynomial random_form(const RingPtr& r, int degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (Monomial m : monomials_of_degree(*r, degree))
    terms.push_back({m, static_cast<Coeff>(rng() % r->characteristic())});
  return Polynomial::from_terms(r, terms);
}

Polynomial sparse_form(const RingPtr& r, int degree, int terms, std::mt19937_64& rng) {
  auto mons = monomials_of_degree(*r, degree);
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) t.push_back({mons[rng() % mons.size()], static_cast<Coeff>(1 + rng() % 32002)});
  return Polynomial::from_terms(r, t);
}

// Maximal minors of a 3x2 matrix whose first column has cubics and second quadrics.
std::vector<Polynomial> nineteen_points(const RingPtr& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Polynomial a[3][2];
  for (int i = 0; i < 3; ++i) {
    a[i][0] = random_form(r, 3, rng);
    a[i][1] = random_form(r, 2, rng);
  }
  return {a[1][0] * a[2][1] - a[2][0] * a[1][1], a[0][0] * a[2][1] - a[2][0] * a[0][1],
          a[0][0] * a[1][1] - a[1][0] * a[0][1]};
}

void check_exact(const FreeResolution& res, const std::vector<Polynomial>& gens, int window) {
  CHECK(res.composites_vanish());
  CHECK(res.constant_entries() == 0);
  for (int e = 0; e <= window; ++e) CHECK(res.euler_characteristic(e) == oracle::hilbert_function(gens, e));
}

}  // namespace

TEST_CASE("principal ideal") {
  auto r = Ring::standard(3);
  std::mt19937_64 rng(1);
  for (int d = 1; d <= 5; ++d) {
    auto f = random_form(r, d, rng);
    auto res = minimal_free_resolution(r, {f});
    CHECK(res.length() == 1);
    auto t = betti_table(res, BettiTag::Quotient);
    CHECK(t.beta(0, 0) == 1);
    CHECK(t.beta(1, d) == 1);
    CHECK(t.entries().size() == 2);
    auto ti = t.ideal_table();
    CHECK(ti.beta(0, d) == 1);
    CHECK(ti.entries().size() == 1);
    CHECK(regularity(ti) == d);
    CHECK(regularity(t) == d - 1);
  }
}

TEST_CASE("coordinate triangle") {
  auto r = Ring::standard(3);
  std::vector<Polynomial> g{P("x1*x2", r), P("x0*x2", r), P("x0*x1", r)};
  auto res = minimal_free_resolution(r, g);
  check_exact(res, g, 6);
  auto t = betti_table(res, BettiTag::Ideal);
  CHECK(t.beta(0, 2) == 3);
  CHECK(t.beta(1, 3) == 2);
  CHECK(t.entries().size() == 2);
  CHECK(regularity(t) == 2);
  CHECK(regularity(betti_table(res, BettiTag::Quotient)) == 1);
  auto h = hilbert_function(r, g, 6);
  CHECK(hilbert_polynomial_of_points(h) == 3);
  CHECK(h.values.at(0) == 1);
  CHECK(h.values.at(1) == 3);
  CHECK(h.agreement_degree == 1);
  auto v = cm_regularity_crosscheck(r, g);
  CHECK(v.pass());
  CHECK(std::get<std::int64_t>(v.computed.at("reg_S_mod_I")) == 1);
}

TEST_CASE("one point") {
  auto r = Ring::standard(3);
  std::vector<Polynomial> g{P("x0", r), P("x1", r)};
  auto h = hilbert_function(r, g, 4);
  CHECK(h.agreement_degree == 0);
  CHECK(hilbert_polynomial_of_points(h) == 1);
  auto v = cm_regularity_crosscheck(r, g);
  CHECK(v.pass());
  CHECK(std::get<std::int64_t>(v.computed.at("reg_S_mod_I")) == 0);
}

TEST_CASE("nineteen points from a 3x2 determinantal matrix") {
  auto r = Ring::standard(3);
  auto g = nineteen_points(r, 2024);
  auto res = minimal_free_resolution(r, g);
  check_exact(res, g, 9);
  auto t = betti_table(res, BettiTag::Ideal);
  CHECK(t.beta(0, 5) == 3);
  CHECK(t.beta(1, 7) == 1);
  CHECK(t.beta(1, 8) == 1);
  CHECK(t.entries().size() == 3);
  CHECK(regularity(t) == 7);
  auto h = hilbert_function(r, g, 10);
  CHECK(hilbert_polynomial_of_points(h) == 19);
  CHECK(h.agreement_degree == 6);
  for (int e = 0; e <= 10; ++e) CHECK(h.values.at(e) == oracle::hilbert_function(g, e));
  auto v = cm_regularity_crosscheck(r, g);
  CHECK(v.pass());
  CHECK(std::get<std::int64_t>(v.computed.at("reg_S_mod_I")) == 6);
}

TEST_CASE("crosscheck rejects unsaturated input") {
  auto r = Ring::standard(3);
  CHECK_THROWS_AS(cm_regularity_crosscheck(r, {P("x0^2", r), P("x0*x1", r), P("x0*x2", r)}), PreconditionError);
}

TEST_CASE("resolutions of random ideals are exact") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    auto r = Ring::standard(3 + trial % 2);
    std::vector<Polynomial> g;
    int k = 2 + trial % 3;
    for (int i = 0; i < k; ++i) g.push_back(sparse_form(r, 2 + static_cast<int>(rng() % 2), 3, rng));
    auto res = minimal_free_resolution(r, g);
    check_exact(res, g, 7);
    CHECK(res.length() <= r->num_vars());
  }
}

TEST_CASE("unminimized frame has the same Euler characteristic") {
  auto r = Ring::standard(3);
  std::mt19937_64 rng(5);
  std::vector<ModuleElement> cols;
  std::vector<Polynomial> g;
  for (int i = 0; i < 3; ++i) {
    g.push_back(random_form(r, 2, rng));
    cols.push_back(ModuleElement::from_polynomial(g.back()));
  }
  auto frame = resolve(r, FreeModuleShape::free(1), cols, false);
  auto minimal = resolve(r, FreeModuleShape::free(1), cols, true);
  CHECK(frame.composites_vanish());
  for (int e = 0; e < 8; ++e) CHECK(frame.euler_characteristic(e) == minimal.euler_characteristic(e));
  CHECK(minimal.constant_entries() == 0);
  if (frame.constant_entries() > 0) CHECK_THROWS_AS(betti_table(frame), PreconditionError);
}

TEST_CASE("presented module: two conics glued along the diagonal") {
  // coker of [diag(F1, F2) | (1, 1)] on S^2.
  auto r = Ring::standard(3);
  std::mt19937_64 rng(8);
  auto f1 = random_form(r, 2, rng), f2 = random_form(r, 2, rng);
  auto zero = Polynomial(r);
  std::vector<ModuleElement> cols{ModuleElement({f1, zero}), ModuleElement({zero, f2}),
                                  ModuleElement({Polynomial::constant(r, 1), Polynomial::constant(r, 1)})};
  auto res = resolve(r, FreeModuleShape::free(2), cols);
  CHECK(res.composites_vanish());
  CHECK(res.modules[0].rank() == 1);
  // HF = HF(S/F1) + HF(S/F2) - HF(S/F1F2) = HF(S/(F1, F2)) here.
  auto pts = std::vector<Polynomial>{f1, f2};
  for (int e = 0; e < 8; ++e) {
    std::int64_t expected = oracle::hilbert_function({f1}, e) + oracle::hilbert_function({f2}, e) -
                            oracle::hilbert_function({f1 * f2}, e);
    CHECK(res.euler_characteristic(e) == expected);
    CHECK(expected == oracle::hilbert_function(pts, e));
  }
  auto t = betti_table(res);
  CHECK(regularity(t) == 2);
}

TEST_CASE("grid and json") {
  auto r = Ring::standard(3);
  auto res = minimal_free_resolution(r, {P("x1*x2", r), P("x0*x2", r), P("x0*x1", r)});
  auto t = betti_table(res, BettiTag::Quotient);
  CHECK(t.grid() ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n");
  CHECK(t.json() == R"([{"beta":1,"i":0,"j":0},{"beta":3,"i":1,"j":2},{"beta":2,"i":2,"j":3}])");
  CHECK_THROWS_AS(regularity(BettiTable()), PreconditionError);
}
