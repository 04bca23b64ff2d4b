#include <random>

#include "condlab/ideal.hpp"
#include "condlab/random.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace condlab;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(s, r));
  return Ideal(r, g);
}

std::vector<oracle::Point> random_points(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<oracle::Point> pts;
  for (int k = 0; k < count; ++k) pts.push_back({1, static_cast<Coeff>(rng() % 32003), static_cast<Coeff>(rng() % 32003)});
  return pts;
}

// Saturated ideal of points from the forms of one large degree.
Ideal truncation_saturated(const RingPtr& r, const std::vector<oracle::Point>& pts) {
  int e = 0;
  while (oracle::binom(e + 2, 2) < static_cast<std::int64_t>(pts.size()) + 3) ++e;
  return saturate(Ideal(r, oracle::forms_vanishing(r, pts, e)));
}

}  // namespace

TEST_CASE("sum and product") {
  auto r = Ring::standard(3);
  auto a = I(r, {"x0^2 + x1*x2", "x1^3"});
  CHECK(ideal_sum(a, Ideal::zero(r)) == a);
  CHECK(ideal_product(I(r, {"x0"}), I(r, {"x1"})) == I(r, {"x0*x1"}));
  // G_i for the three coordinate lines.
  auto lines = std::vector<Ideal>{I(r, {"x1*x2"}), I(r, {"x0*x2"}), I(r, {"x0*x1"})};
  CHECK(ideal_sum(ideal_sum(lines[0], lines[1]), lines[2]) == I(r, {"x1*x2", "x0*x2", "x0*x1"}));
  CHECK_THROWS_AS(ideal_sum(a, I(Ring::standard(3, 32009), {"x0"})), ContextMismatch);
}

TEST_CASE("intersection") {
  auto r = Ring::standard(3);
  auto a = I(r, {"x0^2 - x1*x2", "x1^2 + 3*x0*x2"});
  CHECK(ideal_intersection(a, a) == a);
  CHECK(ideal_intersection(I(r, {"x0"}), I(r, {"x1"})) == I(r, {"x0*x1"}));
  auto vertices = std::vector<Ideal>{I(r, {"x1", "x2"}), I(r, {"x0", "x2"}), I(r, {"x0", "x1"})};
  CHECK(ideal_intersection(vertices) == I(r, {"x1*x2", "x0*x2", "x0*x1"}));
  CHECK(ideal_intersection(a, Ideal::zero(r)).is_zero());
  CHECK(ideal_intersection(a, Ideal::unit(r)) == a);
}

TEST_CASE("intersection matches degreewise linear algebra") {
  auto r = Ring::standard(3);
  for (int trial = 0; trial < 5; ++trial) {
    Rng g(100 + trial);
    Ideal a(r, {g.form(r, 2), g.form(r, 3)});
    Ideal b(r, {g.form(r, 2), g.form(r, 2)});
    auto c = ideal_intersection(a, b);
    for (int e = 0; e <= 6; ++e) {
      // dim (A ∩ B)_e = dim A_e + dim B_e - dim (A + B)_e
      auto sum = ideal_sum(a, b);
      CHECK(c.dimension(e) == a.dimension(e) + b.dimension(e) - sum.dimension(e));
    }
  }
}

TEST_CASE("quotients") {
  auto r = Ring::standard(3);
  CHECK(ideal_quotient(I(r, {"x0^2"}), P("x0", r)) == I(r, {"x0"}));
  auto a = I(r, {"x0^2", "x1^2"});
  CHECK(ideal_quotient(a, P("x0*x1", r)) == I(r, {"x0", "x1"}));
  // Monomial colon oracle on a larger example.
  std::vector<oracle::Exps> gens{{3, 1, 0}, {0, 2, 2}, {1, 0, 3}, {2, 2, 1}};
  std::vector<Polynomial> polys;
  for (const auto& e : gens) polys.push_back(oracle::monomial(r, e));
  oracle::Exps m{1, 1, 1};
  std::vector<Polynomial> expected;
  for (const auto& e : oracle::monomial_colon(gens, m)) expected.push_back(oracle::monomial(r, e));
  CHECK(ideal_quotient(Ideal(r, polys), oracle::monomial(r, m)) == Ideal(r, expected));
  CHECK(ideal_quotient(a, P("x2", r)) == a);
  CHECK(ideal_quotient(a, P("x0^2", r)).is_unit());
  CHECK_THROWS_AS(ideal_quotient(a, Polynomial(r)), PreconditionError);
  for (int k = 0; k < 3; ++k) CHECK(quotient_by_variable(a, k) == ideal_quotient(a, Polynomial::variable(r, k)));
}

TEST_CASE("colon round trip") {
  auto r = Ring::standard(3);
  for (int trial = 0; trial < 10; ++trial) {
    Rng g(500 + trial);
    Ideal a(r, {g.form(r, 2), g.form(r, 3)});
    auto f = g.form(r, 1 + trial % 3);
    CHECK(ideal_quotient(ideal_product(a, Ideal(r, {f})), f) == a);
  }
}

TEST_CASE("saturation") {
  auto r = Ring::standard(3);
  // the embedded point (0:0:1) is not irrelevant; it goes only under (x0, x1)
  CHECK(saturate(I(r, {"x0^2", "x0*x1"})) == I(r, {"x0^2", "x0*x1"}));
  auto s = saturate(I(r, {"x0^2", "x0*x1"}), I(r, {"x0", "x1"}));
  CHECK(s == I(r, {"x0"}));
  s = saturate(I(r, {"x0^2", "x0*x1", "x0*x2"}));
  CHECK(s.saturated_flag() == std::optional<bool>(true));
  CHECK(saturate(s) == s);
  CHECK(saturate(I(r, {"x0^2", "x0*x1", "x0*x2"}), Ideal::irrelevant(r)) == s);
  CHECK(saturate(I(r, {"x0^3", "x1^2", "x2"})).is_unit());
  CHECK(is_saturated(I(r, {"x0", "x1"})));
  CHECK_FALSE(is_saturated(I(r, {"x0^2", "x0*x1", "x0*x2"})));
  // general J by iterated quotients
  CHECK(saturate(I(r, {"x0^3*x1", "x0^2*x2^2"}), I(r, {"x0"})) == I(r, {"x1", "x2^2"}));
  CHECK(saturate(I(r, {"x0^3*x1", "x1*x2^2"}), I(r, {"x0", "x2"})) == I(r, {"x1"}));
}

TEST_CASE("saturation recovers a point ideal from a truncation") {
  auto r = Ring::standard(3);
  auto pts = random_points(7, 3);
  auto full = truncation_saturated(r, pts);
  for (int e = 0; e <= 6; ++e) CHECK(full.quotient_dimension(e) == static_cast<std::int64_t>(oracle::evaluation_rank(r, pts, e, false)));
  // only the degree-5 piece
  auto trunc = Ideal(r, oracle::forms_vanishing(r, pts, 5));
  auto sat = saturate(trunc);
  CHECK(sat == full);
  CHECK(saturate(sat) == sat);
  CHECK(sat.contains(trunc));
  CHECK(ideal_of_points(r, pts) == full);
}

TEST_CASE("elimination") {
  // Affine twisted cusp, graded with deg t = 1, deg x = 2, deg y = 3.
  auto r = Ring::make(32003, {"t", "x", "y"}, {1, 2, 3});
  auto cusp = eliminate(I(r, {"x - t^2", "y - t^3"}), {1, 2});
  CHECK(cusp.ring()->var_names() == std::vector<std::string>{"x", "y"});
  CHECK(cusp == I(cusp.ring(), {"y^2 - x^3"}));
  CHECK(codimension(cusp) == 1);

  auto q = Ring::make(32003, {"s", "t", "x0", "x1", "x2"}, {1, 1, 2, 2, 2});
  auto conic = eliminate(I(q, {"x0 - s^2", "x1 - s*t", "x2 - t^2"}), {2, 3, 4});
  CHECK(conic == I(conic.ring(), {"x0*x2 - x1^2"}));

  // keeping everything is the identity
  auto s = Ring::standard(3);
  auto a = I(s, {"x0^2 - x1*x2", "x1^3"});
  CHECK(eliminate(a, {0, 1, 2}).generators().size() == a.from_basis().generators().size());
  // (x0 - x1, x1 - x2) ∩ K[x1, x2] = (x1 - x2)
  auto b = eliminate(I(s, {"x0 - x1", "x1 - x2"}), {1, 2});
  CHECK(b == I(b.ring(), {"x1 - x2"}));
}

TEST_CASE("codimension") {
  auto r = Ring::standard(3);
  CHECK(codimension(I(r, {"x0^3 + x1^3 + x2^3"})) == 1);
  CHECK(codimension(I(r, {"x0", "x1"})) == 2);
  CHECK(codimension(jacobian_ideal(P("x0^3 + x1^3 + x2^3", r))) == 3);
  CHECK(codimension(I(r, {"x0^2", "x0*x1"})) == 1);
  CHECK_THROWS_AS(codimension(Ideal::zero(r)), PreconditionError);
  CHECK_THROWS_AS(codimension(Ideal::unit(r)), PreconditionError);
}

TEST_CASE("squarefree forms") {
  auto r = Ring::standard(3);
  CHECK_FALSE(is_squarefree(P("x0^2", r)));
  CHECK(is_squarefree(P("x0*x1", r)));
  CHECK(is_squarefree(P("x0", r)));
  Rng g(9);
  for (int k = 0; k < 3; ++k) {
    auto f = g.form(r, 2) * g.form(r, 2);
    CHECK(is_squarefree(f));
    CHECK_FALSE(is_squarefree(f * f));
  }
  CHECK_FALSE(is_squarefree(P("x1^2*x2 - x0^3", r).pow(2)));
  auto small = Ring::standard(3, 3);
  CHECK_THROWS_AS(is_squarefree(P("x0^3 + x1^3 + x2^3", small)), PreconditionError);
}

TEST_CASE("Jacobian ideal of the cuspidal cubic") {
  auto r = Ring::standard(3);
  auto j = jacobian_ideal(P("x1^2*x2 - x0^3", r));
  CHECK(j == I(r, {"x0^2", "x1*x2", "x1^2"}));
  CHECK(saturate(j) == I(r, {"x0^2", "x1"}));
}

TEST_CASE("reduced points") {
  auto r = Ring::standard(3);
  auto tri = points_are_reduced(I(r, {"x1*x2", "x0*x2", "x0*x1"}));
  CHECK(tri.reduced);
  CHECK(tri.degree == 3);
  CHECK(tri.distinct_points == 3);
  auto fat = points_are_reduced(I(r, {"x0^2", "x1"}));
  CHECK_FALSE(fat.reduced);
  CHECK(fat.degree == 2);
  CHECK(fat.distinct_points == 1);
  auto pts = random_points(10, 17);
  auto many = points_are_reduced(truncation_saturated(r, pts), 4);
  CHECK(many.reduced);
  CHECK(many.distinct_points == 10);
  // reproducible from the seed
  CHECK(points_are_reduced(truncation_saturated(r, pts), 4).attempts == many.attempts);
  CHECK_THROWS_AS(points_are_reduced(I(r, {"x0"})), PreconditionError);
}

TEST_CASE("symbolic squares") {
  auto r = Ring::standard(3);
  auto p = I(r, {"x0", "x1"});
  CHECK(symbolic_square(p) == I(r, {"x0^2", "x0*x1", "x1^2"}));

  auto tri = I(r, {"x1*x2", "x0*x2", "x0*x1"});
  auto sq = symbolic_square(tri);
  std::vector<oracle::Point> vertices{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int e = 0; e <= 6; ++e) CHECK(sq.dimension(e) == oracle::forms_through(r, vertices, e, true));
  CHECK(sq.initial_degree() == 3);
  CHECK(sq.from_basis().initial_degree() == 3);
  CHECK(sq.contains(ideal_product(tri, tri)));
  CHECK(tri.contains(sq));

  auto pts = random_points(6, 11);
  auto six = truncation_saturated(r, pts);
  auto sq6 = symbolic_square(six);
  for (int e = 0; e <= 7; ++e) CHECK(sq6.dimension(e) == oracle::forms_through(r, pts, e, true));
  CHECK(sq6.contains(ideal_product(six, six)));
  CHECK(six.contains(sq6));

  CHECK_THROWS_AS(symbolic_square(I(r, {"x0^2", "x1"})), PreconditionError);
  CHECK_THROWS_AS(symbolic_square(I(r, {"x0^2", "x0*x1", "x0*x2", "x1^3"})), PreconditionError);
}

TEST_CASE("shared cache across copies") {
  auto r = Ring::standard(3);
  auto a = I(r, {"x0^2", "x1^2"});
  auto b = a;
  const auto& gb1 = a.groebner_basis();
  const auto& gb2 = b.groebner_basis();
  CHECK(&gb1 == &gb2);
  CHECK(a.minimal_generators().size() == 2);
  CHECK(I(r, {"x0^2", "x1^2", "x0^2*x2 + x1^3"}).minimal_generators().size() == 2);
}
