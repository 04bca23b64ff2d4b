#include <algorithm>

#include "condlab/conductor.hpp"

namespace condlab {

namespace {

std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Polynomial linear_form(const RingPtr& ring, const Coeff* c) {
  std::vector<Term> t;
  for (int j = 0; j < 3; ++j) t.push_back({Monomial::variable(j), c[j]});
  return Polynomial::from_terms(ring, t);
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& a, const RingPtr& ring) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  Polynomial det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = a[0][c] * determinant(minor, ring);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

Polynomial random_linear_change(const Polynomial& f, Rng& rng) {
  const RingPtr& ring = f.ring();
  if (ring->num_vars() != 3) throw PreconditionError("random_linear_change works in three variables");
  const PrimeField& F = ring->field();
  for (;;) {
    Coeff a[3][3];
    for (auto& row : a)
      for (auto& c : row) c = rng.scalar(F);
    auto m = [&](int r0, int r1, int c0, int c1) {
      return F.sub(F.mul(a[r0][c0], a[r1][c1]), F.mul(a[r0][c1], a[r1][c0]));
    };
    Coeff det = F.add(F.sub(F.mul(a[0][0], m(1, 2, 1, 2)), F.mul(a[0][1], m(1, 2, 0, 2))),
                      F.mul(a[0][2], m(1, 2, 0, 1)));
    if (det == 0) continue;
    std::vector<Polynomial> images;
    for (auto& row : a) images.push_back(linear_form(ring, row));
    return f.substitute(ring, images);
  }
}

Polynomial random_element(const Ideal& I, int degree, Rng& rng) {
  const RingPtr& ring = I.ring();
  Polynomial f(ring);
  for (const auto& g : I.generators()) {
    int dg = g.degree();
    if (dg > degree) continue;
    for (Monomial mon : monomials_of_degree(*ring, degree - dg))
      f = f + g.times_monomial(mon, rng.scalar(ring->field()));
  }
  return f;
}

Polynomial random_nodal_cubic(const RingPtr& ring, Rng& rng) {
  Polynomial x0 = Polynomial::variable(ring, 0), x1 = Polynomial::variable(ring, 1),
             x2 = Polynomial::variable(ring, 2);
  return random_linear_change(x0 * x1 * x2 + x0.pow(3) + x1.pow(3), rng);
}

CurveSpec rational_curve_implicitize(const RingPtr& ring, int d, std::uint64_t seed, int retry_budget,
                                    ConductorReport* report) {
  if (ring->num_vars() != 3 || !ring->standard_grading())
    throw PreconditionError("implicitization targets P^2 with the standard grading");
  if (d < 2) throw PreconditionError("rational curves need degree >= 2");
  RingPtr work =
      Ring::make(ring->characteristic(), {"s", "t", "x0", "x1", "x2"}, {1, 1, d, d, d}, ring->config());
  Rng rng(seed);
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      std::vector<Term> phi;
      for (int a = 0; a <= d; ++a) {
        int e[5] = {a, d - a, 0, 0, 0};
        phi.push_back({Monomial::from_exponents(e), rng.scalar(ring->field())});
      }
      gens.push_back(Polynomial::variable(work, 2 + i) - Polynomial::from_terms(work, phi));
    }
    Ideal image = eliminate(Ideal(work, gens), {2, 3, 4});
    if (image.generators().size() != 1) continue;
    std::vector<Term> terms;
    for (const auto& t : image.generators().front().terms()) terms.push_back(t);
    Polynomial f = Polynomial::from_terms(ring, std::move(terms)).monic();
    if (f.degree() != d) continue;
    try {
      ConductorReport r = conductor_nodal(f, seed + attempt);
      if (r.delta != choose2(d - 1)) continue;
      if (report) *report = r;
      return CurveSpec::from_forms({f}, CurveOrigin::Implicitized, seed);
    } catch (const CertificateFailure&) {
      continue;
    } catch (const PreconditionError&) {
      continue;
    }
  }
  throw RetryBudgetExhausted("rational_curve_implicitize: no nodal image of degree " + std::to_string(d) +
                             " after " + std::to_string(retry_budget) + " attempts");
}

DeterminantalPoints determinantal_points(const RingPtr& ring, int m, std::uint64_t seed, int retry_budget) {
  if (m < 2) throw PreconditionError("determinantal_points needs m >= 2");
  if (ring->num_vars() != 3 || !ring->standard_grading())
    throw PreconditionError("determinantal_points works in P^2 with the standard grading");
  const std::int64_t want_delta = 20 * choose2(m - 1) + 18 * m - 17;
  const int want_reg = 6 * m - 5;
  const int gen_degree = 4 * m - 3;
  Rng rng(seed);
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    std::vector<std::vector<Polynomial>> a(m + 1, std::vector<Polynomial>(m));
    for (int i = 0; i <= m; ++i) {
      a[i][0] = rng.form(ring, 2 * m - 1);
      for (int j = 1; j < m; ++j) a[i][j] = rng.form(ring, 2);
    }
    std::vector<Polynomial> minors;
    for (int skip = 0; skip <= m; ++skip) {
      std::vector<std::vector<Polynomial>> sub;
      for (int i = 0; i <= m; ++i)
        if (i != skip) sub.push_back(a[i]);
      minors.push_back(determinant(sub, ring));
    }
    Ideal ideal(ring, minors);
    if (ideal.is_zero() || ideal.is_unit() || codimension(ideal) != 2) continue;
    DeterminantalPoints out;
    out.resolution = minimal_free_resolution(ring, minors);
    // projective dimension two in three variables: depth one, hence saturated
    if (out.resolution.length() != 2) continue;
    out.betti = betti_table(out.resolution, BettiTag::Ideal);
    out.regularity = regularity(out.betti);
    HilbertData h = hilbert_function(out.resolution, ideal.groebner_basis(), out.resolution.max_twist() + 1);
    out.delta = hilbert_polynomial_of_points(h);
    if (out.delta != want_delta || out.regularity != want_reg) continue;
    if (out.betti.total(0) != m + 1 || out.betti.beta(0, gen_degree) != m + 1) continue;
    if (!points_are_reduced(ideal, seed + attempt).reduced) continue;
    out.ideal = ideal.with_saturated_flag(true);
    out.seed = seed;
    out.attempts = attempt;
    return out;
  }
  throw RetryBudgetExhausted("determinantal_points: genericity certificate failed " + std::to_string(retry_budget) +
                             " times");
}

std::optional<NodalCurve> nodal_curve_through(const Ideal& points, int degree, std::uint64_t seed, int retry_budget,
                                              const Ideal* square) {
  Ideal sq = square ? *square : symbolic_square(points, seed);
  if (sq.initial_degree() > degree) return std::nullopt;
  Rng rng(seed);
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    Polynomial f = random_element(sq, degree, rng);
    if (f.is_zero()) continue;
    f = f.monic();
    try {
      ConductorReport r = conductor_nodal(f, seed + attempt);
      if (!(r.conductor == points)) continue;
      NodalCurve out{CurveSpec::from_forms({f}, CurveOrigin::Explicit, seed), r, attempt};
      return out;
    } catch (const CertificateFailure&) {
    } catch (const PreconditionError&) {
    }
  }
  return std::nullopt;
}

std::vector<CurveSpec> reducible_corpus(const RingPtr& ring, int count, std::uint64_t seed, int max_degree) {
  // component kinds: 1 = line, 2 = conic, 3 = nodal cubic, 4 = smooth cubic
  static const std::vector<std::vector<int>> patterns = {
      {1, 1},    {1, 2},       {2, 2},    {1, 1, 1},    {3, 1}, {3, 2},    {1, 1, 1, 1}, {2, 2, 1},
      {4, 1, 1}, {3, 3},       {1, 2, 3}, {2, 2, 2},    {3, 2, 1, 1}, {1, 1, 1, 1, 1}, {4, 3}, {2, 2, 1, 1, 1}};
  Rng rng(seed);
  std::vector<CurveSpec> out;
  for (std::size_t k = 0; static_cast<int>(out.size()) < count; ++k) {
    const auto& pattern = patterns[k % patterns.size()];
    int d = 0;
    for (int kind : pattern) d += kind >= 3 ? 3 : kind;
    if (d > max_degree) {
      if (k > 4 * patterns.size()) throw PreconditionError("reducible_corpus: max_degree too small");
      continue;
    }
    std::vector<Polynomial> forms;
    for (int kind : pattern) {
      if (kind == 3)
        forms.push_back(random_nodal_cubic(ring, rng));
      else
        forms.push_back(rng.form(ring, kind == 4 ? 3 : kind));
    }
    out.push_back(CurveSpec::from_forms(forms, CurveOrigin::Explicit, seed));
  }
  return out;
}

std::vector<CurveSpec> irreducible_corpus(const RingPtr& ring, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CurveSpec> out;
  out.push_back(CurveSpec::from_forms({random_nodal_cubic(ring, rng)}, CurveOrigin::Explicit, seed));
  out.push_back(CurveSpec::from_forms({random_nodal_cubic(ring, rng)}, CurveOrigin::Explicit, seed));
  out.push_back(rational_curve_implicitize(ring, 4, rng.derive()));
  out.push_back(rational_curve_implicitize(ring, 4, rng.derive()));
  out.push_back(rational_curve_implicitize(ring, 5, rng.derive()));
  std::vector<std::vector<Coeff>> pts;
  for (int k = 0; k < 4; ++k)
    pts.push_back({rng.nonzero_scalar(ring->field()), rng.scalar(ring->field()), rng.scalar(ring->field())});
  auto sextic = nodal_curve_through(ideal_of_points(ring, pts), 6, rng.derive());
  if (!sextic) throw RetryBudgetExhausted("irreducible_corpus: no nodal sextic through four points");
  out.push_back(sextic->spec);
  return out;
}

}  // namespace condlab
