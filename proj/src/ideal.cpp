#include "condlab/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "condlab/homology.hpp"
#include "condlab/random.hpp"

namespace condlab {

struct Ideal::Cache {
  std::once_flag once;
  GroebnerBasis gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw PreconditionError("ideal without a ring");
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_ring(g.ring(), ring_);
    if (!g.is_homogeneous()) throw PreconditionError("ideal generators must be homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::irrelevant(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->num_vars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

const GroebnerBasis& Ideal::groebner_basis() const {
  if (!cache_) throw PreconditionError("empty ideal handle");
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(ring_, gens_); });
  return cache_->gb;
}

bool Ideal::is_unit() const { return groebner_basis().is_unit_ideal(); }

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  require_same_ring(f.ring(), ring_);
  if (gens_.empty()) return false;
  return groebner_basis().contains(f);
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool operator==(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.groebner_basis() == b.groebner_basis();
}

std::vector<Polynomial> Ideal::minimal_generators() const {
  if (gens_.empty()) return {};
  std::vector<ModuleElement> elems;
  for (const auto& g : gens_) elems.push_back(ModuleElement::from_polynomial(g));
  std::vector<Polynomial> out;
  for (const auto& e : condlab::minimal_generators(ring_, FreeModuleShape::free(1), elems))
    out.push_back(e.components[0]);
  return out;
}

Ideal Ideal::minimalized() const {
  Ideal out(ring_, minimal_generators());
  out.saturated_ = saturated_;
  return out;
}

Ideal Ideal::from_basis() const {
  Ideal out(ring_, gens_.empty() ? std::vector<Polynomial>{} : groebner_basis().polynomials());
  out.saturated_ = saturated_;
  return out;
}

int Ideal::initial_degree() const {
  if (gens_.empty()) return -1;
  int d = gens_.front().degree();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return d;
}

std::int64_t Ideal::dimension(int e) const {
  return static_cast<std::int64_t>(monomials_of_degree(*ring_, e).size()) - quotient_dimension(e);
}

Ideal Ideal::with_saturated_flag(bool s) const {
  Ideal out = *this;
  out.saturated_ = s;
  return out;
}

std::string Ideal::to_string() const {
  std::string s = "ideal(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

// --- arithmetic ---

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// Second components of basis elements whose lead lies in component 1.
std::vector<Polynomial> lower_block(const GroebnerBasis& gb) {
  std::vector<Polynomial> out;
  for (const auto& v : gb.vectors())
    if (v.front().comp == 1) out.push_back(detail::from_vec(gb.ring(), 2, v).components[1]);
  return out;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  Polynomial zero(ring);
  std::vector<ModuleElement> gens;
  for (const auto& f : a.generators()) gens.push_back(ModuleElement({f, f}));
  for (const auto& g : b.generators()) gens.push_back(ModuleElement({g, zero}));
  GroebnerBasis gb = buchberger(ring, FreeModuleShape::free(2), gens, ModuleOrder::position_over_term(ring->order()));
  Ideal out(ring, lower_block(gb));
  for (const auto& g : out.generators())
    if (!a.contains(g) || !b.contains(g)) throw InternalError("intersection generator outside an input ideal");
  return out;
}

Ideal ideal_intersection(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    if (ideals[k].contains(acc)) continue;
    if (acc.contains(ideals[k])) {
      acc = ideals[k];
      continue;
    }
    acc = ideal_intersection(acc, ideals[k]);
  }
  return acc;
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  const RingPtr& ring = I.ring();
  if (f.is_zero()) throw PreconditionError("quotient by the zero polynomial");
  require_same_ring(f.ring(), ring);
  auto d = f.homogeneous_degree();
  if (!d) throw PreconditionError("quotient by an inhomogeneous polynomial");
  if (f.is_constant()) return I;
  if (I.is_zero()) return I;
  if (I.contains(f)) return Ideal::unit(ring);
  Polynomial zero(ring);
  std::vector<ModuleElement> gens{ModuleElement({f, Polynomial::constant(ring, 1)})};
  for (const auto& g : I.generators()) gens.push_back(ModuleElement({g, zero}));
  GroebnerBasis gb =
      buchberger(ring, FreeModuleShape({0, *d}), gens, ModuleOrder::position_over_term(ring->order()));
  return Ideal(ring, lower_block(gb));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::vector<Ideal> parts;
  for (const auto& g : J.generators()) parts.push_back(ideal_quotient(I, g));
  return ideal_intersection(parts);
}

namespace {

// Moves variable k to the last position; target var j is source var src[j].
Polynomial permute(const Polynomial& f, const RingPtr& target, const std::vector<int>& src) {
  const int n = target->num_vars();
  std::vector<Term> terms;
  terms.reserve(f.size());
  std::vector<int> e(n);
  for (const auto& t : f.terms()) {
    for (int j = 0; j < n; ++j) e[j] = t.m.exponent(src[j]);
    terms.push_back({Monomial::from_exponents(e), t.c});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

struct Permuted {
  RingPtr ring;
  std::vector<int> forward;  // forward[j] = source var of target var j
  std::vector<int> backward; // backward[i] = target var of source var i
};

Permuted move_last(const RingPtr& ring, int k) {
  Permuted p;
  const int n = ring->num_vars();
  for (int i = 0; i < n; ++i)
    if (i != k) p.forward.push_back(i);
  p.forward.push_back(k);
  p.backward.assign(n, 0);
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int j = 0; j < n; ++j) {
    p.backward[p.forward[j]] = j;
    names.push_back(ring->var_names()[p.forward[j]]);
    weights.push_back(ring->weights()[p.forward[j]]);
  }
  p.ring = Ring::make(ring->characteristic(), names, weights, ring->config());
  return p;
}

Ideal divide_out_variable(const Ideal& I, int k, bool all_powers) {
  const RingPtr& ring = I.ring();
  if (k < 0 || k >= ring->num_vars()) throw PreconditionError("variable index out of range");
  if (I.is_zero()) return I;
  Permuted p = move_last(ring, k);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(permute(g, p.ring, p.forward));
  GroebnerBasis gb = buchberger(p.ring, gens);
  const int last = ring->num_vars() - 1;
  std::vector<Polynomial> out;
  for (const auto& g : gb.polynomials()) {
    int e = Monomial::kMaxExponent;
    for (const auto& t : g.terms()) e = std::min(e, t.m.exponent(last));
    if (!all_powers) e = std::min(e, 1);
    Monomial x = Monomial::variable(last, e);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({t.m / x, t.c});
    out.push_back(permute(Polynomial::from_sorted_terms(p.ring, std::move(terms)), ring, p.backward));
  }
  return Ideal(ring, std::move(out));
}

}  // namespace

Ideal quotient_by_variable(const Ideal& I, int k) { return divide_out_variable(I, k, false); }

Ideal saturate_by_variable(const Ideal& I, int k) { return divide_out_variable(I, k, true); }

Ideal saturate(const Ideal& I) {
  if (I.is_zero()) return I.with_saturated_flag(true);
  if (I.is_unit()) return Ideal::unit(I.ring()).with_saturated_flag(true);
  std::vector<Ideal> parts;
  for (int k = 0; k < I.ring()->num_vars(); ++k) parts.push_back(saturate_by_variable(I, k));
  return ideal_intersection(parts).with_saturated_flag(true);
}

bool is_saturated(const Ideal& I) {
  if (I.saturated_flag()) return *I.saturated_flag();
  return saturate(I) == I;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J == Ideal::irrelevant(J.ring())) return saturate(I);
  const int cap = I.ring()->config().iteration_cap;
  Ideal current = I;
  for (int it = 0; it < cap; ++it) {
    Ideal next = ideal_quotient(current, J);
    if (next == current) return current;
    current = next;
  }
  throw ComputationLimit("saturation did not stabilize within " + std::to_string(cap) + " quotients");
}

Ideal eliminate(const Ideal& I, const std::vector<int>& keep) {
  const RingPtr& ring = I.ring();
  const int n = ring->num_vars();
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw PreconditionError("eliminate: variable index out of range");
    kept[k] = true;
  }
  std::vector<int> order_src;
  for (int i = 0; i < n; ++i)
    if (!kept[i]) order_src.push_back(i);
  const int block = static_cast<int>(order_src.size());
  for (int i = 0; i < n; ++i)
    if (kept[i]) order_src.push_back(i);

  std::vector<std::string> names, sub_names;
  std::vector<int> weights, sub_weights;
  for (int j = 0; j < n; ++j) {
    names.push_back(ring->var_names()[order_src[j]]);
    weights.push_back(ring->weights()[order_src[j]]);
    if (j >= block) {
      sub_names.push_back(names.back());
      sub_weights.push_back(weights.back());
    }
  }
  if (sub_names.empty()) throw PreconditionError("eliminate: nothing kept");
  RingPtr work = Ring::make(ring->characteristic(), names, weights, ring->config());
  RingPtr sub = Ring::make(ring->characteristic(), sub_names, sub_weights, ring->config());
  if (I.is_zero()) return Ideal::zero(sub);

  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(permute(g, work, order_src));
  GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(block, weights));
  std::uint64_t elim_mask = Monomial::var_mask(0, block);
  std::vector<Polynomial> out;
  std::vector<int> sub_src(n - block);
  for (int j = 0; j < n - block; ++j) sub_src[j] = block + j;
  for (const auto& g : gb.polynomials()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(),
                            [&](const Term& t) { return t.m.masked(elim_mask).is_one(); });
    if (free) out.push_back(permute(g, sub, sub_src));
  }
  return Ideal(sub, std::move(out));
}

int codimension(const Ideal& I) {
  if (I.is_zero()) throw PreconditionError("codimension of the zero ideal");
  if (I.is_unit()) throw PreconditionError("codimension of the unit ideal");
  const int n = I.ring()->num_vars();
  auto leads = I.groebner_basis().leading_monomials();
  int dim = 0;
  for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
    int size = __builtin_popcount(subset);
    if (size <= dim) continue;
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (subset & (1U << i)) mask |= Monomial::var_mask(i, 1);
    bool independent = std::none_of(leads.begin(), leads.end(), [&](Monomial l) { return l.masked(mask) == l; });
    if (independent) dim = size;
  }
  return n - dim;
}

Ideal jacobian_ideal(const Polynomial& f) {
  if (f.is_zero() || !f.ring()) throw PreconditionError("Jacobian ideal of the zero polynomial");
  auto d = f.homogeneous_degree();
  if (!d) throw PreconditionError("Jacobian ideal needs a homogeneous form");
  const RingPtr& ring = f.ring();
  if (*d % static_cast<int>(ring->characteristic()) == 0)
    throw PreconditionError("characteristic " + std::to_string(ring->characteristic()) + " divides the degree " +
                            std::to_string(*d));
  std::vector<Polynomial> partials;
  for (int i = 0; i < ring->num_vars(); ++i) partials.push_back(f.derivative(i));
  Ideal J(ring, partials);
  if (!J.contains(f)) throw InternalError("Euler relation failed: form not in its Jacobian ideal");
  return J;
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) throw PreconditionError("squarefreeness of a constant");
  Ideal J = jacobian_ideal(f);
  if (J.is_unit()) return true;
  return codimension(J) >= 2;
}

// --- reducedness of points ---

namespace {

using Univariate = std::vector<Coeff>;  // low to high

void trim(Univariate& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

int degree(const Univariate& u) { return static_cast<int>(u.size()) - 1; }

Univariate remainder(Univariate a, const Univariate& b, const PrimeField& F) {
  Coeff inv = F.inv(b.back());
  while (degree(a) >= degree(b)) {
    Coeff q = F.mul(a.back(), inv);
    int shift = degree(a) - degree(b);
    for (int i = 0; i <= degree(b); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Coeff inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

Univariate derivative(const Univariate& u, const PrimeField& F) {
  Univariate d;
  for (std::size_t i = 1; i < u.size(); ++i) d.push_back(F.mul(u[i], F.reduce(i)));
  trim(d);
  return d;
}

}  // namespace

PointsReducedResult points_are_reduced(const Ideal& I, std::uint64_t seed, int retry_budget) {
  const RingPtr& ring = I.ring();
  if (ring->num_vars() != 3 || !ring->standard_grading())
    throw PreconditionError("points_are_reduced works in P^2 with the standard grading");
  if (I.is_zero() || I.is_unit()) throw PreconditionError("points_are_reduced: ideal defines no points");
  std::int64_t delta = hilbert_polynomial_of_points(ring, I.generators());
  if (delta <= 0) throw PreconditionError("points_are_reduced: ideal defines no points");
  const PrimeField& F = ring->field();

  PointsReducedResult result;
  result.degree = delta;
  result.seed = seed;
  Rng rng(seed);
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    result.attempts = attempt;
    Coeff a[3][3];
    for (auto& row : a)
      for (auto& c : row) c = rng.scalar(F);
    auto minor = [&](int r0, int r1, int c0, int c1) {
      return F.sub(F.mul(a[r0][c0], a[r1][c1]), F.mul(a[r0][c1], a[r1][c0]));
    };
    Coeff det = F.add(F.sub(F.mul(a[0][0], minor(1, 2, 1, 2)), F.mul(a[0][1], minor(1, 2, 0, 2))),
                      F.mul(a[0][2], minor(1, 2, 0, 1)));
    if (det == 0) continue;
    std::vector<Polynomial> images;
    for (int i = 0; i < 3; ++i) {
      std::vector<Term> t;
      for (int j = 0; j < 3; ++j) t.push_back({Monomial::variable(j), a[i][j]});
      images.push_back(Polynomial::from_terms(ring, t));
    }
    std::vector<Polynomial> moved;
    for (const auto& g : I.generators()) moved.push_back(g.substitute(ring, images));
    Ideal projected = eliminate(Ideal(ring, moved), {1, 2});
    Univariate g;
    for (const auto& p : projected.generators()) {
      Univariate u(p.degree() + 1, 0);
      for (const auto& t : p.terms()) u[t.m.exponent(0)] = t.c;
      trim(u);
      g = g.empty() ? u : gcd(g, u, F);
    }
    if (degree(g) != delta) continue;
    Univariate common = gcd(g, derivative(g, F), F);
    result.distinct_points = delta - degree(common);
    result.reduced = degree(common) == 0;
    return result;
  }
  throw RetryBudgetExhausted("points_are_reduced: no projection of full degree after " +
                             std::to_string(retry_budget) + " attempts");
}

Ideal ideal_of_points(const RingPtr& ring, const std::vector<std::vector<Coeff>>& points) {
  if (ring->num_vars() != 3) throw PreconditionError("ideal_of_points works in P^2");
  if (points.empty()) return Ideal::unit(ring);
  const PrimeField& F = ring->field();
  auto linear = [&](Coeff a, Coeff b, Coeff c) {
    std::vector<Term> t;
    if (a) t.push_back({Monomial::variable(0), a});
    if (b) t.push_back({Monomial::variable(1), b});
    if (c) t.push_back({Monomial::variable(2), c});
    return Polynomial::from_terms(ring, t);
  };
  std::vector<Ideal> parts;
  for (const auto& x : points) {
    if (x.size() != 3) throw PreconditionError("points need three coordinates");
    std::vector<Polynomial> g;
    if (x[2] != 0) {
      g = {linear(x[2], 0, F.neg(x[0])), linear(0, x[2], F.neg(x[1]))};
    } else if (x[1] != 0) {
      g = {linear(x[1], F.neg(x[0]), 0), linear(0, 0, 1)};
    } else if (x[0] != 0) {
      g = {linear(0, 1, 0), linear(0, 0, 1)};
    } else {
      throw PreconditionError("the zero vector is not a point");
    }
    parts.emplace_back(ring, std::move(g));
  }
  return ideal_intersection(parts).with_saturated_flag(true);
}

Ideal symbolic_square(const Ideal& I, std::uint64_t seed) {
  if (I.ring()->num_vars() != 3) throw PreconditionError("symbolic_square works in P^2");
  if (I.is_zero() || I.is_unit() || codimension(I) != 2)
    throw PreconditionError("symbolic_square needs an ideal of points (codimension 2)");
  if (!is_saturated(I)) throw PreconditionError("symbolic_square needs a saturated ideal");
  if (!points_are_reduced(I, seed).reduced) throw PreconditionError("symbolic_square needs reduced points");
  return saturate(ideal_product(I, I));
}

}  // namespace condlab
