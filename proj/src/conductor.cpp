#include "condlab/conductor.hpp"

#include <sstream>

namespace condlab {

std::string to_string(CurveOrigin origin) {
  switch (origin) {
    case CurveOrigin::Explicit: return "explicit";
    case CurveOrigin::Implicitized: return "implicitized";
    case CurveOrigin::Determinantal: return "determinantal-construction";
  }
  return "?";
}

std::string to_string(ConductorRoute route) {
  switch (route) {
    case ConductorRoute::JacobianSaturation: return "jacobian-saturation";
    case ConductorRoute::ComponentProduct: return "component-product";
    case ConductorRoute::Hint: return "hint";
  }
  return "?";
}

// --- CurveSpec ---

CurveSpec::CurveSpec(std::vector<CurveComponent> components, CurveOrigin origin, std::uint64_t seed)
    : components_(std::move(components)), origin_(origin), seed_(seed) {
  if (components_.empty()) throw PreconditionError("a curve needs at least one component");
  const RingPtr& r = components_.front().form.ring();
  if (!r || r->num_vars() != 3) throw PreconditionError("curves live in P^2 (three variables)");
  if (!r->standard_grading()) throw PreconditionError("curves need the standard grading");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    auto& c = components_[i];
    require_same_ring(c.form.ring(), r);
    auto d = c.form.homogeneous_degree();
    if (c.form.is_zero() || !d || *d < 1)
      throw PreconditionError("component " + std::to_string(i) + " is not a form of positive degree");
    c.degree = *d;
    degree_ += *d;
    if (!is_squarefree(c.form)) throw PreconditionError("component " + std::to_string(i) + " is not squarefree");
    if (c.conductor_hint) require_same_ring(c.conductor_hint->ring(), r);
  }
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      Ideal pair(r, {components_[i].form, components_[j].form});
      if (codimension(pair) != 2)
        throw PreconditionError("components " + std::to_string(i) + " and " + std::to_string(j) +
                                " share a factor");
    }
}

CurveSpec CurveSpec::from_forms(const std::vector<Polynomial>& forms, CurveOrigin origin, std::uint64_t seed) {
  std::vector<CurveComponent> comps;
  for (const auto& f : forms) comps.push_back({f, 0, std::nullopt});
  return CurveSpec(std::move(comps), origin, seed);
}

Polynomial CurveSpec::total_form() const {
  Polynomial f = components_.front().form;
  for (std::size_t i = 1; i < components_.size(); ++i) f = f * components_[i].form;
  return f;
}

Polynomial CurveSpec::cofactor(int i) const {
  Polynomial g = Polynomial::constant(ring(), 1);
  for (int j = 0; j < num_components(); ++j)
    if (j != i) g = g * components_[j].form;
  return g;
}

CurveSpec CurveSpec::without(int i) const {
  if (num_components() < 2) throw PreconditionError("cannot remove the only component");
  std::vector<CurveComponent> rest;
  for (int j = 0; j < num_components(); ++j)
    if (j != i) rest.push_back(components_[j]);
  return CurveSpec(std::move(rest), origin_, seed_);
}

CurveSpec CurveSpec::only(int i) const { return CurveSpec({components_.at(i)}, origin_, seed_); }

namespace {

Polynomial transfer(const Polynomial& f, const RingPtr& target) {
  std::vector<Term> terms;
  const PrimeField& from = f.ring()->field();
  for (const auto& t : f.terms()) terms.push_back({t.m, target->field().from_signed(from.to_signed(t.c))});
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace

CurveSpec CurveSpec::with_prime(std::uint32_t prime) const {
  RingPtr target = ring()->with_prime(prime);
  std::vector<CurveComponent> comps;
  for (const auto& c : components_) {
    CurveComponent n{transfer(c.form, target), 0, std::nullopt};
    if (c.conductor_hint) {
      std::vector<Polynomial> g;
      for (const auto& h : c.conductor_hint->generators()) g.push_back(transfer(h, target));
      n.conductor_hint = Ideal(target, g);
    }
    comps.push_back(std::move(n));
  }
  return CurveSpec(std::move(comps), origin_, seed_);
}

std::string CurveSpec::to_string() const {
  std::ostringstream out;
  out << "curve d=" << degree_ << " components=" << num_components() << " origin=" << condlab::to_string(origin_);
  for (const auto& c : components_) out << "\n  [" << c.degree << "] " << c.form.to_string();
  return out.str();
}

// --- conductor routes ---

ConductorReport describe_conductor(const Ideal& conductor, int degree, ConductorRoute route) {
  ConductorReport r;
  r.conductor = conductor.with_saturated_flag(true);
  r.degree = degree;
  r.route = route;
  if (conductor.is_unit()) return r;
  const RingPtr& ring = conductor.ring();
  FreeResolution res = minimal_free_resolution(ring, conductor.generators());
  if (res.length() != 2)
    throw InternalError("conductor is not perfect of codimension two (projective dimension " +
                        std::to_string(res.length()) + ")");
  HilbertData h = hilbert_function(res, conductor.groebner_basis(), res.max_twist() + 1);
  r.delta = hilbert_polynomial_of_points(h);
  r.betti = betti_table(res, BettiTag::Ideal);
  r.regularity = regularity(r.betti);
  r.degree_d_syzygies = r.betti.beta(1, degree);
  r.h0_jump_degree = degree - 1 - r.regularity;
  return r;
}

ConductorReport conductor_nodal(const Polynomial& f, std::uint64_t seed) {
  auto d = f.homogeneous_degree();
  if (f.is_zero() || !d || *d < 1) throw PreconditionError("conductor_nodal needs a form of positive degree");
  if (f.ring()->num_vars() != 3) throw PreconditionError("conductor_nodal works in P^2");
  Ideal jac = jacobian_ideal(f);
  if (jac.is_unit()) {
    ConductorReport r = describe_conductor(Ideal::unit(f.ring()), *d, ConductorRoute::JacobianSaturation);
    r.seed = seed;
    return r;
  }
  if (codimension(jac) < 2) throw PreconditionError("form is not squarefree");
  Ideal c = saturate(jac);
  if (c.is_unit()) {
    ConductorReport r = describe_conductor(c, *d, ConductorRoute::JacobianSaturation);
    r.seed = seed;
    return r;
  }
  PointsReducedResult cert;
  try {
    cert = points_are_reduced(c, seed);
  } catch (const RetryBudgetExhausted&) {
    throw CertificateFailure(
        "non-nodal singularity detected: saturated Jacobian ideal is not curvilinear (a point of multiplicity >= 3)");
  }
  if (!cert.reduced)
    throw CertificateFailure("non-nodal singularity detected: saturated Jacobian ideal is not reduced (length " +
                             std::to_string(cert.degree) + " on " + std::to_string(cert.distinct_points) +
                             " points; e.g. a cusp or tacnode)");
  ConductorReport r = describe_conductor(c, *d, ConductorRoute::JacobianSaturation);
  r.seed = seed;
  r.certificate_attempts = cert.attempts;
  return r;
}

namespace {

// J_i * (G_i) summed over the components, then saturated.
Ideal weighted_sum(const CurveSpec& spec, const std::vector<Ideal>& local) {
  const RingPtr& ring = spec.ring();
  std::vector<Polynomial> gens;
  for (int i = 0; i < spec.num_components(); ++i) {
    Polynomial g = spec.cofactor(i);
    for (const auto& c : local[i].generators()) gens.push_back(c * g);
  }
  return saturate(Ideal(ring, gens));
}

std::vector<Ideal> component_conductors(const CurveSpec& spec, std::uint64_t seed, bool& used_hint) {
  std::vector<Ideal> local;
  used_hint = false;
  for (int i = 0; i < spec.num_components(); ++i) {
    const auto& c = spec.components()[i];
    if (c.conductor_hint) {
      local.push_back(*c.conductor_hint);
      used_hint = true;
      continue;
    }
    try {
      local.push_back(conductor_nodal(c.form, seed).conductor);
    } catch (const CertificateFailure& e) {
      throw CertificateFailure("component " + std::to_string(i) + ": " + e.what() + "; supply a conductor hint");
    }
  }
  return local;
}

}  // namespace

ConductorReport conductor_from_components(const CurveSpec& spec, std::uint64_t seed) {
  bool used_hint = false;
  auto local = component_conductors(spec, seed, used_hint);
  Ideal c = weighted_sum(spec, local);
  ConductorReport r =
      describe_conductor(c, spec.degree(), used_hint ? ConductorRoute::Hint : ConductorRoute::ComponentProduct);
  r.seed = seed;
  return r;
}

Ideal singular_set_ideal_nodescusps(const CurveSpec& spec, std::uint64_t seed) {
  bool used_hint = false;
  return weighted_sum(spec, component_conductors(spec, seed, used_hint));
}

Ideal intersection_points_ideal(const CurveSpec& spec) {
  const RingPtr& ring = spec.ring();
  if (spec.num_components() < 2) return Ideal::unit(ring);
  std::vector<Ideal> pairs;
  for (int i = 0; i < spec.num_components(); ++i)
    for (int j = i + 1; j < spec.num_components(); ++j)
      pairs.emplace_back(ring, std::vector<Polynomial>{spec.components()[i].form, spec.components()[j].form});
  // complete intersections of codimension two are already saturated
  return ideal_intersection(pairs).with_saturated_flag(true);
}

}  // namespace condlab
