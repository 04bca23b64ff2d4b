#include "condlab/groebner.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

namespace condlab {

// --- ModuleElement ---

ModuleElement ModuleElement::zero(const RingPtr& ring, int rank) {
  return ModuleElement(std::vector<Polynomial>(rank, Polynomial(ring)));
}

bool ModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> ModuleElement::homogeneous_degree(const FreeModuleShape& shape) const {
  if (rank() != shape.rank()) throw ContextMismatch("module element rank does not match shape");
  std::optional<int> deg;
  for (int k = 0; k < rank(); ++k) {
    if (components[k].is_zero()) continue;
    auto d = components[k].homogeneous_degree();
    if (!d) return std::nullopt;
    int total = *d + shape.twists[k];
    if (deg && *deg != total) return std::nullopt;
    deg = total;
  }
  return deg ? deg : std::optional<int>(0);
}

std::string ModuleElement::to_string() const {
  std::string s = "(";
  for (int k = 0; k < rank(); ++k) s += (k ? ", " : "") + components[k].to_string();
  return s + ")";
}

// --- ModuleOrder ---

ModuleOrder ModuleOrder::schreyer(const ModuleOrder& lower, const std::vector<ModTerm>& leads) {
  auto frame = std::make_shared<SchreyerFrame>();
  const SchreyerFrame* prev = lower.kind_ == Kind::Schreyer ? lower.frame_.get() : nullptr;
  frame->base = prev ? prev->base : lower;
  frame->level = prev ? prev->level + 1 : 1;
  for (std::size_t j = 0; j < leads.size(); ++j) {
    const auto& t = leads[j];
    if (prev) {
      frame->flat.push_back(t.m * prev->flat[t.comp]);
      frame->base_comp.push_back(prev->base_comp[t.comp]);
      auto chain = prev->chain[t.comp];
      chain.push_back(static_cast<std::uint32_t>(j));
      frame->chain.push_back(std::move(chain));
    } else {
      frame->flat.push_back(t.m);
      frame->base_comp.push_back(t.comp);
      frame->chain.push_back({static_cast<std::uint32_t>(j)});
    }
  }
  ModuleOrder order(Kind::Schreyer, lower.mono_);
  order.frame_ = std::move(frame);
  return order;
}

int ModuleOrder::level() const { return frame_ ? frame_->level : 0; }

int ModuleOrder::base_compare(Monomial a, std::uint32_t ca, Monomial b, std::uint32_t cb) const {
  if (kind_ == Kind::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return mono_.compare(a, b);
  }
  int r = mono_.compare(a, b);
  if (r != 0) return r;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

int ModuleOrder::compare(Monomial a, std::uint32_t ca, Monomial b, std::uint32_t cb) const {
  if (kind_ != Kind::Schreyer) return base_compare(a, ca, b, cb);
  const SchreyerFrame& f = *frame_;
  int r = f.base.base_compare(a * f.flat[ca], f.base_comp[ca], b * f.flat[cb], f.base_comp[cb]);
  if (r != 0) return r;
  const auto& xa = f.chain[ca];
  const auto& xb = f.chain[cb];
  for (std::size_t l = 0; l < xa.size(); ++l)
    if (xa[l] != xb[l]) return xa[l] < xb[l] ? 1 : -1;
  return 0;
}

// --- vector kernels ---

namespace detail {

ModVec to_vec(const ModuleElement& f, const ModuleOrder& order) {
  ModVec v;
  for (std::uint32_t k = 0; k < f.components.size(); ++k)
    for (const auto& t : f.components[k].terms()) v.push_back({t.m, k, t.c});
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  return v;
}

ModuleElement from_vec(const RingPtr& ring, int rank, const ModVec& v) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp >= static_cast<std::uint32_t>(rank)) throw InternalError("module term outside rank");
    parts[t.comp].push_back({t.m, t.c});
  }
  ModuleElement out;
  out.components.reserve(rank);
  for (auto& p : parts) out.components.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

void sort_vec(const PrimeField& field, const ModuleOrder& order, ModVec& v) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    ModTerm t = v[i++];
    while (i < v.size() && v[i].m == t.m && v[i].comp == t.comp) t.c = field.add(t.c, v[i++].c);
    if (t.c != 0) v[out++] = t;
  }
  v.resize(out);
}

namespace {
ModVec axpy_range(const PrimeField& field, const ModuleOrder& order, const ModTerm* a, std::size_t na,
                  Coeff c, Monomial m, const ModVec& g) {
  ModVec out;
  out.reserve(na + g.size());
  std::size_t i = 0, j = 0;
  while (i < na && j < g.size()) {
    Monomial gm = g[j].m * m;
    int cmp = order.compare(a[i].m, a[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].comp, field.mul(c, g[j].c)});
      ++j;
    } else {
      Coeff s = field.add(a[i].c, field.mul(c, g[j].c));
      if (s != 0) out.push_back({a[i].m, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < na; ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].m * m, g[j].comp, field.mul(c, g[j].c)});
  return out;
}
}  // namespace

ModVec axpy(const PrimeField& field, const ModuleOrder& order, const ModVec& v, Coeff c, Monomial m,
            const ModVec& g) {
  return axpy_range(field, order, v.data(), v.size(), c, m, g);
}

ModVec reduce(const PrimeField& field, const ModuleOrder& order, ModVec f,
              const std::vector<const ModVec*>& reducers, std::vector<QuotientTerm>* quotients) {
  ModVec result;
  std::vector<Monomial> lead_m;
  std::vector<std::uint32_t> lead_c;
  std::vector<Coeff> lead_inv;
  lead_m.reserve(reducers.size());
  for (const ModVec* g : reducers) {
    lead_m.push_back(g->front().m);
    lead_c.push_back(g->front().comp);
    lead_inv.push_back(field.inv(g->front().c));
  }
  std::size_t pos = 0;
  while (pos < f.size()) {
    const ModTerm t = f[pos];
    std::size_t k = 0;
    for (; k < reducers.size(); ++k)
      if (lead_c[k] == t.comp && lead_m[k].divides(t.m)) break;
    if (k == reducers.size()) {
      result.push_back(t);
      ++pos;
      continue;
    }
    Monomial q = t.m / lead_m[k];
    Coeff c = field.mul(t.c, lead_inv[k]);
    if (quotients) quotients->push_back({static_cast<std::uint32_t>(k), q, c});
    f = axpy_range(field, order, f.data() + pos, f.size() - pos, field.neg(c), q, *reducers[k]);
    pos = 0;
  }
  return result;
}

std::vector<std::size_t> sort_for_schreyer(std::vector<ModVec>& elems) {
  std::vector<std::size_t> perm(elems.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  MonomialOrder lex = MonomialOrder::lex();
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const ModTerm& la = elems[a].front();
    const ModTerm& lb = elems[b].front();
    if (la.comp != lb.comp) return la.comp < lb.comp;
    return lex.compare(la.m, lb.m) > 0;
  });
  std::vector<ModVec> sorted;
  sorted.reserve(elems.size());
  for (std::size_t i : perm) sorted.push_back(std::move(elems[i]));
  elems = std::move(sorted);
  return perm;
}

std::vector<ModVec> schreyer_syzygies(const PrimeField& field, const ModuleOrder& order,
                                      const std::vector<ModVec>& elems, const ModuleOrder& next_order) {
  std::vector<const ModVec*> reducers;
  for (const auto& e : elems) reducers.push_back(&e);
  std::vector<ModVec> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const ModTerm& li = elems[i].front();
    struct Candidate {
      std::size_t j;
      Monomial m;
    };
    std::vector<Candidate> cands;
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const ModTerm& lj = elems[j].front();
      if (lj.comp != li.comp) continue;
      cands.push_back({j, li.m.lcm(lj.m) / li.m});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < cands.size() && !redundant; ++b) {
        if (a == b || !cands[b].m.divides(cands[a].m)) continue;
        redundant = !(cands[b].m == cands[a].m) || b < a;
      }
      if (redundant) continue;
      std::size_t j = cands[a].j;
      const ModTerm& lj = elems[j].front();
      Monomial lcm = li.m * cands[a].m;
      Coeff ci = field.inv(li.c);
      Coeff cj = field.inv(lj.c);
      Monomial mj = lcm / lj.m;
      ModVec s = axpy(field, order, ModVec{}, ci, cands[a].m, elems[i]);
      s = axpy(field, order, s, field.neg(cj), mj, elems[j]);
      std::vector<QuotientTerm> quot;
      ModVec rem = reduce(field, order, std::move(s), reducers, &quot);
      if (!rem.empty()) throw InternalError("Schreyer step: S-vector does not reduce to zero");
      ModVec syz;
      syz.reserve(quot.size() + 2);
      syz.push_back({cands[a].m, static_cast<std::uint32_t>(i), ci});
      syz.push_back({mj, static_cast<std::uint32_t>(j), field.neg(cj)});
      for (const auto& q : quot) syz.push_back({q.m, q.reducer, field.neg(q.c)});
      sort_vec(field, next_order, syz);
      if (syz.empty()) throw InternalError("Schreyer step produced a zero syzygy");
      out.push_back(std::move(syz));
    }
  }
  return out;
}

}  // namespace detail



// --- Buchberger ---

namespace {

struct Pair {
  int degree;
  std::uint32_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  bool operator<(const Pair& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

struct Element {
  ModVec v;
  ModVec rep;
  bool active = true;
};

class Engine {
public:
  Engine(const RingPtr& ring, const FreeModuleShape& shape, const ModuleOrder& order, const GbOptions& opt)
      : ring_(ring), field_(ring->field()), shape_(shape), order_(order), opt_(opt),
        rep_order_(ModuleOrder::term_over_position(ring->order())) {}

  int term_degree(const ModTerm& t) const { return ring_->degree(t.m) + shape_.twists[t.comp]; }

  // Returns true when f contributed a new basis element.
  bool process(ModVec f, ModVec rep, const std::string& label) {
    std::vector<detail::QuotientTerm> quot;
    ModVec r = detail::reduce(field_, order_, std::move(f), active_, opt_.track_representation ? &quot : nullptr);
    if (opt_.track_representation)
      for (const auto& q : quot) rep = detail::axpy(field_, rep_order_, rep, field_.neg(q.c), q.m, *active_rep_[q.reducer]);
    if (r.empty()) {
      ++stats_.zero_reductions;
      if (opt_.record_trace) trace_.push_back(label + " -> 0");
      return false;
    }
    Coeff inv = field_.inv(r.front().c);
    for (auto& t : r) t.c = field_.mul(t.c, inv);
    for (auto& t : rep) t.c = field_.mul(t.c, inv);
    std::uint32_t h = static_cast<std::uint32_t>(elems_.size());
    if (opt_.record_trace)
      trace_.push_back(label + " -> g" + std::to_string(h) + " (degree " + std::to_string(term_degree(r.front())) +
                       ", " + std::to_string(r.size()) + " terms)");
    elems_.push_back({std::move(r), std::move(rep), true});
    update(h);
    return true;
  }

  void run(const std::vector<ModVec>& inputs, const std::vector<int>& input_degrees) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < inputs.size(); ++k)
      if (!inputs[k].empty()) idx.push_back(k);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return input_degrees[a] < input_degrees[b]; });
    std::size_t next = 0;
    const int cap = ring_->config().degree_cap;
    while (next < idx.size() || !pairs_.empty()) {
      int d_in = next < idx.size() ? input_degrees[idx[next]] : INT_MAX;
      int d_pair = pairs_.empty() ? INT_MAX : pairs_.begin()->degree;
      int d = std::min(d_in, d_pair);
      if (d > cap)
        throw ComputationLimit("Gröbner basis computation exceeded degree cap " + std::to_string(cap));
      stats_.max_degree = std::max(stats_.max_degree, d);
      if (d_in < d_pair) {
        std::size_t k = idx[next++];
        ModVec rep;
        if (opt_.track_representation) rep.push_back({Monomial(), static_cast<std::uint32_t>(k), 1});
        if (process(inputs[k], std::move(rep), "input " + std::to_string(k))) essential_.push_back(k);
      } else {
        Pair p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        ++stats_.pairs_reduced;
        const Element& gi = elems_[p.i];
        const Element& gj = elems_[p.j];
        Monomial mi = p.lcm / gi.v.front().m;
        Monomial mj = p.lcm / gj.v.front().m;
        Coeff minus_one = field_.neg(1);
        ModVec s = detail::axpy(field_, order_, ModVec{}, 1, mi, gi.v);
        s = detail::axpy(field_, order_, s, minus_one, mj, gj.v);
        ModVec rep;
        if (opt_.track_representation) {
          rep = detail::axpy(field_, rep_order_, ModVec{}, 1, mi, gi.rep);
          rep = detail::axpy(field_, rep_order_, rep, minus_one, mj, gj.rep);
        }
        process(std::move(s), std::move(rep),
                "pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") degree " + std::to_string(p.degree));
      }
    }
  }

  std::vector<Element> elems_;
  GbStats stats_;
  std::vector<std::string> trace_;
  std::vector<std::size_t> essential_;

private:
  void rebuild_active() {
    active_.clear();
    active_rep_.clear();
    for (auto& e : elems_)
      if (e.active) {
        active_.push_back(&e.v);
        active_rep_.push_back(&e.rep);
      }
  }

  void update(std::uint32_t h) {
    const ModTerm lh = elems_[h].v.front();
    const bool rank_one = shape_.rank() == 1;
    struct Candidate {
      Pair p;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (std::uint32_t i = 0; i < h; ++i) {
      if (!elems_[i].active) continue;
      const ModTerm& li = elems_[i].v.front();
      if (li.comp != lh.comp) continue;
      Monomial l = li.m.lcm(lh.m);
      Pair p{ring_->degree(l) + shape_.twists[lh.comp], i, h, l, lh.comp};
      cands.push_back({p, rank_one && li.m.coprime(lh.m)});
    }
    stats_.pairs_considered += cands.size();
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = cands[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (cands[b].p.lcm.divides(cands[a].p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].p.lcm.divides(cands[a].p.lcm)) keep = false;
      }
      if (keep) kept.push_back(cands[a]);
    }
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      bool drop = false;
      if (p.comp == lh.comp && lh.m.divides(p.lcm)) {
        Monomial li = elems_[p.i].v.front().m, lj = elems_[p.j].v.front().m;
        drop = !(li.lcm(lh.m) == p.lcm) && !(lj.lcm(lh.m) == p.lcm);
      }
      it = drop ? pairs_.erase(it) : std::next(it);
    }
    for (const auto& c : kept)
      if (!c.coprime) pairs_.insert(c.p);
    for (std::uint32_t i = 0; i < h; ++i) {
      if (!elems_[i].active) continue;
      const ModTerm& li = elems_[i].v.front();
      if (li.comp == lh.comp && lh.m.divides(li.m)) elems_[i].active = false;
    }
    rebuild_active();
  }

  const RingPtr& ring_;
  const PrimeField& field_;
  const FreeModuleShape& shape_;
  const ModuleOrder& order_;
  const GbOptions& opt_;
  ModuleOrder rep_order_;
  std::set<Pair> pairs_;
  std::vector<const ModVec*> active_;
  std::vector<const ModVec*> active_rep_;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const FreeModuleShape& shape, const std::vector<ModuleElement>& gens,
                         const ModuleOrder& order, const GbOptions& options) {
  if (!ring) throw PreconditionError("buchberger: no ring");
  if (shape.rank() < 1) throw PreconditionError("buchberger: free module of rank zero");
  std::vector<ModVec> inputs;
  std::vector<int> degrees;
  for (const auto& g : gens) {
    if (g.rank() != shape.rank()) throw ContextMismatch("generator rank does not match the free module");
    for (const auto& c : g.components)
      if (c.ring()) require_same_ring(c.ring(), ring);
    auto d = g.homogeneous_degree(shape);
    if (!d) throw PreconditionError("buchberger: inhomogeneous generator " + g.to_string());
    inputs.push_back(detail::to_vec(g, order));
    degrees.push_back(*d);
  }

  Engine engine(ring, shape, order, options);
  engine.run(inputs, degrees);

  // Minimal basis: active elements; then interreduce.
  const auto& field = ring->field();
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < engine.elems_.size(); ++k)
    if (engine.elems_[k].active) live.push_back(k);
  std::sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(engine.elems_[a].v.front(), engine.elems_[b].v.front()) < 0;
  });
  std::vector<ModVec> vecs, reps;
  for (std::size_t k : live) {
    vecs.push_back(engine.elems_[k].v);
    reps.push_back(engine.elems_[k].rep);
  }
  ModuleOrder rep_order = ModuleOrder::term_over_position(ring->order());
  for (std::size_t a = 0; a < vecs.size(); ++a) {
    std::vector<const ModVec*> others;
    std::vector<std::size_t> other_idx;
    for (std::size_t b = 0; b < vecs.size(); ++b)
      if (b != a) {
        others.push_back(&vecs[b]);
        other_idx.push_back(b);
      }
    std::vector<detail::QuotientTerm> quot;
    ModVec r = detail::reduce(field, order, vecs[a], others, options.track_representation ? &quot : nullptr);
    if (r.empty() || !(r.front().m == vecs[a].front().m) || r.front().comp != vecs[a].front().comp)
      throw InternalError("interreduction changed a leading term");
    if (options.track_representation)
      for (const auto& q : quot)
        reps[a] = detail::axpy(field, rep_order, reps[a], field.neg(q.c), q.m, reps[other_idx[q.reducer]]);
    vecs[a] = std::move(r);
  }

  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.shape_ = shape;
  gb.order_ = order;
  gb.reduced_ = true;
  gb.elements_ = std::move(vecs);
  gb.stats_ = engine.stats_;
  gb.trace_ = std::move(engine.trace_);
  std::sort(engine.essential_.begin(), engine.essential_.end());
  gb.essential_inputs_ = std::move(engine.essential_);
  if (options.track_representation) {
    int s = static_cast<int>(gens.size());
    for (const auto& r : reps) gb.representation_.push_back(detail::from_vec(ring, s, r));
  }
  return gb;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order, const GbOptions& options) {
  if (gens.empty() || !gens.front().ring()) throw PreconditionError("buchberger: need generators with a ring");
  const RingPtr& ring = gens.front().ring();
  std::vector<ModuleElement> elems;
  for (const auto& g : gens) elems.push_back(ModuleElement::from_polynomial(g));
  return buchberger(ring, FreeModuleShape::free(1), elems, ModuleOrder::position_over_term(order), options);
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<ModuleElement> elems;
  for (const auto& g : gens) elems.push_back(ModuleElement::from_polynomial(g));
  return buchberger(ring, FreeModuleShape::free(1), elems, ModuleOrder::position_over_term(ring->order()));
}

// --- GroebnerBasis ---

bool GroebnerBasis::is_unit_ideal() const {
  if (shape_.rank() != 1) return false;
  return std::any_of(elements_.begin(), elements_.end(),
                     [](const ModVec& v) { return v.front().m.is_one(); });
}

std::vector<ModuleElement> GroebnerBasis::generators() const {
  std::vector<ModuleElement> out;
  for (const auto& v : elements_) out.push_back(detail::from_vec(ring_, shape_.rank(), v));
  return out;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (shape_.rank() != 1) throw PreconditionError("polynomials(): basis is not an ideal basis");
  std::vector<Polynomial> out;
  for (const auto& v : elements_) out.push_back(detail::from_vec(ring_, 1, v).components[0]);
  return out;
}

ModuleElement GroebnerBasis::normal_form(const ModuleElement& f) const {
  if (f.rank() != shape_.rank()) throw ContextMismatch("normal_form: rank mismatch");
  for (const auto& c : f.components)
    if (c.ring()) require_same_ring(c.ring(), ring_);
  std::vector<const ModVec*> reducers;
  for (const auto& e : elements_) reducers.push_back(&e);
  ModVec r = detail::reduce(ring_->field(), order_, detail::to_vec(f, order_), reducers, nullptr);
  return detail::from_vec(ring_, shape_.rank(), r);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (shape_.rank() != 1) throw ContextMismatch("normal_form: basis is not an ideal basis");
  return normal_form(ModuleElement::from_polynomial(f)).components[0];
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& v : elements_) out.push_back(v.front().m);
  return out;
}

std::int64_t GroebnerBasis::count_standard_monomials(int degree) const {
  std::int64_t count = 0;
  for (int k = 0; k < shape_.rank(); ++k) {
    int e = degree - shape_.twists[k];
    if (e < 0) continue;
    std::vector<Monomial> leads;
    for (const auto& v : elements_)
      if (v.front().comp == static_cast<std::uint32_t>(k)) leads.push_back(v.front().m);
    for (Monomial m : monomials_of_degree(*ring_, e)) {
      bool divisible = std::any_of(leads.begin(), leads.end(), [&](Monomial l) { return l.divides(m); });
      if (!divisible) ++count;
    }
  }
  return count;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!(a.shape_ == b.shape_) || a.elements_.size() != b.elements_.size()) return false;
  if (!a.ring_ || !b.ring_ || !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t k = 0; k < a.elements_.size(); ++k) {
    const auto& x = a.elements_[k];
    const auto& y = b.elements_[k];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (!(x[t].m == y[t].m) || x[t].comp != y[t].comp || x[t].c != y[t].c) return false;
  }
  return true;
}

Division divide(const ModuleElement& f, const GroebnerBasis& basis) {
  std::vector<const ModVec*> reducers;
  for (const auto& e : basis.vectors()) reducers.push_back(&e);
  std::vector<detail::QuotientTerm> quot;
  const RingPtr& ring = basis.ring();
  ModVec r = detail::reduce(ring->field(), basis.order(), detail::to_vec(f, basis.order()), reducers, &quot);
  std::vector<std::vector<Term>> q(reducers.size());
  for (const auto& t : quot) q[t.reducer].push_back({t.m, t.c});
  Division out;
  out.remainder = detail::from_vec(ring, basis.shape().rank(), r);
  for (auto& terms : q) out.quotients.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return out;
}

// --- syzygies ---

namespace {

ModuleElement combine(const RingPtr& ring, int rank, const std::vector<Polynomial>& coeffs,
                      const std::vector<ModuleElement>& vectors) {
  ModuleElement out = ModuleElement::zero(ring, rank);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (int c = 0; c < rank; ++c)
      if (!vectors[k].components[c].is_zero()) out.components[c] = out.components[c] + coeffs[k] * vectors[k].components[c];
  }
  return out;
}

}  // namespace

std::vector<ModuleElement> minimal_generators(const RingPtr& ring, const FreeModuleShape& shape,
                                              const std::vector<ModuleElement>& gens) {
  std::vector<ModuleElement> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  GroebnerBasis gb = buchberger(ring, shape, nonzero, ModuleOrder::position_over_term(ring->order()));
  std::vector<ModuleElement> kept;
  for (std::size_t k : gb.essential_inputs()) kept.push_back(nonzero[k]);
  return kept;
}

std::vector<ModuleElement> syzygy_generators(const RingPtr& ring, const FreeModuleShape& shape,
                                             const std::vector<ModuleElement>& gens) {
  const auto& field = ring->field();
  const int s = static_cast<int>(gens.size());
  std::vector<int> degrees;
  for (const auto& g : gens) {
    auto d = g.homogeneous_degree(shape);
    if (!d) throw PreconditionError("syzygy_generators: inhomogeneous input");
    degrees.push_back(*d);
  }
  FreeModuleShape syz_shape(degrees);
  std::vector<ModuleElement> candidates;

  auto unit_vector = [&](int i) {
    ModuleElement e = ModuleElement::zero(ring, s);
    e.components[i] = Polynomial::constant(ring, 1);
    return e;
  };

  bool any_nonzero = std::any_of(gens.begin(), gens.end(), [](const ModuleElement& g) { return !g.is_zero(); });
  if (any_nonzero) {
    ModuleOrder order = ModuleOrder::position_over_term(ring->order());
    GbOptions opt;
    opt.track_representation = true;
    GroebnerBasis gb = buchberger(ring, shape, gens, order, opt);
    const auto& reps = gb.representation();

    std::vector<ModVec> elems = gb.vectors();
    std::vector<std::size_t> perm = detail::sort_for_schreyer(elems);
    std::vector<ModTerm> leads;
    for (const auto& e : elems) leads.push_back(e.front());
    ModuleOrder next = ModuleOrder::schreyer(order, leads);
    for (const ModVec& sigma : detail::schreyer_syzygies(field, order, elems, next)) {
      ModuleElement se = detail::from_vec(ring, static_cast<int>(elems.size()), sigma);
      std::vector<Polynomial> coeffs(gb.size(), Polynomial(ring));
      for (std::size_t k = 0; k < elems.size(); ++k) coeffs[perm[k]] = se.components[k];
      candidates.push_back(combine(ring, s, coeffs, reps));
    }
    for (int i = 0; i < s; ++i) {
      Division div = divide(gens[i], gb);
      if (!div.remainder.is_zero()) throw InternalError("generator not in its own Gröbner basis span");
      ModuleElement col = combine(ring, s, div.quotients, reps);
      ModuleElement e = unit_vector(i);
      for (int c = 0; c < s; ++c) e.components[c] = e.components[c] - col.components[c];
      candidates.push_back(std::move(e));
    }
  } else {
    for (int i = 0; i < s; ++i) candidates.push_back(unit_vector(i));
  }

  for (const auto& syz : candidates) {
    ModuleElement total = ModuleElement::zero(ring, shape.rank());
    for (int k = 0; k < s; ++k)
      for (int c = 0; c < shape.rank(); ++c)
        total.components[c] = total.components[c] + syz.components[k] * gens[k].components[c];
    if (!total.is_zero()) throw InternalError("computed syzygy does not annihilate the generators");
  }
  return minimal_generators(ring, syz_shape, candidates);
}

std::vector<ModuleElement> syzygy_generators(const std::vector<Polynomial>& gens) {
  if (gens.empty() || !gens.front().ring()) throw PreconditionError("syzygy_generators: empty input");
  const RingPtr& ring = gens.front().ring();
  std::vector<ModuleElement> elems;
  for (const auto& g : gens) elems.push_back(ModuleElement::from_polynomial(g));
  return syzygy_generators(ring, FreeModuleShape::free(1), elems);
}

}  // namespace condlab
