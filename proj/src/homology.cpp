#include "condlab/homology.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "json.hpp"

namespace condlab {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// --- FreeResolution ---

int FreeResolution::length() const {
  for (int i = static_cast<int>(modules.size()) - 1; i >= 0; --i)
    if (modules[i].rank() > 0) return i;
  return -1;
}

bool FreeResolution::composites_vanish() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const GradedMatrix& a = maps[i];
    const GradedMatrix& b = maps[i + 1];
    for (const auto& col : b.columns) {
      for (int r = 0; r < a.rows(); ++r) {
        Polynomial sum(ring);
        for (int k = 0; k < a.cols(); ++k) {
          if (col.components[k].is_zero() || a.entry(r, k).is_zero()) continue;
          sum = sum + a.entry(r, k) * col.components[k];
        }
        if (!sum.is_zero()) return false;
      }
    }
  }
  return true;
}

std::size_t FreeResolution::constant_entries() const {
  std::size_t count = 0;
  for (const auto& m : maps)
    for (const auto& col : m.columns)
      for (const auto& e : col.components)
        if (!e.is_zero() && e.is_constant()) ++count;
  return count;
}

std::int64_t FreeResolution::euler_characteristic(int e) const {
  if (!ring->standard_grading()) throw PreconditionError("Hilbert sums need the standard grading");
  const int n = ring->num_vars();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    std::int64_t part = 0;
    for (int t : modules[i].twists) part += binomial(e - t + n - 1, n - 1);
    total += (i % 2 == 0) ? part : -part;
  }
  return total;
}

int FreeResolution::max_twist() const {
  int m = INT_MIN;
  for (const auto& f : modules)
    for (int t : f.twists) m = std::max(m, t);
  return m;
}

// --- construction ---

namespace {

FreeModuleShape shape_of(const RingPtr& ring, const FreeModuleShape& lower, const std::vector<ModVec>& elems) {
  std::vector<int> twists;
  for (const auto& v : elems) twists.push_back(ring->degree(v.front().m) + lower.twists[v.front().comp]);
  return FreeModuleShape(std::move(twists));
}

GradedMatrix matrix_of(const RingPtr& ring, const FreeModuleShape& target, const FreeModuleShape& source,
                       const std::vector<ModVec>& elems) {
  GradedMatrix m{target, source, {}};
  for (const auto& v : elems) m.columns.push_back(detail::from_vec(ring, target.rank(), v));
  return m;
}

void erase_row(GradedMatrix& m, int a) {
  for (auto& col : m.columns) col.components.erase(col.components.begin() + a);
  m.target.twists.erase(m.target.twists.begin() + a);
}

void erase_column(GradedMatrix& m, int b) {
  m.columns.erase(m.columns.begin() + b);
  m.source.twists.erase(m.source.twists.begin() + b);
}

bool find_unit(const GradedMatrix& m, int& a, int& b) {
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) {
      const Polynomial& e = m.entry(r, c);
      if (!e.is_zero() && e.is_constant()) {
        a = r;
        b = c;
        return true;
      }
    }
  return false;
}

void prune(FreeResolution& res, std::size_t i, int a, int b) {
  GradedMatrix& m = res.maps[i];
  const PrimeField& field = res.ring->field();
  Coeff uinv = field.inv(m.entry(a, b).leading_term().c);
  const ModuleElement pivot = m.columns[b];
  for (int c = 0; c < m.cols(); ++c) {
    if (c == b || m.entry(a, c).is_zero()) continue;
    Polynomial q = m.entry(a, c).scaled(uinv);
    auto& col = m.columns[c].components;
    for (int r = 0; r < m.rows(); ++r)
      if (!pivot.components[r].is_zero()) col[r] = col[r] - q * pivot.components[r];
  }
  erase_row(m, a);
  erase_column(m, b);
  if (i > 0) erase_column(res.maps[i - 1], a);
  if (i + 1 < res.maps.size()) erase_row(res.maps[i + 1], b);
  res.modules[i].twists.erase(res.modules[i].twists.begin() + a);
  res.modules[i + 1].twists.erase(res.modules[i + 1].twists.begin() + b);
}

void trim(FreeResolution& res) {
  while (res.modules.size() > 1 && res.modules.back().rank() == 0) {
    res.modules.pop_back();
    res.maps.pop_back();
  }
}

}  // namespace

void minimize(FreeResolution& res) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < res.maps.size() && !changed; ++i) {
      int a = 0, b = 0;
      if (find_unit(res.maps[i], a, b)) {
        prune(res, i, a, b);
        changed = true;
      }
    }
  }
  trim(res);
  res.minimal = true;
}

static FreeResolution resolve_impl(const RingPtr& ring, const FreeModuleShape& target,
                            const std::vector<ModuleElement>& presentation, bool do_minimize, GroebnerBasis* gb_out) {
  FreeResolution res;
  res.ring = ring;
  res.modules.push_back(target);
  std::vector<ModuleElement> gens;
  for (const auto& g : presentation)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) {
    res.minimal = true;
    if (gb_out) *gb_out = GroebnerBasis();
    return res;
  }

  const PrimeField& field = ring->field();
  ModuleOrder order = ModuleOrder::position_over_term(ring->order());
  GroebnerBasis gb = buchberger(ring, target, gens, order);
  std::vector<ModVec> elems = gb.vectors();
  if (gb_out) *gb_out = std::move(gb);
  detail::sort_for_schreyer(elems);

  const int cap = ring->config().degree_cap;
  const int max_levels = ring->num_vars() + 2;
  while (!elems.empty()) {
    if (static_cast<int>(res.maps.size()) > max_levels)
      throw InternalError("Schreyer frame longer than the number of variables allows");
    const FreeModuleShape& lower = res.modules.back();
    FreeModuleShape shape = shape_of(ring, lower, elems);
    for (int t : shape.twists)
      if (t > cap) throw ComputationLimit("resolution exceeded degree cap " + std::to_string(cap));
    res.maps.push_back(matrix_of(ring, lower, shape, elems));
    res.modules.push_back(shape);

    std::vector<ModTerm> leads;
    for (const auto& v : elems) leads.push_back(v.front());
    ModuleOrder next = ModuleOrder::schreyer(order, leads);
    std::vector<ModVec> syz = detail::schreyer_syzygies(field, order, elems, next);
    detail::sort_for_schreyer(syz);
    elems = std::move(syz);
    order = std::move(next);
  }
  if (do_minimize) {
    minimize(res);
  } else {
    res.minimal = res.constant_entries() == 0;
  }
  return res;
}

FreeResolution resolve(const RingPtr& ring, const FreeModuleShape& target,
                       const std::vector<ModuleElement>& presentation, bool do_minimize) {
  return resolve_impl(ring, target, presentation, do_minimize, nullptr);
}

FreeResolution minimal_free_resolution(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<ModuleElement> cols;
  for (const auto& g : gens) {
    require_same_ring(g.ring() ? g.ring() : ring, ring);
    if (!g.is_homogeneous()) throw PreconditionError("minimal_free_resolution: inhomogeneous generator");
    cols.push_back(ModuleElement::from_polynomial(g));
  }
  return resolve(ring, FreeModuleShape::free(1), cols);
}

// --- Betti tables ---

std::int64_t BettiTable::beta(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) s += v;
  return s;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

BettiTable BettiTable::ideal_table() const {
  if (tag_ != BettiTag::Quotient) throw PreconditionError("ideal_table needs the table of S/I");
  std::map<std::pair<int, int>, std::int64_t> shifted;
  for (const auto& [key, v] : entries_)
    if (key.first > 0) shifted[{key.first - 1, key.second}] = v;
  return BettiTable(BettiTag::Ideal, std::move(shifted));
}

std::string BettiTable::grid() const {
  if (entries_.empty()) return "(zero module)\n";
  int cols = max_index() + 1;
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [key, v] : entries_) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::vector<std::size_t> width(cols, 1);
  for (int i = 0; i < cols; ++i) {
    width[i] = std::max(width[i], std::to_string(i).size());
    width[i] = std::max(width[i], std::to_string(total(i)).size());
    for (const auto& [key, v] : entries_)
      if (key.first == i) width[i] = std::max(width[i], std::to_string(v).size());
  }
  std::size_t label = std::max<std::size_t>(6, std::to_string(hi).size() + 1);
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  out << std::string(label, ' ');
  for (int i = 0; i < cols; ++i) out << ' ' << pad(std::to_string(i), width[i]);
  out << '\n' << pad("total:", label);
  for (int i = 0; i < cols; ++i) out << ' ' << pad(std::to_string(total(i)), width[i]);
  out << '\n';
  for (int row = lo; row <= hi; ++row) {
    out << pad(std::to_string(row) + ":", label);
    for (int i = 0; i < cols; ++i) {
      std::int64_t v = beta(i, i + row);
      out << ' ' << pad(v ? std::to_string(v) : ".", width[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string BettiTable::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, v] : entries_) arr.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
  return arr.dump();
}

BettiTable betti_table(const FreeResolution& res, BettiTag tag) {
  if (!res.minimal || res.constant_entries() != 0) throw PreconditionError("betti_table needs a minimal resolution");
  std::map<std::pair<int, int>, std::int64_t> entries;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (int t : res.modules[i].twists) ++entries[{static_cast<int>(i), t}];
  if (tag == BettiTag::Ideal) return BettiTable(BettiTag::Quotient, std::move(entries)).ideal_table();
  return BettiTable(tag, std::move(entries));
}

int regularity(const BettiTable& t) {
  if (t.empty()) throw PreconditionError("regularity of an empty Betti table");
  int r = INT_MIN;
  for (const auto& [key, v] : t.entries())
    if (v != 0) r = std::max(r, key.second - key.first);
  return r;
}

// --- Hilbert functions ---

HilbertData hilbert_function(const FreeResolution& res, const GroebnerBasis& gb, int max_degree) {
  HilbertData h;
  const bool have_gb = gb.ring() != nullptr;
  for (int e = 0; e <= max_degree; ++e) {
    std::int64_t from_res = res.euler_characteristic(e);
    if (have_gb) {
      std::int64_t from_count = gb.count_standard_monomials(e);
      if (from_count != from_res)
        throw InternalError("Hilbert function mismatch in degree " + std::to_string(e) + ": resolution gives " +
                            std::to_string(from_res) + ", standard monomials give " + std::to_string(from_count));
    }
    h.values[e] = from_res;
  }
  const int n = res.ring->num_vars();
  int base = std::max(0, res.max_twist());
  std::vector<std::int64_t> v;
  for (int k = 0; k < std::max(n, 3); ++k) v.push_back(res.euler_characteristic(base + k));
  // Higher finite differences must vanish for a polynomial of degree <= 1.
  std::vector<std::int64_t> d = v;
  for (int order = 1; order < static_cast<int>(v.size()); ++order) {
    for (std::size_t k = 0; k + order < v.size(); ++k) d[k] = d[k + 1] - d[k];
    if (order >= 2)
      for (std::size_t k = 0; k + order < v.size(); ++k)
        if (d[k] != 0) throw PreconditionError("Hilbert polynomial has degree above one");
  }
  h.hp_slope = v[1] - v[0];
  h.hp_constant = v[0] - h.hp_slope * base;
  int e0 = base;
  while (e0 > 0 && res.euler_characteristic(e0 - 1) == h.polynomial(e0 - 1)) --e0;
  h.agreement_degree = e0;
  return h;
}

HilbertData hilbert_function(const RingPtr& ring, const std::vector<Polynomial>& gens, int max_degree) {
  std::vector<ModuleElement> cols;
  for (const auto& g : gens) cols.push_back(ModuleElement::from_polynomial(g));
  GroebnerBasis gb;
  FreeResolution res = resolve_impl(ring, FreeModuleShape::free(1), cols, true, &gb);
  return hilbert_function(res, gb, max_degree);
}

std::int64_t hilbert_polynomial_of_points(const HilbertData& h) {
  if (h.hp_slope != 0) throw PreconditionError("not zero-dimensional: Hilbert polynomial is not constant");
  return h.hp_constant;
}

std::int64_t hilbert_polynomial_of_points(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  return hilbert_polynomial_of_points(hilbert_function(ring, gens, 0));
}

VerdictReport cm_regularity_crosscheck(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  if (ring->num_vars() != 3) throw PreconditionError("cm_regularity_crosscheck works in three variables");
  VerdictReport v;
  v.statement_id = "cohen-macaulay";
  v.prime = ring->characteristic();
  FreeResolution res = minimal_free_resolution(ring, gens);
  if (res.length() != 2) throw PreconditionError("ideal is not a saturated ideal of points (projective dimension " +
                                                 std::to_string(res.length()) + ")");
  BettiTable t = betti_table(res, BettiTag::Quotient);
  int m = regularity(t);
  int top = INT_MIN;
  for (int tw : res.modules[2].twists) top = std::max(top, tw);
  HilbertData h = hilbert_function(ring, gens, m + 3);
  std::int64_t delta = hilbert_polynomial_of_points(h);
  if (delta <= 0) throw PreconditionError("ideal does not define a nonempty set of points");
  v.observe("reg_S_mod_I", static_cast<std::int64_t>(m));
  v.observe("degree", delta);
  v.expect("top_syzygy_degree_minus_2", static_cast<std::int64_t>(top - 2), static_cast<std::int64_t>(m));
  v.expect("hilbert_agreement_degree", static_cast<std::int64_t>(h.agreement_degree), static_cast<std::int64_t>(m));
  return v;
}

}  // namespace condlab
