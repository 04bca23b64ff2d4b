#ifndef CONDLAB_GROEBNER_HPP
#define CONDLAB_GROEBNER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "condlab/ring.hpp"

namespace condlab {

/// Graded free module S(-t_0) + ... + S(-t_{r-1}).
struct FreeModuleShape {
  std::vector<int> twists;

  FreeModuleShape() = default;
  explicit FreeModuleShape(std::vector<int> t) : twists(std::move(t)) {}
  static FreeModuleShape free(int rank) { return FreeModuleShape(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(twists.size()); }
  friend bool operator==(const FreeModuleShape&, const FreeModuleShape&) = default;
};

/// Element of a free module; one polynomial per basis vector.
struct ModuleElement {
  std::vector<Polynomial> components;

  ModuleElement() = default;
  explicit ModuleElement(std::vector<Polynomial> c) : components(std::move(c)) {}
  static ModuleElement zero(const RingPtr& ring, int rank);
  static ModuleElement from_polynomial(const Polynomial& f) { return ModuleElement({f}); }

  int rank() const { return static_cast<int>(components.size()); }
  bool is_zero() const;
  /// Degree deg(c_k) + twist_k shared by all nonzero terms, or nullopt.
  std::optional<int> homogeneous_degree(const FreeModuleShape& shape) const;
  std::string to_string() const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

/// Module term m * e_comp with coefficient c.
struct ModTerm {
  Monomial m;
  std::uint32_t comp;
  Coeff c;
};
/// Sparse module vector sorted in descending order of some ModuleOrder.
using ModVec = std::vector<ModTerm>;

struct SchreyerFrame;

/// Order on module monomials m * e_k. Position-over-term ranks e_0 highest;
/// term-over-position compares monomials first. A Schreyer order compares
/// m * e_j through the image m * lead(g_j) one level down, breaking ties in
/// favour of the smaller index.
class ModuleOrder {
public:
  enum class Kind { PositionOverTerm, TermOverPosition, Schreyer };

  ModuleOrder() : ModuleOrder(Kind::PositionOverTerm, MonomialOrder()) {}
  static ModuleOrder position_over_term(MonomialOrder order) {
    return ModuleOrder(Kind::PositionOverTerm, order);
  }
  static ModuleOrder term_over_position(MonomialOrder order) {
    return ModuleOrder(Kind::TermOverPosition, order);
  }
  /// Induced order on the free module whose j-th basis vector maps to an
  /// element with leading term `leads[j]` (in `lower`'s order).
  static ModuleOrder schreyer(const ModuleOrder& lower, const std::vector<ModTerm>& leads);

  Kind kind() const { return kind_; }
  const MonomialOrder& monomial_order() const { return mono_; }
  /// Number of Schreyer levels above the base order.
  int level() const;

  int compare(Monomial a, std::uint32_t ca, Monomial b, std::uint32_t cb) const;
  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.m, a.comp, b.m, b.comp); }

private:
  ModuleOrder(Kind kind, MonomialOrder mono) : kind_(kind), mono_(mono) {}
  int base_compare(Monomial a, std::uint32_t ca, Monomial b, std::uint32_t cb) const;

  Kind kind_;
  MonomialOrder mono_;
  std::shared_ptr<const SchreyerFrame> frame_;
};

struct SchreyerFrame {
  ModuleOrder base;
  std::vector<Monomial> flat;                    // lead monomial pushed down to level 0
  std::vector<std::uint32_t> base_comp;          // level-0 component of that lead
  std::vector<std::vector<std::uint32_t>> chain; // basis indices at levels 1..L
  int level = 0;
};

struct GbOptions {
  /// Track each basis element as a combination of the input generators.
  bool track_representation = false;
  /// Record every S-pair reduction for debugging dumps.
  bool record_trace = false;
};

struct GbStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  int max_degree = 0;
};

/// Reduced Gröbner basis of a graded submodule of a free module.
class GroebnerBasis {
public:
  GroebnerBasis() = default;

  const RingPtr& ring() const { return ring_; }
  const FreeModuleShape& shape() const { return shape_; }
  const ModuleOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit_ideal() const;

  /// Elements sorted by ascending leading term.
  std::vector<ModuleElement> generators() const;
  /// Rank-one convenience.
  std::vector<Polynomial> polynomials() const;
  const std::vector<ModVec>& vectors() const { return elements_; }
  /// representation()[k] expresses element k in the input generators
  /// (only with GbOptions::track_representation).
  const std::vector<ModuleElement>& representation() const { return representation_; }
  const GbStats& stats() const { return stats_; }
  const std::vector<std::string>& trace() const { return trace_; }
  /// Indices of the inputs that were not reducible when they were reached.
  /// Inputs of degree e are processed after all S-pairs of degree e, so
  /// these form a minimal generating subset of the input list.
  const std::vector<std::size_t>& essential_inputs() const { return essential_inputs_; }

  ModuleElement normal_form(const ModuleElement& f) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const ModuleElement& f) const { return normal_form(f).is_zero(); }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Leading monomials (rank one) in ascending order.
  std::vector<Monomial> leading_monomials() const;
  /// Standard monomials of degree e (counted per component, twists applied).
  std::int64_t count_standard_monomials(int degree) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

private:
  friend GroebnerBasis buchberger(const RingPtr&, const FreeModuleShape&,
                                  const std::vector<ModuleElement>&, const ModuleOrder&,
                                  const GbOptions&);
  RingPtr ring_;
  FreeModuleShape shape_;
  ModuleOrder order_;
  bool reduced_ = false;
  std::vector<ModVec> elements_;
  std::vector<ModuleElement> representation_;
  GbStats stats_;
  std::vector<std::string> trace_;
  std::vector<std::size_t> essential_inputs_;
};

/// Normal selection strategy with Gebauer-Möller pair elimination; input
/// must be homogeneous. Aborts beyond the ring's degree cap. Ties in degree
/// go to S-pairs first, then inputs, then pairs by (i, j).
GroebnerBasis buchberger(const RingPtr& ring, const FreeModuleShape& shape,
                         const std::vector<ModuleElement>& gens, const ModuleOrder& order,
                         const GbOptions& options = {});
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GbOptions& options = {});
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Normal form against an arbitrary generator list, with the quotients
/// (quotients[k] multiplies reducers[k]); reducers need not form a basis.
struct Division {
  ModuleElement remainder;
  std::vector<Polynomial> quotients;
};
Division divide(const ModuleElement& f, const GroebnerBasis& basis);

/// Generators of the syzygy module of homogeneous `gens`, living in the
/// free module with twists deg(gens[k]). The result is a minimal
/// generating set; each element satisfies sum s_k gens[k] = 0.
std::vector<ModuleElement> syzygy_generators(const RingPtr& ring, const FreeModuleShape& shape,
                                             const std::vector<ModuleElement>& gens);
std::vector<ModuleElement> syzygy_generators(const std::vector<Polynomial>& gens);

/// Minimal homogeneous generating subset (see essential_inputs()).
std::vector<ModuleElement> minimal_generators(const RingPtr& ring, const FreeModuleShape& shape,
                                              const std::vector<ModuleElement>& gens);

// Internal conversions shared with the resolution code.
namespace detail {
ModVec to_vec(const ModuleElement& f, const ModuleOrder& order);
ModuleElement from_vec(const RingPtr& ring, int rank, const ModVec& v);
/// v := v + c * m * g (all sorted by order).
ModVec axpy(const PrimeField& field, const ModuleOrder& order, const ModVec& v, Coeff c, Monomial m,
            const ModVec& g);
void sort_vec(const PrimeField& field, const ModuleOrder& order, ModVec& v);

struct QuotientTerm {
  std::uint32_t reducer;
  Monomial m;
  Coeff c;
};
/// Full reduction of f by `reducers`; subtracted multiples are appended to
/// `quotients` when non-null.
ModVec reduce(const PrimeField& field, const ModuleOrder& order, ModVec f,
              const std::vector<const ModVec*>& reducers, std::vector<QuotientTerm>* quotients);

/// One Schreyer step: given a Gröbner basis `elems` (under `order`) whose
/// leads are sorted by component then descending lex, return generators of
/// their syzygy module that form a Gröbner basis for `next_order`
/// (= ModuleOrder::schreyer(order, leads)). Pairs whose lead is divisible
/// by another pair's lead are skipped.
std::vector<ModVec> schreyer_syzygies(const PrimeField& field, const ModuleOrder& order,
                                      const std::vector<ModVec>& elems, const ModuleOrder& next_order);

/// Sorts so that within each lead component the lead monomials descend in
/// lex order; returns the permutation applied.
std::vector<std::size_t> sort_for_schreyer(std::vector<ModVec>& elems);
}  // namespace detail

}  // namespace condlab

#endif
