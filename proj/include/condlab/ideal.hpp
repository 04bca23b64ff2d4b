#ifndef CONDLAB_IDEAL_HPP
#define CONDLAB_IDEAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "condlab/groebner.hpp"

namespace condlab {

/// Homogeneous ideal with a lazily computed reduced Gröbner basis
/// (grevlex). Copies share the cache; it is filled at most once.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// (x_0, ..., x_r)
  static Ideal irrelevant(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& groebner_basis() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  /// Equality as ideals (reduced bases coincide).
  friend bool operator==(const Ideal& a, const Ideal& b);

  /// A minimal homogeneous generating set chosen among the generators.
  std::vector<Polynomial> minimal_generators() const;
  Ideal minimalized() const;
  /// Reduced Gröbner basis elements as a new generator list.
  Ideal from_basis() const;

  /// Least degree of a nonzero element; -1 for the zero ideal.
  int initial_degree() const;
  /// dim_K (S/I)_e
  std::int64_t quotient_dimension(int e) const { return groebner_basis().count_standard_monomials(e); }
  /// dim_K I_e
  std::int64_t dimension(int e) const;

  /// Known saturation status with respect to the irrelevant ideal.
  std::optional<bool> saturated_flag() const { return saturated_; }
  Ideal with_saturated_flag(bool s) const;

  std::string to_string() const;

private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::optional<bool> saturated_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Exact intersection via a submodule of S^2 and a position-over-term basis.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const std::vector<Ideal>& ideals);
/// I : f
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
/// I : J, intersected over the generators of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
/// I : x_k and I : x_k^infinity, read off a grevlex basis with x_k last.
Ideal quotient_by_variable(const Ideal& I, int k);
Ideal saturate_by_variable(const Ideal& I, int k);
/// I : (x_0..x_r)^infinity
Ideal saturate(const Ideal& I);
/// I : J^infinity by iterated quotients; aborts after the ring's iteration cap.
Ideal saturate(const Ideal& I, const Ideal& J);
bool is_saturated(const Ideal& I);

/// I ∩ K[keep]: the result lives in a ring with only the kept variables
/// (names and weights carried over). Uses a block elimination order.
Ideal eliminate(const Ideal& I, const std::vector<int>& keep);

/// num_vars - dim, via maximal sets of variables independent modulo the lead ideal.
int codimension(const Ideal& I);

/// The ideal of partial derivatives of f.
Ideal jacobian_ideal(const Polynomial& f);
/// No repeated factor over the algebraic closure: codim((f) + Jacobian) >= 2.
bool is_squarefree(const Polynomial& f);

struct PointsReducedResult {
  bool reduced = false;
  std::int64_t degree = 0;          // length of the scheme
  std::int64_t distinct_points = 0; // distinct projected roots
  int attempts = 0;
  std::uint64_t seed = 0;
};
/// Reducedness of a saturated zero-dimensional scheme in P^2 by projection
/// from a random center onto a line and a univariate square-free test.
PointsReducedResult points_are_reduced(const Ideal& I, std::uint64_t seed = 1, int retry_budget = 5);

/// Ideal of finitely many points of P^2 given by homogeneous coordinates.
Ideal ideal_of_points(const RingPtr& ring, const std::vector<std::vector<Coeff>>& points);

/// saturate(I^2) for a saturated ideal of reduced points in P^2.
Ideal symbolic_square(const Ideal& I, std::uint64_t seed = 1);

}  // namespace condlab

#endif
