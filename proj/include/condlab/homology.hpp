#ifndef CONDLAB_HOMOLOGY_HPP
#define CONDLAB_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "condlab/groebner.hpp"
#include "condlab/report.hpp"

namespace condlab {

/// Homogeneous map source -> target; column b is the image of the b-th
/// basis vector of `source`, an element of `target`.
struct GradedMatrix {
  FreeModuleShape target;
  FreeModuleShape source;
  std::vector<ModuleElement> columns;

  int rows() const { return target.rank(); }
  int cols() const { return source.rank(); }
  const Polynomial& entry(int a, int b) const { return columns[b].components[a]; }
};

/// F_0 <- F_1 <- ... ; maps[i] : F_{i+1} -> F_i.
class FreeResolution {
public:
  RingPtr ring;
  std::vector<FreeModuleShape> modules;
  std::vector<GradedMatrix> maps;
  bool minimal = false;

  /// Largest i with F_i != 0 (-1 for the zero module).
  int length() const;
  /// Every composite maps[i] * maps[i+1] vanishes.
  bool composites_vanish() const;
  /// Number of nonzero constant entries over all maps.
  std::size_t constant_entries() const;
  /// sum_i (-1)^i dim (F_i)_e; needs the standard grading.
  std::int64_t euler_characteristic(int e) const;
  int max_twist() const;
};

/// Resolution of coker(presentation : F_1 -> target) via a Schreyer frame
/// followed by pruning of constant entries.
FreeResolution resolve(const RingPtr& ring, const FreeModuleShape& target,
                       const std::vector<ModuleElement>& presentation, bool minimize = true);
/// Resolution of S/I for the ideal generated by `gens`.
FreeResolution minimal_free_resolution(const RingPtr& ring, const std::vector<Polynomial>& gens);
/// Removes unit entries by change of basis until none remain.
void minimize(FreeResolution& res);

enum class BettiTag { Quotient, Ideal, Module };

class BettiTable {
public:
  BettiTable() = default;
  BettiTable(BettiTag tag, std::map<std::pair<int, int>, std::int64_t> entries)
      : tag_(tag), entries_(std::move(entries)) {}

  BettiTag tag() const { return tag_; }
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  std::int64_t beta(int i, int j) const;
  /// Sum over j of beta(i, j).
  std::int64_t total(int i) const;
  bool empty() const { return entries_.empty(); }
  int max_index() const;

  /// Table of I from the table of S/I (shift the homological index by one).
  BettiTable ideal_table() const;

  /// Rows indexed by j - i, columns by i.
  std::string grid() const;
  /// [{"i":..,"j":..,"beta":..}, ...]
  std::string json() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  BettiTag tag_ = BettiTag::Module;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

BettiTable betti_table(const FreeResolution& res, BettiTag tag = BettiTag::Module);
/// max { j - i : beta_{i,j} != 0 }.
int regularity(const BettiTable& t);

/// Hilbert function of a graded module in the window [0, max_degree],
/// computed from the resolution and from standard monomials; the two must
/// agree. The polynomial is a + b*e (dimension at most one).
struct HilbertData {
  std::map<int, std::int64_t> values;
  std::int64_t hp_slope = 0;
  std::int64_t hp_constant = 0;
  int agreement_degree = 0;

  std::int64_t polynomial(int e) const { return hp_slope * e + hp_constant; }
};

HilbertData hilbert_function(const FreeResolution& res, const GroebnerBasis& gb, int max_degree);
/// Hilbert data of S/I.
HilbertData hilbert_function(const RingPtr& ring, const std::vector<Polynomial>& gens, int max_degree);
/// The constant Hilbert polynomial of a zero-dimensional scheme.
std::int64_t hilbert_polynomial_of_points(const HilbertData& h);
std::int64_t hilbert_polynomial_of_points(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// reg(S/I), the top syzygy degree minus two and the Hilbert agreement
/// degree must coincide for a saturated ideal of points in P^2.
VerdictReport cm_regularity_crosscheck(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Binomial coefficient with the convention C(n, k) = 0 outside 0 <= k <= n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace condlab

#endif
