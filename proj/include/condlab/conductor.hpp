#ifndef CONDLAB_CONDUCTOR_HPP
#define CONDLAB_CONDUCTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "condlab/homology.hpp"
#include "condlab/ideal.hpp"
#include "condlab/random.hpp"
#include "condlab/report.hpp"

namespace condlab {

enum class CurveOrigin { Explicit, Implicitized, Determinantal };
std::string to_string(CurveOrigin origin);

struct CurveComponent {
  Polynomial form;
  int degree = 0;
  /// Conductor of this component when it is neither smooth nor nodal.
  std::optional<Ideal> conductor_hint;
};

/// A reduced plane curve given as a product of pairwise coprime squarefree
/// components. The component list is trusted as the decomposition; it is
/// never recomputed by factoring.
class CurveSpec {
public:
  CurveSpec() = default;
  /// Checks squarefreeness of each component and pairwise coprimality.
  CurveSpec(std::vector<CurveComponent> components, CurveOrigin origin = CurveOrigin::Explicit,
            std::uint64_t seed = 0);
  static CurveSpec from_forms(const std::vector<Polynomial>& forms, CurveOrigin origin = CurveOrigin::Explicit,
                              std::uint64_t seed = 0);

  const RingPtr& ring() const { return components_.front().form.ring(); }
  const std::vector<CurveComponent>& components() const { return components_; }
  int num_components() const { return static_cast<int>(components_.size()); }
  int degree() const { return degree_; }
  CurveOrigin origin() const { return origin_; }
  std::uint64_t seed() const { return seed_; }

  Polynomial total_form() const;
  /// G_i, the product of the other components (1 when there is only one).
  Polynomial cofactor(int i) const;
  /// The curve with component i removed.
  CurveSpec without(int i) const;
  CurveSpec only(int i) const;
  /// Same curve over another prime (coefficients reinterpreted).
  CurveSpec with_prime(std::uint32_t prime) const;

  std::string to_string() const;

private:
  std::vector<CurveComponent> components_;
  CurveOrigin origin_ = CurveOrigin::Explicit;
  std::uint64_t seed_ = 0;
  int degree_ = 0;
};

enum class ConductorRoute { JacobianSaturation, ComponentProduct, Hint };
std::string to_string(ConductorRoute route);

struct ConductorReport {
  Ideal conductor;
  int degree = 0;                      // d
  std::int64_t delta = 0;              // length of the conductor scheme
  int regularity = 0;                  // reg of the conductor as an ideal
  std::int64_t degree_d_syzygies = 0;  // beta_{1,d}
  int h0_jump_degree = -1;             // d - 1 - reg; -1 for a smooth curve
  ConductorRoute route = ConductorRoute::JacobianSaturation;
  BettiTable betti;                    // ideal-shifted table
  std::uint64_t seed = 0;
  int certificate_attempts = 0;

  bool smooth() const { return conductor.is_unit(); }
};

/// Fills delta, regularity and Betti data for a saturated conductor ideal.
ConductorReport describe_conductor(const Ideal& conductor, int degree, ConductorRoute route);

/// saturate(Jacobian) certified as a reduced point scheme. Throws
/// CertificateFailure naming the obstruction otherwise.
ConductorReport conductor_nodal(const Polynomial& f, std::uint64_t seed = 1);
/// Sum of C'_i * (G_i), saturated. Components without a hint must be
/// smooth or nodal.
ConductorReport conductor_from_components(const CurveSpec& spec, std::uint64_t seed = 1);
/// Sum of J_i * (G_i), saturated, with J_i the reduced singular set of
/// each component (hint, or certified nodal).
Ideal singular_set_ideal_nodescusps(const CurveSpec& spec, std::uint64_t seed = 1);
/// Saturated ideal of the points where two distinct components meet.
Ideal intersection_points_ideal(const CurveSpec& spec);

// --- validators ---

VerdictReport verify_regularity_theorem(const ConductorReport& report, const CurveSpec& spec,
                                        const std::vector<Ideal>& sandwich = {});
/// Any set of singular points: reg <= d - 1, with the syzygy count when the
/// set contains every intersection point.
VerdictReport kloosterman_check(const CurveSpec& spec, const Ideal& gamma, bool contains_intersections);
VerdictReport adjoint_completeness_check(const ConductorReport& report, const CurveSpec& spec);
VerdictReport jacobian_syzygy_analysis(const CurveSpec& spec, std::uint64_t seed = 1);
/// reg S/I for the unmixed part I of (f1, f2, f3), with f1, f2 regular.
VerdictReport linkage_regularity(const std::vector<Polynomial>& forms);
/// The same for the partials of a curve after a seeded generic change of generators.
VerdictReport jacobian_linkage_regularity(const Polynomial& f, std::uint64_t seed = 1);
VerdictReport conductor_sequence_check(const CurveSpec& spec, int i, std::uint64_t seed = 1);
VerdictReport partial_normalization_report(const CurveSpec& spec, const ConductorReport* conductor = nullptr);
/// conductor_from_components against the saturated Jacobian ideal of the product.
VerdictReport two_route_check(const CurveSpec& spec, std::uint64_t seed = 1);
/// Singular-set ideal for nodes and cusps: reduced, with the expected number of points.
VerdictReport singular_set_check(const CurveSpec& spec, std::uint64_t seed = 1);
/// No reduced form of degree <= reg I lies in the symbolic square.
VerdictReport symbolic_square_check(const Ideal& points, std::uint64_t seed = 1, int samples = 4);

// --- constructions ---

/// Generic linear change of coordinates applied to a form.
Polynomial random_linear_change(const Polynomial& f, Rng& rng);
/// Random element of I_e (uniform combination of a spanning set).
Polynomial random_element(const Ideal& I, int degree, Rng& rng);
/// x0 x1 x2 + x0^3 + x1^3 moved by a random linear change.
Polynomial random_nodal_cubic(const RingPtr& ring, Rng& rng);

/// Image of a generic degree-d map P^1 -> P^2, certified nodal with
/// delta = C(d-1, 2).
CurveSpec rational_curve_implicitize(const RingPtr& ring, int d, std::uint64_t seed, int retry_budget = 5,
                                    ConductorReport* report = nullptr);

struct DeterminantalPoints {
  Ideal ideal;
  FreeResolution resolution;
  BettiTable betti;  // ideal-shifted
  std::int64_t delta = 0;
  int regularity = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
};
/// Maximal minors of an (m+1) x m matrix: first column of degree 2m-1,
/// quadrics elsewhere. Certified reduced with the expected invariants.
DeterminantalPoints determinantal_points(const RingPtr& ring, int m, std::uint64_t seed, int retry_budget = 5);

struct NodalCurve {
  CurveSpec spec;
  ConductorReport report;
  int attempts = 0;
};
/// Random member of the degree-D part of the symbolic square whose
/// conductor is exactly the given points.
std::optional<NodalCurve> nodal_curve_through(const Ideal& points, int degree, std::uint64_t seed,
                                              int retry_budget = 10, const Ideal* square = nullptr);

/// Random unions of lines, conics and nodal cubics with total degree <= max_degree.
std::vector<CurveSpec> reducible_corpus(const RingPtr& ring, int count, std::uint64_t seed, int max_degree = 7);
/// Certified irreducible nodal curves (nodal cubics, rational quartics and quintics, a 4-nodal sextic).
std::vector<CurveSpec> irreducible_corpus(const RingPtr& ring, std::uint64_t seed);

}  // namespace condlab

#endif
