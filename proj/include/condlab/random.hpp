#ifndef CONDLAB_RANDOM_HPP
#define CONDLAB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "condlab/ring.hpp"

namespace condlab {

/// Seeded source for every "generic" choice. Draws use the raw 64-bit
/// output reduced mod p so results are identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  Coeff scalar(const PrimeField& f) { return static_cast<Coeff>(engine_() % f.characteristic()); }
  Coeff nonzero_scalar(const PrimeField& f) {
    return static_cast<Coeff>(1 + engine_() % (f.characteristic() - 1));
  }

  /// Dense form with independent uniform coefficients.
  Polynomial form(const RingPtr& ring, int degree) {
    std::vector<Term> terms;
    for (Monomial m : monomials_of_degree(*ring, degree)) terms.push_back({m, scalar(ring->field())});
    return Polynomial::from_terms(ring, std::move(terms));
  }

  /// Seed for a derived stream (used when a construction retries).
  std::uint64_t derive() { return engine_() ^ 0x9e3779b97f4a7c15ULL; }

private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace condlab

#endif
