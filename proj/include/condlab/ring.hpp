#ifndef CONDLAB_RING_HPP
#define CONDLAB_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "condlab/error.hpp"

namespace condlab {

using Coeff = std::uint32_t;

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::uint64_t v) const { return static_cast<Coeff>(v % p_); }
  Coeff from_signed(std::int64_t v) const;
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exponent vector packed one byte per variable (at most 8 variables,
/// exponents at most 127). The spare high bit of each byte makes
/// divisibility, lcm and overflow checks branch-free.
class Monomial {
public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 127;

  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int index, int exponent = 1);

  std::uint64_t bits() const { return bits_; }
  int exponent(int var) const { return static_cast<int>((bits_ >> (8 * var)) & 0xffU); }
  std::vector<int> exponents(int num_vars) const;
  bool is_one() const { return bits_ == 0; }

  /// Standard (unweighted) total degree.
  int degree() const {
    std::uint64_t t = (bits_ & 0x00ff00ff00ff00ffULL) + ((bits_ >> 8) & 0x00ff00ff00ff00ffULL);
    return static_cast<int>(((t * 0x0001000100010001ULL) >> 48) & 0xffffU);
  }

  bool divides(Monomial other) const {
    return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
  }
  bool coprime(Monomial other) const {
    return (nonzero_mask(bits_) & nonzero_mask(other.bits_)) == 0;
  }
  Monomial lcm(Monomial other) const {
    std::uint64_t mask = ge_mask(bits_, other.bits_);
    return Monomial((bits_ & mask) | (other.bits_ & ~mask));
  }
  Monomial gcd(Monomial other) const {
    std::uint64_t mask = ge_mask(bits_, other.bits_);
    return Monomial((other.bits_ & mask) | (bits_ & ~mask));
  }
  /// Restriction to the variables selected by a byte mask.
  Monomial masked(std::uint64_t byte_mask) const { return Monomial(bits_ & byte_mask); }

  friend Monomial operator*(Monomial a, Monomial b) {
    std::uint64_t s = a.bits_ + b.bits_;
    if (s & kHigh) overflow();
    return Monomial(s);
  }
  /// Exact quotient; b must divide a.
  friend Monomial operator/(Monomial a, Monomial b) { return Monomial(a.bits_ - b.bits_); }

  friend bool operator==(Monomial, Monomial) = default;

  static std::uint64_t var_mask(int first, int count);

private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
  static constexpr std::uint64_t kLow7 = 0x7f7f7f7f7f7f7f7fULL;

  static std::uint64_t nonzero_mask(std::uint64_t x) { return (x + kLow7) & kHigh; }
  // 0xff in every byte where a >= b.
  static std::uint64_t ge_mask(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = ((a | kHigh) - b) & kHigh;
    return (d >> 7) * 0xffU;
  }
  [[noreturn]] static void overflow();

  std::uint64_t bits_ = 0;
};

/// Monomial orders. Grevlex compares weighted degree first; the elimination
/// order compares the first `block` variables (grevlex) before the rest.
class MonomialOrder {
public:
  enum class Kind { Grevlex, Lex, Elimination };

  MonomialOrder() : MonomialOrder(Kind::Grevlex, 0, {}) {}
  static MonomialOrder grevlex(std::span<const int> weights = {});
  static MonomialOrder lex();
  static MonomialOrder elimination(int block, std::span<const int> weights = {});

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  int weighted_degree(Monomial m) const;
  /// Sign of a - b in this order.
  int compare(Monomial a, Monomial b) const;

  std::string name() const;

private:
  MonomialOrder(Kind kind, int block, std::span<const int> weights);
  int grevlex_compare(Monomial a, Monomial b) const;

  Kind kind_;
  int block_;
  bool unit_weights_ = true;
  std::uint8_t weights_[Monomial::kMaxVars] = {1, 1, 1, 1, 1, 1, 1, 1};
  std::uint64_t block_mask_ = 0;
};

/// Resource limits shared by every computation in a ring.
struct EngineConfig {
  int degree_cap = 40;
  int iteration_cap = 50;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// The graded polynomial ring F_p[x_0..x_{n-1}] with optional positive
/// variable weights (used for elimination of parametrizations).
class Ring {
public:
  static RingPtr make(std::uint32_t prime, std::vector<std::string> names,
                      std::vector<int> weights = {}, EngineConfig config = {});
  /// Convenience: n variables named x0..x{n-1}.
  static RingPtr standard(int num_vars, std::uint32_t prime = 32003, EngineConfig config = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_grading() const;
  const EngineConfig& config() const { return config_; }
  const MonomialOrder& order() const { return order_; }

  int var_index(std::string_view name) const;
  int degree(Monomial m) const { return order_.weighted_degree(m); }

  bool same_as(const Ring& other) const;
  RingPtr with_prime(std::uint32_t prime) const;
  RingPtr with_config(EngineConfig config) const;
  /// `ring p=... vars=...[ weights=...]`
  std::string header() const;

private:
  Ring(std::uint32_t prime, std::vector<std::string> names, std::vector<int> weights,
       EngineConfig config);

  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  EngineConfig config_;
  MonomialOrder order_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial m;
  Coeff c;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Immutable polynomial; terms are stored without zero coefficients in
/// descending order of the ring's (weighted) grevlex order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial(RingPtr ring, Monomial m, Coeff c = 1);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that terms are already canonical.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const Term& leading_term() const;
  Coeff coefficient(Monomial m) const;

  /// Largest weighted degree of a term; -1 for zero.
  int degree() const;
  /// Degree when every term has the same weighted degree (zero counts as homogeneous).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }

  Polynomial derivative(int var) const;
  Coeff evaluate(std::span<const Coeff> point) const;
  /// Ring map x_i -> images[i] into the ring of the images.
  Polynomial substitute(const RingPtr& target, std::span<const Polynomial> images) const;

  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(Monomial m, Coeff c = 1) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial product(const RingPtr& ring, std::span<const Polynomial> factors);

/// All monomials of the given weighted degree, in descending ring order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree);

/// `ring p=32003 vars=x0,x1,x2` (optional `weights=w0,w1,...`).
RingPtr parse_ring_header(std::string_view line, EngineConfig config = {});
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace condlab

#endif
