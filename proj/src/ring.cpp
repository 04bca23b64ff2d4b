#include "condlab/ring.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace condlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 31) || !is_prime(p))
    throw PreconditionError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::from_signed(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::int64_t PrimeField::to_signed(Coeff a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

// --- Monomial ---

void Monomial::overflow() {
  throw ComputationLimit("exponent exceeds " + std::to_string(kMaxExponent));
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw PreconditionError("at most 8 variables are supported");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw PreconditionError("negative exponent");
    if (exponents[i] > kMaxExponent) overflow();
    bits |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
  }
  return Monomial(bits);
}

Monomial Monomial::variable(int index, int exponent) {
  if (index < 0 || index >= kMaxVars) throw PreconditionError("variable index out of range");
  if (exponent < 0 || exponent > kMaxExponent) overflow();
  return Monomial(static_cast<std::uint64_t>(exponent) << (8 * index));
}

std::vector<int> Monomial::exponents(int num_vars) const {
  std::vector<int> e(num_vars);
  for (int i = 0; i < num_vars; ++i) e[i] = exponent(i);
  return e;
}

std::uint64_t Monomial::var_mask(int first, int count) {
  std::uint64_t mask = 0;
  for (int i = first; i < first + count; ++i) mask |= 0xffULL << (8 * i);
  return mask;
}

// --- MonomialOrder ---

MonomialOrder::MonomialOrder(Kind kind, int block, std::span<const int> weights)
    : kind_(kind), block_(block) {
  if (weights.size() > static_cast<std::size_t>(Monomial::kMaxVars))
    throw PreconditionError("at most 8 variables are supported");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1 || weights[i] > 255) throw PreconditionError("variable weights must lie in [1,255]");
    weights_[i] = static_cast<std::uint8_t>(weights[i]);
    if (weights[i] != 1) unit_weights_ = false;
  }
  if (kind == Kind::Elimination) block_mask_ = Monomial::var_mask(0, block);
}

MonomialOrder MonomialOrder::grevlex(std::span<const int> weights) {
  return MonomialOrder(Kind::Grevlex, 0, weights);
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex, 0, {}); }

MonomialOrder MonomialOrder::elimination(int block, std::span<const int> weights) {
  if (block < 0 || block > Monomial::kMaxVars) throw PreconditionError("bad elimination block");
  return MonomialOrder(Kind::Elimination, block, weights);
}

int MonomialOrder::weighted_degree(Monomial m) const {
  if (unit_weights_) return m.degree();
  int d = 0;
  for (int i = 0; i < Monomial::kMaxVars; ++i) d += weights_[i] * m.exponent(i);
  return d;
}

int MonomialOrder::grevlex_compare(Monomial a, Monomial b) const {
  int da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da > db ? 1 : -1;
  std::uint64_t x = a.bits() ^ b.bits();
  if (x == 0) return 0;
  int var = (63 - std::countl_zero(x)) / 8;
  return a.exponent(var) < b.exponent(var) ? 1 : -1;
}

int MonomialOrder::compare(Monomial a, Monomial b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::Lex: {
      std::uint64_t x = a.bits() ^ b.bits();
      if (x == 0) return 0;
      int var = std::countr_zero(x) / 8;
      return a.exponent(var) > b.exponent(var) ? 1 : -1;
    }
    case Kind::Elimination: {
      int r = grevlex_compare(a.masked(block_mask_), b.masked(block_mask_));
      if (r != 0) return r;
      return grevlex_compare(a.masked(~block_mask_), b.masked(~block_mask_));
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

// --- Ring ---

Ring::Ring(std::uint32_t prime, std::vector<std::string> names, std::vector<int> weights,
           EngineConfig config)
    : field_(prime), names_(std::move(names)), weights_(std::move(weights)), config_(config),
      order_(MonomialOrder::grevlex(weights_)) {}

RingPtr Ring::make(std::uint32_t prime, std::vector<std::string> names, std::vector<int> weights,
                   EngineConfig config) {
  if (names.empty()) throw PreconditionError("a ring needs at least one variable");
  if (names.size() > static_cast<std::size_t>(Monomial::kMaxVars))
    throw PreconditionError("at most 8 variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw PreconditionError("one weight per variable required");
  return RingPtr(new Ring(prime, std::move(names), std::move(weights), config));
}

RingPtr Ring::standard(int num_vars, std::uint32_t prime, EngineConfig config) {
  std::vector<std::string> names;
  for (int i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i));
  return make(prime, std::move(names), {}, config);
}

bool Ring::standard_grading() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

int Ring::var_index(std::string_view name) const {
  for (int i = 0; i < num_vars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (characteristic() == other.characteristic() && names_ == other.names_ &&
                            weights_ == other.weights_);
}

RingPtr Ring::with_prime(std::uint32_t prime) const { return make(prime, names_, weights_, config_); }

RingPtr Ring::with_config(EngineConfig config) const {
  return make(characteristic(), names_, weights_, config);
}

std::string Ring::header() const {
  std::ostringstream out;
  out << "ring p=" << characteristic() << " vars=";
  for (int i = 0; i < num_vars(); ++i) out << (i ? "," : "") << names_[i];
  if (!standard_grading()) {
    out << " weights=";
    for (int i = 0; i < num_vars(); ++i) out << (i ? "," : "") << weights_[i];
  }
  return out.str();
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) throw ContextMismatch("operand has no ring");
  if (!a->same_as(*b)) throw ContextMismatch("operands live in different rings");
}

}  // namespace condlab

namespace condlab {

namespace {
void enumerate_monomials(const Ring& ring, int var, int remaining, std::vector<int>& exps,
                         std::vector<Monomial>& out) {
  int n = ring.num_vars();
  int w = ring.weights()[var];
  if (var == n - 1) {
    if (remaining % w == 0 && remaining / w <= Monomial::kMaxExponent) {
      exps[var] = remaining / w;
      out.push_back(Monomial::from_exponents(exps));
    }
    return;
  }
  for (int e = std::min(remaining / w, Monomial::kMaxExponent); e >= 0; --e) {
    exps[var] = e;
    enumerate_monomials(ring, var + 1, remaining - e * w, exps, out);
  }
  exps[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> exps(ring.num_vars(), 0);
  enumerate_monomials(ring, 0, degree, exps, out);
  const auto& order = ring.order();
  std::sort(out.begin(), out.end(), [&](Monomial a, Monomial b) { return order.compare(a, b) > 0; });
  return out;
}

}  // namespace condlab
