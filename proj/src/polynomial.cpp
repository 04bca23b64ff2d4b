#include <algorithm>
#include <sstream>

#include "condlab/ring.hpp"

namespace condlab {

namespace {

void sort_and_merge(const Ring& ring, std::vector<Term>& terms) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.m, b.m) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i++];
    while (i < terms.size() && terms[i].m == t.m) t.c = field.add(t.c, terms[i++].c);
    if (t.c != 0) terms[out++] = t;
  }
  terms.resize(out);
}

// a + s * b, both canonical.
std::vector<Term> merge_axpy(const Ring& ring, std::span<const Term> a, Coeff s,
                             std::span<const Term> b) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = order.compare(a[i].m, b[j].m);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].m, field.mul(s, b[j].c)});
      ++j;
    } else {
      Coeff c = field.add(a[i].c, field.mul(s, b[j].c));
      if (c != 0) out.push_back({a[i].m, c});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].m, field.mul(s, b[j].c)});
  return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Polynomial p(std::move(ring));
  c = p.ring_->field().reduce(c);
  if (c != 0) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->num_vars()) throw PreconditionError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Coeff c) {
  Polynomial p(std::move(ring));
  c = p.ring_->field().reduce(c);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  sort_and_merge(*ring, terms);
  return from_sorted_terms(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

Coeff Polynomial::coefficient(Monomial m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return 0;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.m));
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = ring_->degree(terms_[0].m);
  for (const auto& t : terms_)
    if (ring_->degree(t.m) != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::derivative(int var) const {
  if (!ring_ || var < 0 || var >= ring_->num_vars())
    throw PreconditionError("derivative: variable index out of range");
  const auto& field = ring_->field();
  std::vector<Term> out;
  Monomial x = Monomial::variable(var);
  for (const auto& t : terms_) {
    int e = t.m.exponent(var);
    if (e == 0) continue;
    Coeff c = field.mul(t.c, field.reduce(static_cast<std::uint64_t>(e)));
    if (c != 0) out.push_back({t.m / x, c});
  }
  // Dividing by a variable keeps grevlex order only within equal-degree
  // terms, so re-sort.
  return from_terms(ring_, std::move(out));
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  if (!ring_) return 0;
  if (point.size() != static_cast<std::size_t>(ring_->num_vars()))
    throw PreconditionError("evaluate: point has wrong dimension");
  const auto& field = ring_->field();
  Coeff sum = 0;
  for (const auto& t : terms_) {
    Coeff v = t.c;
    for (int i = 0; i < ring_->num_vars() && v != 0; ++i) {
      int e = t.m.exponent(i);
      if (e) v = field.mul(v, field.pow(field.reduce(point[i]), e));
    }
    sum = field.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::substitute(const RingPtr& target, std::span<const Polynomial> images) const {
  if (images.size() != static_cast<std::size_t>(ring_->num_vars()))
    throw PreconditionError("substitute: need one image per variable");
  for (const auto& im : images) require_same_ring(im.ring(), target);
  if (target->characteristic() != ring_->characteristic())
    throw ContextMismatch("substitute: characteristics differ");
  int n = ring_->num_vars();
  std::vector<std::vector<Polynomial>> powers(n);
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial mono = constant(target, t.c);
    for (int i = 0; i < n; ++i) {
      int e = t.m.exponent(i);
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      mono = mono * pw[e];
    }
    result = result + mono;
  }
  return result;
}

Polynomial Polynomial::scaled(Coeff c) const {
  const auto& field = ring_->field();
  c = field.reduce(c);
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.c = field.mul(t.c, c);
  return p;
}

Polynomial Polynomial::times_monomial(Monomial m, Coeff c) const {
  const auto& field = ring_->field();
  Polynomial p(ring_);
  c = field.reduce(c);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m * m, field.mul(t.c, c)});
  // Weighted grevlex is multiplicative, so order is preserved.
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(terms_.front().c));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& field = ring_->field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = field.to_signed(t.c);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || t.m.is_one()) {
      out << mag;
      wrote = true;
    }
    for (int i = 0; i < ring_->num_vars(); ++i) {
      int e = t.m.exponent(i);
      if (e == 0) continue;
      if (wrote) out << '*';
      out << ring_->var_names()[i];
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_) return b;
  if (!b.ring_) return a;
  require_same_ring(a.ring_, b.ring_);
  return Polynomial::from_sorted_terms(a.ring_, merge_axpy(*a.ring_, a.terms_, 1, b.terms_));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (!b.ring_) return a;
  if (!a.ring_) return -b;
  require_same_ring(a.ring_, b.ring_);
  Coeff minus_one = a.ring_->field().neg(1);
  return Polynomial::from_sorted_terms(a.ring_, merge_axpy(*a.ring_, a.terms_, minus_one, b.terms_));
}

Polynomial operator-(const Polynomial& a) {
  if (!a.ring_) return a;
  return a.scaled(a.ring_->field().neg(1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_ || !b.ring_) return Polynomial(a.ring_ ? a.ring_ : b.ring_);
  require_same_ring(a.ring_, b.ring_);
  const auto& field = a.ring_->field();
  if (a.terms_.size() < b.terms_.size()) return b * a;
  // Accumulate b.size() shifted copies of a by pairwise merging.
  std::vector<std::vector<Term>> rows;
  rows.reserve(b.terms_.size());
  for (const auto& tb : b.terms_) {
    std::vector<Term> row;
    row.reserve(a.terms_.size());
    for (const auto& ta : a.terms_) row.push_back({ta.m * tb.m, field.mul(ta.c, tb.c)});
    rows.push_back(std::move(row));
  }
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
      next.push_back(merge_axpy(*a.ring_, rows[i], 1, rows[i + 1]));
    if (rows.size() % 2) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  return Polynomial::from_sorted_terms(a.ring_, rows.empty() ? std::vector<Term>{} : std::move(rows[0]));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!a.ring_ || !b.ring_ || !a.ring_->same_as(*b.ring_)) return false;
  return a.terms_ == b.terms_;
}

Polynomial product(const RingPtr& ring, std::span<const Polynomial> factors) {
  Polynomial result = Polynomial::constant(ring, 1);
  for (const auto& f : factors) result = result * f;
  return result;
}

}  // namespace condlab
