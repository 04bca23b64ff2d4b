#include <cctype>
#include <charconv>

#include "condlab/ring.hpp"

namespace condlab {

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const RingPtr& ring)
      : text_(text), ring_(ring), field_(ring->field()) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = parse_term();
      if (negative) t.c = field_.neg(t.c);
      terms.push_back(t);
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

private:
  Term parse_term() {
    Coeff coeff = 1;
    std::vector<int> exps(ring_->num_vars(), 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = field_.mul(coeff, parse_coefficient());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        std::string_view name = parse_identifier();
        int var = ring_->var_index(name);
        if (var < 0) fail_at("unknown variable '" + std::string(name) + "'", start);
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_small_int();
        }
        exps[var] += e;
        if (exps[var] > Monomial::kMaxExponent) fail_at("exponent too large", start);
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) fail("dangling '*'");
      } else if (at_end() || !(std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        break;
      }
    }
    if (!any) fail("expected a term");
    return {Monomial::from_exponents(exps), coeff};
  }

  Coeff parse_coefficient() {
    Coeff num = parse_residue();
    skip_ws();
    if (!at_end() && peek() == '/') {
      std::size_t slash = pos_;
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      Coeff den = parse_residue();
      if (den == 0) fail_at("coefficient not reducible: denominator vanishes mod p", slash);
      num = field_.div(num, den);
    }
    return num;
  }

  Coeff parse_residue() {
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<std::uint64_t>(peek() - '0')) % field_.characteristic();
      ++pos_;
    }
    return static_cast<Coeff>(v);
  }

  int parse_small_int() {
    std::size_t start = pos_;
    int v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > Monomial::kMaxExponent) fail_at("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected exponent");
    return v;
  }

  std::string_view parse_identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  const RingPtr& ring_;
  const PrimeField& field_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (!ring) throw PreconditionError("parse_polynomial: no ring");
  return PolyParser(text, ring).parse();
}

RingPtr parse_ring_header(std::string_view line, EngineConfig config) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  };
  auto next_token = [&]() -> std::pair<std::string_view, std::size_t> {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    return {line.substr(start, pos - start), start};
  };

  auto [keyword, kw_at] = next_token();
  if (keyword != "ring") throw ParseError("ring header must start with 'ring'", kw_at);

  std::uint32_t prime = 32003;
  std::vector<std::string> names;
  std::vector<int> weights;
  while (true) {
    auto [token, at] = next_token();
    if (token.empty()) break;
    auto eq = token.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", at);
    std::string_view key = token.substr(0, eq), value = token.substr(eq + 1);
    if (key == "p") {
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), p);
      if (ec != std::errc() || ptr != value.data() + value.size() || p >= (1ULL << 31) || !is_prime(p))
        throw ParseError("p must be a prime below 2^31", at + eq + 1);
      prime = static_cast<std::uint32_t>(p);
    } else if (key == "vars") {
      for (auto v : split(value, ',')) {
        if (v.empty()) throw ParseError("empty variable name", at);
        if (!(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
          throw ParseError("variable names must start with a letter", at);
        names.emplace_back(v);
      }
    } else if (key == "weights") {
      for (auto w : split(value, ',')) {
        int x = 0;
        auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), x);
        if (ec != std::errc() || ptr != w.data() + w.size() || x < 1)
          throw ParseError("weights must be positive integers", at);
        weights.push_back(x);
      }
    } else {
      throw ParseError("unknown ring attribute '" + std::string(key) + "'", at);
    }
  }
  if (names.empty()) throw ParseError("ring header lacks vars=", line.size());
  try {
    return Ring::make(prime, std::move(names), std::move(weights), config);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace condlab
