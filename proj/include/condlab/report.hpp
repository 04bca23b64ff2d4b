#ifndef CONDLAB_REPORT_HPP
#define CONDLAB_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace condlab {

using Quantity = std::variant<std::int64_t, bool, std::string>;

std::string quantity_to_string(const Quantity& q);

/// Pass/fail record for one checked statement. `expected` holds only the
/// keys that are asserted; everything else in `computed` is informational.
struct VerdictReport {
  std::string statement_id;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
  std::map<std::string, Quantity> computed;
  std::map<std::string, Quantity> expected;
  std::vector<std::string> notes;

  void observe(const std::string& key, Quantity value) { computed[key] = std::move(value); }
  void expect(const std::string& key, Quantity value, Quantity want) {
    computed[key] = std::move(value);
    expected[key] = std::move(want);
  }
  /// Shorthand for an asserted inequality or property.
  void require(const std::string& key, bool holds) { expect(key, holds, true); }
  void note(std::string text) { notes.push_back(std::move(text)); }

  bool pass() const;
  /// Keys whose computed value differs from the expected one.
  std::vector<std::string> failures() const;

  /// {statement_id, seed, prime, computed, expected, pass, notes}
  std::string to_json(int indent = -1) const;
  std::string to_text() const;
};

/// Summary document with `schema: 1`; bit-identical for identical input.
std::string reports_to_json(const std::vector<VerdictReport>& reports, int indent = 2);

}  // namespace condlab

#endif
