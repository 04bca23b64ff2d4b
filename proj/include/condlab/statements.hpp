#ifndef CONDLAB_STATEMENTS_HPP
#define CONDLAB_STATEMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "condlab/fixture.hpp"
#include "condlab/report.hpp"

namespace condlab {

struct StatementOptions {
  std::uint64_t seed = 1;
  std::uint32_t prime = 32003;
  /// Unset: each statement picks a cap large enough for its own instance.
  std::optional<int> degree_cap;
  std::optional<int> lines;   // example1
  std::optional<int> degree;  // example2
  std::optional<int> m;       // example3, sect3-example is m = 2
};

/// Every id accepted by run_statement, in suite order.
const std::vector<std::string>& statement_ids();
bool is_statement_id(const std::string& id);

/// Runs the built-in instances of one statement. Throws PreconditionError
/// for an unknown id.
std::vector<VerdictReport> run_statement(const std::string& id, const StatementOptions& options);
std::vector<VerdictReport> run_all_statements(const StatementOptions& options);

/// Runs every statement that applies to the fixture's curve.
std::vector<VerdictReport> verify_fixture(const Fixture& fixture, std::uint64_t seed = 1);

}  // namespace condlab

#endif
