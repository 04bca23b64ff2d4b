#ifndef CONDLAB_FIXTURE_HPP
#define CONDLAB_FIXTURE_HPP

#include <string>
#include <string_view>

#include "condlab/conductor.hpp"

namespace condlab {

/// A curve read from a fixture file.
///
///   ring p=32003 vars=x0,x1,x2
///   component: x0^2 + x1^2 - x2^2
///   conductor_hint: x0; x1        (belongs to the component above)
///   implicit: x0*x1*(x0+x1+x2)    (one equation, components unknown)
///
/// Blank lines and lines starting with '#' are ignored.
struct Fixture {
  std::string name;
  CurveSpec spec;
  /// False for `implicit:` fixtures; statements that need the component
  /// count are skipped for them.
  bool components_known = true;
};

Fixture parse_fixture(std::string_view text, const std::string& name = "", EngineConfig config = {});
Fixture load_fixture(const std::string& path, EngineConfig config = {});

/// Ideal input for the algebra commands: a ring header followed by
/// `generator: <poly>` lines. A curve fixture is also accepted and read as
/// the principal ideal of its total form.
Ideal parse_ideal_input(std::string_view text, EngineConfig config = {});
std::string read_text_file(const std::string& path);

}  // namespace condlab

#endif
