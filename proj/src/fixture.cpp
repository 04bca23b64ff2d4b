#include "condlab/fixture.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace condlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// The message of a ParseError without its "(at offset N)" suffix.
std::string bare_message(const ParseError& e) {
  std::string m = e.what();
  auto at = m.rfind(" (at offset ");
  return at == std::string::npos ? m : m.substr(0, at);
}

}  // namespace

Fixture parse_fixture(std::string_view text, const std::string& name, EngineConfig config) {
  RingPtr ring;
  std::vector<CurveComponent> comps;
  bool implicit = false;
  std::size_t offset = 0;
  int line_no = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(offset, end - offset));
    const std::size_t line_at = offset;
    offset = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& what) -> void {
      throw ParseError("line " + std::to_string(line_no) + ": " + what, line_at);
    };
    if (!ring) {
      if (line.substr(0, 4) != "ring") fail("fixture must start with a ring header");
      ring = parse_ring_header(line, config);
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected 'key: value'");
    std::string_view key = trim(line.substr(0, colon));
    std::string_view value = trim(line.substr(colon + 1));
    try {
      if (key == "component" || key == "implicit") {
        if (implicit || (key == "implicit" && !comps.empty()))
          fail("'implicit' cannot be combined with other components");
        implicit = key == "implicit";
        comps.push_back({parse_polynomial(value, ring), 0, std::nullopt});
      } else if (key == "conductor_hint") {
        if (comps.empty()) fail("conductor_hint before any component");
        std::vector<Polynomial> gens;
        std::size_t start = 0;
        while (start <= value.size()) {
          std::size_t semi = value.find(';', start);
          if (semi == std::string_view::npos) semi = value.size();
          std::string_view piece = trim(value.substr(start, semi - start));
          if (!piece.empty()) gens.push_back(parse_polynomial(piece, ring));
          start = semi + 1;
        }
        if (gens.empty()) fail("empty conductor_hint");
        comps.back().conductor_hint = Ideal(ring, gens);
      } else {
        fail("unknown key '" + std::string(key) + "'");
      }
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      throw ParseError("line " + std::to_string(line_no) + ": " + bare_message(e), line_at + e.position());
    }
  }
  if (!ring) throw ParseError("empty fixture", 0);
  if (comps.empty()) throw ParseError("fixture has no component", text.size());
  Fixture f;
  f.name = name;
  f.spec = CurveSpec(std::move(comps), implicit ? CurveOrigin::Implicitized : CurveOrigin::Explicit);
  f.components_known = !implicit;
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Fixture load_fixture(const std::string& path, EngineConfig config) {
  return parse_fixture(read_text_file(path), std::filesystem::path(path).stem().string(), config);
}

Ideal parse_ideal_input(std::string_view text, EngineConfig config) {
  if (text.find("generator:") == std::string_view::npos) {
    Fixture f = parse_fixture(text, "", config);
    return Ideal(f.spec.ring(), {f.spec.total_form()});
  }
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::size_t offset = 0;
  int line_no = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(offset, end - offset));
    const std::size_t line_at = offset;
    offset = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      if (!ring) {
        ring = parse_ring_header(line, config);
        continue;
      }
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos || trim(line.substr(0, colon)) != "generator")
        throw ParseError("expected 'generator: <polynomial>'", 0);
      gens.push_back(parse_polynomial(trim(line.substr(colon + 1)), ring));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + bare_message(e), line_at + e.position());
    }
  }
  if (!ring) throw ParseError("empty input", 0);
  return Ideal(ring, gens);
}

}  // namespace condlab
