#include "condlab/report.hpp"

#include <sstream>

#include "json.hpp"

namespace condlab {

namespace {

nlohmann::json to_json_value(const Quantity& q) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, q);
}

nlohmann::json report_object(const VerdictReport& r) {
  nlohmann::json j;
  j["statement_id"] = r.statement_id;
  j["seed"] = r.seed;
  j["prime"] = r.prime;
  j["computed"] = nlohmann::json::object();
  for (const auto& [k, v] : r.computed) j["computed"][k] = to_json_value(v);
  j["expected"] = nlohmann::json::object();
  for (const auto& [k, v] : r.expected) j["expected"][k] = to_json_value(v);
  j["pass"] = r.pass();
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string quantity_to_string(const Quantity& q) {
  if (const auto* b = std::get_if<bool>(&q)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&q)) return std::to_string(*i);
  return std::get<std::string>(q);
}

bool VerdictReport::pass() const { return failures().empty(); }

std::vector<std::string> VerdictReport::failures() const {
  std::vector<std::string> out;
  for (const auto& [key, want] : expected) {
    auto it = computed.find(key);
    if (it == computed.end() || it->second != want) out.push_back(key);
  }
  return out;
}

std::string VerdictReport::to_json(int indent) const { return report_object(*this).dump(indent); }

std::string VerdictReport::to_text() const {
  std::ostringstream out;
  out << statement_id << ": " << (pass() ? "PASS" : "FAIL") << " (p=" << prime << ", seed=" << seed << ")\n";
  for (const auto& [key, value] : computed) {
    out << "  " << key << " = " << quantity_to_string(value);
    auto it = expected.find(key);
    if (it != expected.end()) {
      bool ok = it->second == value;
      out << (ok ? "  [ok]" : "  [expected " + quantity_to_string(it->second) + "]");
    }
    out << "\n";
  }
  for (const auto& n : notes) out << "  note: " << n << "\n";
  return out.str();
}

std::string reports_to_json(const std::vector<VerdictReport>& reports, int indent) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["reports"] = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    doc["reports"].push_back(report_object(r));
    passed += r.pass();
  }
  doc["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}};
  return doc.dump(indent);
}

}  // namespace condlab
