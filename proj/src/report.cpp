#include "dgk/report.hpp"

#include <sstream>

namespace dgk {

bool Check::expect(bool ok, const std::string& what) {
  ++cases;
  if (!ok) record_failure(what);
  return ok;
}

void Check::record_failure(const std::string& what) {
  if (failures == 0) witness = what;
  ++failures;
  passed = false;
}

Check& Report::law(const std::string& name, const std::string& anchor) {
  for (auto& c : checks_)
    if (c.name == name) return c;
  Check c;
  c.name = name;
  c.anchor = anchor;
  checks_.push_back(std::move(c));
  return checks_.back();
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + c.name;
    checks_.push_back(std::move(copy));
  }
  for (const auto& w : other.warnings_)
    warnings_.push_back(prefix.empty() ? w : prefix + w);
}

bool Report::ok() const { return failed_count() == 0; }

std::size_t Report::failed_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (!c.passed) ++n;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream out;
  if (!title_.empty()) out << "== " << title_ << "\n";
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.anchor.empty()) out << "  [" << c.anchor << "]";
    out << "  (" << c.cases << " cases";
    if (c.failures) out << ", " << c.failures << " failed";
    out << ")";
    if (!c.note.empty()) out << "  " << c.note;
    out << "\n";
    if (!c.passed && !c.witness.empty()) out << "     witness: " << c.witness << "\n";
  }
  for (const auto& w : warnings_) out << "WARN " << w << "\n";
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["passed"] = c.passed;
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  nlohmann::json out;
  out["title"] = title_;
  out["ok"] = ok();
  out["checks"] = std::move(checks);
  out["warnings"] = warnings_;
  return out;
}

}  // namespace dgk
