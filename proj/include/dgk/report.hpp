#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include <json.hpp>

namespace dgk {

/// Outcome of one law or assertion. A law that fails on several inputs keeps
/// the first witness (in ascending index order) and a failure count.
struct Check {
  std::string name;
  std::string anchor;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;
  std::string note;

  /// Records one evaluated case; returns `ok` so it can be used inline.
  bool expect(bool ok, const std::string& what = {});
  template <class WitnessFn>
  bool expect_lazy(bool ok, WitnessFn&& witness_fn) {
    ++cases;
    if (!ok) record_failure(witness_fn());
    return ok;
  }
  void record_failure(const std::string& what);
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  /// Returns the check called `name`, creating it on first use. The
  /// reference stays valid for the lifetime of the report.
  Check& law(const std::string& name, const std::string& anchor = {});
  const Check* find(const std::string& name) const;

  void merge(const Report& other, const std::string& prefix = {});
  void warn(std::string message) { warnings_.push_back(std::move(message)); }

  bool ok() const;
  std::size_t failed_count() const;
  const std::string& title() const noexcept { return title_; }
  const std::deque<Check>& checks() const noexcept { return checks_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  std::string title_;
  // Deque so references returned by law() survive later insertions.
  std::deque<Check> checks_;
  std::vector<std::string> warnings_;
};

}  // namespace dgk
