#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>

namespace fqg {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Integers above 2^53 become decimal strings so JSON readers stay exact.
Json exact(std::uint64_t v);
Json exact(std::int64_t v);
/// Rounded to 12 significant digits; NaN and infinities become null.
Json real(double v);

/// One command's output: config echo, metrics and named pass/fail checks.
/// Reports carry no timing, so identical configs give identical bytes.
class Report {
 public:
  explicit Report(std::string command);

  Json& config() { return doc_["config"]; }
  Json& metrics() { return doc_["metrics"]; }
  const Json& document() const { return doc_; }

  void check(const std::string& name, bool ok);
  bool pass() const;

  std::string to_json() const;
  /// Flattened "key,value" lines; nested keys joined with '.', array items by index.
  std::string to_csv() const;

 private:
  Json doc_;
};

}  // namespace fqg
