#include "ffs/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fqg {

namespace {

constexpr std::uint64_t kMaxExactDouble = std::uint64_t{1} << 53;

void flatten(const Json& node, const std::string& prefix, std::string& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "." + std::to_string(i), out);
  } else {
    std::string value = node.is_string() ? node.get<std::string>() : node.dump();
    if (value.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      value = quoted + "\"";
    }
    out += prefix + "," + value + "\n";
  }
}

}  // namespace

Json exact(std::uint64_t v) {
  if (v > kMaxExactDouble) return std::to_string(v);
  return v;
}

Json exact(std::int64_t v) {
  if (v > static_cast<std::int64_t>(kMaxExactDouble) || v < -static_cast<std::int64_t>(kMaxExactDouble))
    return std::to_string(v);
  return v;
}

Json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

Report::Report(std::string command) {
  doc_["schema_version"] = kReportSchemaVersion;
  doc_["command"] = std::move(command);
  doc_["config"] = Json::object();
  doc_["metrics"] = Json::object();
  doc_["checks"] = Json::object();
  doc_["pass"] = true;
}

void Report::check(const std::string& name, bool ok) {
  doc_["checks"][name] = ok;
  doc_["pass"] = pass();
}

bool Report::pass() const {
  for (const auto& [name, ok] : doc_["checks"].items())
    if (!ok.get<bool>()) return false;
  return true;
}

std::string Report::to_json() const { return doc_.dump(2) + "\n"; }

std::string Report::to_csv() const {
  std::string out = "key,value\n";
  flatten(doc_, "", out);
  return out;
}

}  // namespace fqg
