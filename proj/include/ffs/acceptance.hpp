#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ffs/geometry.hpp"
#include "ffs/report.hpp"

namespace fqg {

enum class Profile { quick, full };

Profile parse_profile(const std::string& name);
std::string to_string(Profile p);

using SphereFormula = std::function<std::int64_t(const Field&, int, Elem)>;

struct AcceptanceOptions {
  Profile profile = Profile::full;
  unsigned workers = 1;
  std::vector<int> only;  // empty: every criterion
  /// Replaceable so a deliberately broken formula can be shown to fail.
  SphereFormula sphere_formula = sphere_size_formula;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_pass = false;
  bool within_time = false;
  double seconds = 0;
  double time_limit = 0;
  std::string summary;
  Json metrics;

  bool pass() const { return checks_pass && within_time; }
};

inline constexpr int kCriterionCount = 10;

std::string criterion_name(int id);
CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS  3 ramanujan-bound  12.3 s  <summary>"
std::string format_line(const CriterionResult& r);

}  // namespace fqg
