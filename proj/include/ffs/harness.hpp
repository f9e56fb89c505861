#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffs/ffield.hpp"
#include "ffs/mixing.hpp"
#include "ffs/report.hpp"

namespace fqg {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string command;
  std::optional<std::uint64_t> p;
  std::uint32_t e = 1;
  std::optional<std::uint64_t> q;
  std::optional<int> d;
  std::optional<int> k;
  std::vector<std::uint64_t> a;  // edge norms, star colors or star type, as field indices
  double density = 1.0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::uint64_t cap = kDefaultWorkCap;
  OutputFormat format = OutputFormat::json;
  std::string out;
  std::uint64_t trials = 100;
  std::optional<std::uint64_t> set_size;  // mixing: fixed |B| = |C|; default uniform in 1..n
  std::uint64_t samples = 1'000'000;
  std::string mode = "exact";
  std::string pattern_file;
  bool formula = false;
  bool dense = false;
  std::string profile = "quick";
  std::vector<int> criteria;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "field-check", "sphere", "spectrum",          "mixing",   "stars",        "copies",
      "scheme",      "census", "congruence-check", "pipeline", "main-theorem", "accept"};
  return names;
}

/// Runs one subcommand. Bad parameters raise InvalidArgument, exhausted
/// budgets CapExceeded; failed checks only clear flags in the report.
Report run(const RunConfig& config);

/// Work cap from FFS_CAP if set and valid, else `fallback`.
std::uint64_t work_cap_from_env(std::uint64_t fallback);

/// FNV-1a 64 over the bytes chi(x) + 1, x = 0..q-1, as 16 hex digits.
std::string char_table_checksum(const Field& f);

}  // namespace fqg
