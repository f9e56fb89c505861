#include <CLI11.hpp>
#include <cstdio>

#include "ffs/acceptance.hpp"
#include "ffs/error.hpp"

int main(int argc, char** argv) {
  std::string profile = "full";
  fqg::AcceptanceOptions options;
  CLI::App app{"Acceptance criteria, one pass/fail line each"};
  app.add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  app.add_option("--criterion", options.only, "Criterion ids to run (default: all)")->delimiter(',');
  app.add_option("--workers", options.workers)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  try {
    options.profile = fqg::parse_profile(profile);
    bool all = true;
    for (int id = 1; id <= fqg::kCriterionCount; ++id) {
      if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
        continue;
      const auto r = fqg::run_criterion(id, options);
      std::printf("%s\n", fqg::format_line(r).c_str());
      std::fflush(stdout);
      all = all && r.pass();
    }
    return all ? 0 : 1;
  } catch (const fqg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
