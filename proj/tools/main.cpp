#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "ffs/error.hpp"
#include "ffs/harness.hpp"

namespace {

using fqg::RunConfig;

void field_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--q", c.q, "Field order q = p^e (odd)");
  sub->add_option("--p", c.p, "Characteristic, with --e");
  sub->add_option("--e", c.e, "Extension degree");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  std::string format = "json";
  CLI::App app{"Finite-field geometry checks: spheres, Euclidean graphs, schemes, simplex censuses"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", c.seed, "64-bit seed");
  app.add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out, "Write the report here instead of stdout");
  auto* cap = app.add_option("--cap", c.cap, "Work cap for exact enumerations (overrides FFS_CAP)");

  auto* field = app.add_subcommand("field-check", "Field tables, generator and quadratic character");
  field_options(field, c);
  field->add_option("--trials", c.trials, "Random triples for the axiom spot check");

  auto* sph = app.add_subcommand("sphere", "Sphere sizes by enumeration and closed form");
  field_options(sph, c);
  sph->add_option("--d", c.d)->required();
  sph->add_option("--a", c.a, "Radii t (default: all)")->delimiter(',');
  sph->add_flag("--formula", c.formula, "Also evaluate the closed form");

  auto* spec = app.add_subcommand("spectrum", "Eigenvalues of G_q(a) by character sums");
  field_options(spec, c);
  spec->add_option("--d", c.d)->required();
  spec->add_option("--a", c.a, "Edge norms (default: all)")->delimiter(',');
  spec->add_flag("--dense", c.dense, "Cross-check with the dense eigensolver");

  auto* mix = app.add_subcommand("mixing", "Variance and edge-discrepancy inequalities on random subsets");
  field_options(mix, c);
  mix->add_option("--d", c.d)->required();
  mix->add_option("--a", c.a, "Edge norms (default: all)")->delimiter(',');
  mix->add_option("--trials", c.trials);
  mix->add_option("--set-size", c.set_size, "Size of both random sets (default: uniform in 1..q^d)");

  auto* stars = app.add_subcommand("stars", "Colored k-stars in the norm coloring");
  field_options(stars, c);
  stars->add_option("--d", c.d)->required();
  stars->add_option("--a,--colors", c.a, "Leaf colors r_1..r_k")->delimiter(',')->required();
  stars->add_option("--density", c.density, "Density of each random vertex set");

  auto* copies = app.add_subcommand("copies", "Colored copies of a pattern graph");
  field_options(copies, c);
  copies->add_option("--d", c.d)->required();
  copies->add_option("--pattern", c.pattern_file, "JSON pattern {\"s\": S, \"edges\": [[i, j, color], ...]}");
  copies->add_option("--k", c.k, "Complete pattern K_k when no pattern file is given");
  copies->add_option("--a,--colors", c.a, "Pair colors of K_k, pairs in lexicographic order")->delimiter(',');
  copies->add_option("--mode", c.mode)->check(CLI::IsMember({"exact", "sample"}));
  copies->add_option("--samples", c.samples);
  copies->add_option("--density", c.density);

  auto* sch = app.add_subcommand("scheme", "The association scheme on square-type lines");
  field_options(sch, c);
  sch->add_option("--d", c.d)->required();

  auto* census = app.add_subcommand("census", "Distinct edge-norm vectors of nondegenerate (k+1)-tuples");
  field_options(census, c);
  census->add_option("--k", c.k)->required();
  census->add_option("--d", c.d, "Dimension (default 2k-1)");
  census->add_option("--density", c.density);
  census->add_option("--mode", c.mode)->check(CLI::IsMember({"exact", "sample"}));
  census->add_option("--samples", c.samples);

  auto* cong = app.add_subcommand("congruence-check", "Isometry search against edge-norm equality");
  field_options(cong, c);
  cong->add_option("--d", c.d)->required();
  cong->add_option("--trials", c.trials);

  auto* pipe = app.add_subcommand("pipeline", "Stars, sphere slices, lines and scheme cliques");
  field_options(pipe, c);
  pipe->add_option("--k", c.k)->required();
  pipe->add_option("--type,--a", c.a, "Star type a_12..a_1(k+1), nonzero squares (default all 1)")->delimiter(',');
  pipe->add_option("--density", c.density);

  auto* main_thm = app.add_subcommand("main-theorem", "Sampled census on a random set in F_q^(2k-1)");
  field_options(main_thm, c);
  main_thm->add_option("--k", c.k)->required();
  main_thm->add_option("--density", c.density);
  main_thm->add_option("--samples", c.samples);

  auto* accept = app.add_subcommand("accept", "Acceptance suite");
  accept->add_option("--profile", c.profile)->check(CLI::IsMember({"quick", "full"}));
  accept->add_option("--criterion", c.criteria, "Run only these criteria")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? fqg::kExitPass : fqg::kExitUsage;
  }

  try {
    if (cap->count() == 0) c.cap = fqg::work_cap_from_env(c.cap);
    c.command = app.get_subcommands().front()->get_name();
    c.format = format == "csv" ? fqg::OutputFormat::csv : fqg::OutputFormat::json;

    const auto start = std::chrono::steady_clock::now();
    const auto report = fqg::run(c);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string text = c.format == fqg::OutputFormat::csv ? report.to_csv() : report.to_json();
    if (c.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(c.out, std::ios::binary);
      if (!out) throw fqg::InvalidArgument("cannot write " + c.out);
      out << text;
    }
    std::fprintf(stderr, "%s: %s in %.2f s\n", c.command.c_str(), report.pass() ? "pass" : "FAIL", seconds);
    return report.pass() ? fqg::kExitPass : fqg::kExitCheckFailure;
  } catch (const fqg::ConsistencyError& e) {
    std::fprintf(stderr, "check failure: %s\n", e.what());
    return fqg::kExitCheckFailure;
  } catch (const fqg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return fqg::kExitUsage;
  }
}
