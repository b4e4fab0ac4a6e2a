#include "commands.hpp"

#include "flagcoh/cache.hpp"
#include "flagcoh/parallel.hpp"

#include <CLI11.hpp>

#include <iostream>

using flagcoh::cli::JobSpec;

namespace {

void common_options(CLI::App* app, JobSpec& spec, bool& no_cache, bool needs_type = true) {
  auto* type = app->add_option("--type,-t", spec.type, "Cartan type: family letter (with --rank) or label such as B3");
  if (needs_type) type->required();
  app->add_option("--rank,-r", spec.rank, "Rank");
  app->add_option("--format,-f", spec.format, "Output format: markdown, csv or json")->capture_default_str();
  app->add_option("--threads,-j", spec.threads, "Worker threads")->capture_default_str();
  app->add_option("--weyl-cap", spec.weyl_cap, "Refuse Weyl groups larger than this");
  app->add_flag("--no-cache", no_cache, "Ignore FLAGCOH_CACHE_DIR");
}

void parabolic_options(CLI::App* app, JobSpec& spec) {
  app->add_option("--parabolic,-p", spec.parabolic, "Maximal parabolic by its removed simple root (1-based), borel or whole");
  app->add_option("--levi", spec.levi, "Parabolic by its Levi simple roots, e.g. 1,3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert calculus on flag varieties G/P with the deformed product"};
  app.require_subcommand(1);
  JobSpec spec;
  spec.threads = flagcoh::default_threads();
  bool no_cache = false;

  auto* roots = app.add_subcommand("roots", "Positive roots, Cartan matrix and rho");
  common_options(roots, spec, no_cache);
  parabolic_options(roots, spec);

  auto* weyl = app.add_subcommand("weyl", "Weyl group order and minimal coset representatives");
  common_options(weyl, spec, no_cache);
  parabolic_options(weyl, spec);

  auto* product = app.add_subcommand("product", "Cup and deformed product of two Schubert classes");
  common_options(product, spec, no_cache);
  parabolic_options(product, spec);
  product->add_option("-u,--u", spec.u, "Reduced word of u (1-based letters, e for identity)")->required();
  product->add_option("-v,--v", spec.v, "Reduced word of v")->required();

  auto* deform = app.add_subcommand("deform-table", "Deformed multiplication table of H^*(G/P)");
  common_options(deform, spec, no_cache);
  parabolic_options(deform, spec);

  auto* lmov = app.add_subcommand("lmovable", "Numerical L-movability test");
  common_options(lmov, spec, no_cache);
  parabolic_options(lmov, spec);
  lmov->add_option("--tuple", spec.tuple, "Reduced words of w_1..w_s")->delimiter(',')->required();

  auto* horn = app.add_subcommand("horn-check", "Character and dimension inequalities for a tuple");
  common_options(horn, spec, no_cache);
  parabolic_options(horn, spec);
  horn->add_option("--tuple", spec.tuple, "Reduced words of w_1..w_s")->delimiter(',')->required();
  horn->add_option("--check", spec.check, "t2, t2prime, dimension or all")->capture_default_str();
  horn->add_option("--q", spec.q, "Levi simple roots of Q, e.g. 1,3 or {} (dimension check)");
  horn->add_option("--qhat", spec.qhat, "Levi simple roots of Q-hat (dimension check)");
  horn->add_option("--utuple", spec.utuple, "Reduced words of u_1..u_s in W_L (dimension check)")->delimiter(',');

  auto* eigen = app.add_subcommand("eigencone", "Inequality system of the eigencone");
  common_options(eigen, spec, no_cache);
  eigen->add_option("-s,--s", spec.s, "Number of summands")->capture_default_str();
  eigen->add_option("--mode", spec.mode, "classical or deformed")->capture_default_str();
  eigen->add_flag("--prune", spec.prune, "Mark redundant inequalities");
  eigen->add_flag("--relaxed", spec.relaxed, "Accept any nonzero point-class coefficient");
  eigen->add_option("--output,-o", spec.output, "Write the system as JSON");

  auto* redundancy = app.add_subcommand("redundancy", "Prune a saved inequality system");
  common_options(redundancy, spec, no_cache, false);
  redundancy->add_option("--input,-i", spec.input, "System JSON from eigencone --output")->required();
  redundancy->add_option("--output,-o", spec.output, "Write the pruned system as JSON");

  auto* levi = app.add_subcommand("leviprod-check", "Compare the deformed product on G/B with the Phi-set rule");
  common_options(levi, spec, no_cache);

  auto* golden = app.add_subcommand("verify-golden", "Verify the bundled rank-3 deformed product tables");
  common_options(golden, spec, no_cache, false);
  golden->add_option("--table", spec.table, "Only this table (b3_p2, b3_p3, c3_p1, c3_p2)");

  auto* converse = app.add_subcommand("horn-converse-experiment",
                                      "Search for vanishing products that pass every character inequality");
  common_options(converse, spec, no_cache);
  parabolic_options(converse, spec);
  converse->add_option("-s,--s", spec.s, "Number of summands")->capture_default_str();
  converse->add_option("--max-examples", spec.max_examples, "Examples to list")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : flagcoh::cli::kInvalidSpec;
  }
  spec.command = app.get_subcommands().front()->get_name();
  if (!no_cache)
    if (auto dir = flagcoh::cache_dir_from_env()) spec.cache_dir = dir->string();
  if (spec.threads < 1) spec.threads = 1;

  try {
    const auto result = flagcoh::cli::run(spec);
    std::cout << result.text;
    return result.code;
  } catch (const flagcoh::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return flagcoh::cli::kBudget;
  } catch (const flagcoh::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return flagcoh::cli::kInvalidSpec;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return flagcoh::cli::kInternal;
  }
}
