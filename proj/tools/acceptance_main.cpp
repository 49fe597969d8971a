// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"KLR acceptance suite"};
  klr::acceptance::Options opts;
  std::vector<int> only;
  app.add_option("--type", opts.types, "restrict to these affine types");
  app.add_option("--criterion", only, "run only these criteria (1-12)")->check(CLI::Range(1, klr::acceptance::kCriteria));
  app.add_option("--seed", opts.seed, "seed for randomized instances");
  CLI11_PARSE(app, argc, argv);

  if (only.empty())
    for (int id = 1; id <= klr::acceptance::kCriteria; ++id) only.push_back(id);

  int failed = 0;
  double total = 0;
  for (const int id : only) {
    const auto r = klr::acceptance::run_criterion(id, opts);
    std::cout << klr::acceptance::format_line(r) << std::endl;
    failed += !r.skipped && !r.report.passed;
    total += r.seconds;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << " in " << total << "s" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
