// Acceptance suite: one exhaustive criterion per entry, each printing a
// single PASS/FAIL line.  Run with no arguments for the full battery or with
// an index (1-9) for one criterion; the exit status is the number of failed
// criteria.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ladders/verify.hpp"

namespace {

using ladders::SuiteResult;

struct Criterion {
  int index;
  const char* title;
  SuiteResult (*run)();
};

const Criterion kCriteria[] = {
    {1, "rank-4 ladder table",
     [] { return ladders::verify_rank4_table(); }},
    {2, "ladder pairing equivalence",
     [] { return ladders::verify_ladder_pairing(4, 3, 0, 6); }},
    {3, "dual parity equivalence",
     [] { return ladders::verify_dual_parity(4, 3, 0, 6); }},
    {4, "duality laws",
     [] { return ladders::verify_dual_laws(4, 0, 4); }},
    {5, "symplectic implies Speh type",
     [] { return ladders::verify_speh_implication_suite(3, 0, 3); }},
    {6, "Speh parity cross-check",
     [] { return ladders::verify_speh_parity(6, 3); }},
    {7, "orbit counts and exponents",
     [] { return ladders::verify_orbit_counts(6); }},
    {8, "classifier duality consistency",
     [] { return ladders::verify_classifier_duality(4, 3, 0, 6); }},
    {9, "document round-trip",
     [] { return ladders::verify_roundtrip(); }},
};

int run_criterion(const Criterion& criterion) {
  const SuiteResult result = criterion.run();
  std::printf("%s  %d. %s [%s]: %lld mismatches / %lld cases\n",
              result.passed() ? "PASS" : "FAIL", criterion.index,
              criterion.title, result.suite.c_str(), result.mismatches,
              result.cases);
  for (const std::string& note : result.notes)
    std::printf("      note: %s\n", note.c_str());
  for (const std::string& example : result.examples)
    std::printf("      e.g. %s\n", example.c_str());
  return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int failures = 0;
  if (argc > 1) {
    const int wanted = std::atoi(argv[1]);
    for (const Criterion& criterion : kCriteria)
      if (criterion.index == wanted) return run_criterion(criterion);
    std::fprintf(stderr, "no criterion %s\n", argv[1]);
    return 2;
  }
  for (const Criterion& criterion : kCriteria)
    failures += run_criterion(criterion);
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
