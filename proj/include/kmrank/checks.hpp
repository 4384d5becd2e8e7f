#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kmrank::checks {

/// Outcome of one exhaustive sweep. Failures keep the first few
/// counterexamples; `cases` counts every individual comparison made.
struct CheckResult {
    std::string id;
    std::string title;
    bool passed = true;
    std::int64_t cases = 0;
    std::int64_t failed_cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0.0;
    double budget_seconds = 0.0;

    void expect(bool ok, const std::string& what);
    bool within_budget() const { return budget_seconds <= 0.0 || seconds < budget_seconds; }
    bool ok() const { return passed && within_budget(); }
};

// Acceptance criteria, each at the ranges and time budgets it is stated with.
CheckResult golden_examples();
CheckResult conjugation_involution(int max_n = 24, int max_k = 4);
CheckResult dyson_bijection(int max_n = 18, int max_k = 3);
CheckResult selection_insertion_laws(int max_k = 3, int max_size = 14, int max_bound = 4, int extra = 8);
CheckResult census_symmetries(int max_n = 22, int max_k = 3);
CheckResult identity_verification();
CheckResult equidistribution(int max_n = 22, int max_k = 3);

std::vector<CheckResult> acceptance_suite();

// Remaining worked examples and module properties.
CheckResult module_examples();
CheckResult module_properties();

/// One status line, then an indented line per recorded failure and note.
std::string format(const CheckResult& r);

/// acceptance_suite() plus module_examples() and module_properties().
std::vector<CheckResult> selftest_suite();

}  // namespace kmrank::checks
