// Prints one PASS/FAIL line per acceptance criterion. Exits non-zero if any
// criterion fails or runs over its time budget.
#include <iostream>

#include "kmrank/checks.hpp"

int main() {
    using namespace kmrank::checks;
    using Runner = CheckResult (*)();
    const Runner runners[] = {
        [] { return golden_examples(); },
        [] { return conjugation_involution(); },
        [] { return dyson_bijection(); },
        [] { return selection_insertion_laws(); },
        [] { return census_symmetries(); },
        [] { return identity_verification(); },
        [] { return equidistribution(); },
    };
    int failed = 0;
    for (Runner run : runners) {
        const CheckResult r = run();
        std::cout << format(r) << std::endl;
        if (!r.ok()) ++failed;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
