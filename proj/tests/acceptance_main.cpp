// Runs every acceptance check and prints one PASS/FAIL line each.
// Exit status 0 only when all of them pass.

#include <iostream>

#include "phigraph/verify.hpp"

int main() {
    auto results = phigraph::run_acceptance_suite();
    std::cout << phigraph::format_acceptance_report(results);
    return phigraph::acceptance_passed(results) ? 0 : 1;
}
