// Acceptance suite: runs every end-to-end criterion and prints one pass/fail
// line per criterion. Exit code is the number of failed criteria.
#include <cstdio>
#include <iostream>

#include "nelson/paper_suite.hpp"

int main() {
    auto results = nelson::run_paper_suite();
    std::cout << nelson::format_paper_suite(results);
    int failures = 0;
    for (const auto& r : results)
        if (!r.informational && !r.passed) ++failures;
    return failures;
}
