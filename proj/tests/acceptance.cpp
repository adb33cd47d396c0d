#include <iostream>

#include "spherekit/suite.hpp"

int main() {
    spherekit::SuiteOptions opts;
    auto results = spherekit::run_paper_suite(opts, std::cout);
    int passed = 0;
    for (const auto& r : results) passed += r.pass;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return spherekit::all_passed(results) ? 0 : 1;
}
