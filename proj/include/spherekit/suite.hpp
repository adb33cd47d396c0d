#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "spherekit/constructions.hpp"
#include "spherekit/enumeration.hpp"

namespace spherekit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool undecided = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t decomposition_budget = 10'000'000;
    std::uint64_t search_budget = 10'000'000;
    /// Run the lens-space orbit search from scratch even when the packaged
    /// certificate is available.
    bool fresh_lens_search = true;
};

/// Runs the eight-criterion verification battery, streaming one line per
/// criterion to `log`. Returns all results; overall success means every
/// criterion passed within its budget.
std::vector<CriterionResult> run_paper_suite(const SuiteOptions& opts, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

/// Independent rational Betti oracle (fraction-free rank elimination over
/// the boundary matrices); used to cross-check the Smith-normal-form path.
std::vector<long long> betti_by_rank_oracle(const SimplicialComplex& K);

/// Deterministic pseudo-random complex streams for the identity suites.
SimplicialComplex random_complex(std::uint64_t seed, int max_vertices = 8);
SimplicialComplex random_balanced_complex(std::uint64_t seed);

/// Sphere fixtures used by the symmetry and duality suites.
std::vector<SimplicialComplex> sphere_fixtures();

}  // namespace spherekit
