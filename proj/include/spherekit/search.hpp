#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace spherekit {

/// Exhaustive searches distinguish a certified negative from running out of
/// budget: `none` may only be reported after the whole space was explored.
enum class SearchStatus { found, none, undecided };

std::string to_string(SearchStatus s);

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::undecided;
    std::optional<T> witness;
    std::uint64_t nodes_explored = 0;

    bool found() const { return status == SearchStatus::found; }
};

/// Budgets are node counts, not wall time, so runs are reproducible.
struct SearchOptions {
    std::uint64_t node_budget = 10'000'000;
    /// Invoked every `progress_stride` explored nodes (checkpoint hook).
    std::function<void(std::uint64_t)> progress;
    std::uint64_t progress_stride = 1'000'000;
};

}  // namespace spherekit
