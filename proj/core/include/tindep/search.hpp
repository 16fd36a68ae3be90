#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tindep/group.hpp"

namespace tindep {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class SearchStatus { exact, budget_exhausted };

std::string to_string(SearchStatus status);

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;  ///< explored nodes before giving up
    unsigned threads = 1;
    bool negation_pruning = true;
};

struct SearchResult {
    std::int64_t max_size = 0;
    std::vector<Element> witness;  ///< lexicographically least maximum set, canonical order
    std::uint64_t nodes = 0;
    SearchStatus status = SearchStatus::exact;
};

/// s(G, t) with a witness, by depth-first branch and bound.
SearchResult max_independent(const Group & g, std::int64_t t, const SearchOptions & options = {});

/// w(G, t) with a witness.
SearchResult max_weakly_independent(const Group & g, std::int64_t t, const SearchOptions & options = {});

/// sf(G) with a witness.
SearchResult max_sum_free(const Group & g, const SearchOptions & options = {});

}  // namespace tindep
