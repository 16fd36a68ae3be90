#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tindep/group.hpp"

namespace tindep {

enum class BoundSide { lower, upper, exact };

std::string to_string(BoundSide side);

struct BoundEntry {
    BoundSide side = BoundSide::lower;
    std::int64_t value = 0;
    std::string source;
};

/// Integer bounds on one extremal quantity, each tagged with its origin.
struct BoundsReport {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::optional<std::int64_t> exact;
    std::vector<BoundEntry> provenance;

    bool admits(std::int64_t value) const { return lower <= value && value <= upper; }
};

/// s(G, t) where a closed form is known, nullopt otherwise.
std::optional<std::int64_t> s_exact(const Group & g, std::int64_t t);

/// s(Z_n, 3) in closed form. Throws std::domain_error for n < 2.
std::int64_t s_Zn3(std::int64_t n);

BoundsReport s_bounds(const Group & g, std::int64_t t);

/// w(G, t) for t <= 2, nullopt otherwise.
std::optional<std::int64_t> w_exact_small_t(const Group & g, std::int64_t t);

BoundsReport w_bounds(const Group & g, std::int64_t t);

BoundsReport sf_bounds(const Group & g);

}  // namespace tindep
