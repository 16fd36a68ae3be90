#pragma once

#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "tindep/group.hpp"
#include "tindep/independence.hpp"

namespace testing_support {

inline oracle::Ab to_oracle(const tindep::Group & g) { return oracle::Ab{g.factors()}; }

inline std::vector<std::int64_t> to_indices(const tindep::Group & g, const std::vector<tindep::Element> & xs)
{
    std::vector<std::int64_t> out;
    for (const auto & x : xs)
        out.push_back(static_cast<std::int64_t>(g.index_of(x)));
    return out;
}

inline oracle::Kind to_oracle(tindep::RelationKind kind)
{
    return kind == tindep::RelationKind::weak ? oracle::Kind::weak : oracle::Kind::strong;
}

/// Distinct random element indices, at most g.order() of them.
inline std::vector<tindep::ElementIndex> random_indices(const tindep::Group & g, std::size_t count, std::mt19937_64 & rng)
{
    std::vector<tindep::ElementIndex> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<tindep::ElementIndex>(i);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(count, all.size()));
    return all;
}

}  // namespace testing_support
