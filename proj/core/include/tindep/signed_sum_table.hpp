#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tindep/element_set.hpp"
#include "tindep/group.hpp"
#include "tindep/independence.hpp"

namespace tindep {

/// Incremental record of the signed sums over a growing set A.
///
/// Strong mode keeps D_0..D_{t-1}, where D_w holds every sum lambda_1 a_1 +
/// ... with total weight at most w. Weak mode keeps the star analogue, sums of
/// at most w distinct members with signs. Level w is a bitset over canonical
/// element indices; all levels share one flat buffer.
///
/// The table keeps a pointer to its group, which must outlive it.
class SignedSumTable {
public:
    SignedSumTable(const Group & g, std::int64_t t, RelationKind kind = RelationKind::strong);

    const Group & group() const { return *group_; }
    std::int64_t t() const { return t_; }
    RelationKind kind() const { return kind_; }
    const std::vector<ElementIndex> & members() const { return members_; }

    bool contains(std::int64_t level, ElementIndex x) const
    {
        return bits::test(level_words(level), static_cast<std::size_t>(x));
    }
    ElementSet level(std::int64_t level) const;

    /// True iff A + {x} is still (weakly) t-independent.
    bool can_push(ElementIndex x) const;

    /// Adds x without checking feasibility.
    void push(ElementIndex x);

    /// Becomes parent + {x}, reusing this table's storage.
    void extend_from(const SignedSumTable & parent, ElementIndex x);

private:
    std::span<const bits::Word> level_words(std::int64_t level) const
    {
        return {data_.data() + static_cast<std::size_t>(level) * words_per_level_, words_per_level_};
    }
    std::span<bits::Word> level_words(std::int64_t level)
    {
        return {data_.data() + static_cast<std::size_t>(level) * words_per_level_, words_per_level_};
    }

    const Group * group_;
    std::int64_t t_;
    RelationKind kind_;
    std::size_t words_per_level_;
    std::vector<bits::Word> data_;
    std::vector<ElementIndex> members_;
};

/// The updated table when A + {x} stays (weakly) t-independent, nullopt otherwise.
std::optional<SignedSumTable> feasibility_extend(const SignedSumTable & table, ElementIndex x);

}  // namespace tindep
