#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tindep/element_set.hpp"
#include "tindep/group.hpp"

namespace tindep {

/// Returned by weak_independence_number when no weak relation exists.
inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

/// A set of distinct group elements, kept sorted in canonical order.
class Subset {
public:
    /// Throws std::invalid_argument on duplicates or elements outside the group.
    Subset(Group group, std::vector<Element> members);
    Subset(Group group, std::vector<ElementIndex> indices);

    const Group & group() const { return group_; }
    const std::vector<Element> & members() const { return members_; }
    const std::vector<ElementIndex> & indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }

    Subset negated() const;
    ElementSet as_set() const;

    friend bool operator==(const Subset & a, const Subset & b)
    {
        return a.group_ == b.group_ && a.indices_ == b.indices_;
    }

private:
    Group group_;
    std::vector<Element> members_;
    std::vector<ElementIndex> indices_;
};

struct CoeffVector {
    std::vector<std::int64_t> lambdas;

    std::int64_t weight() const;
    friend bool operator==(const CoeffVector &, const CoeffVector &) = default;
};

enum class RelationKind { strong, weak };

/// Outcome of the three sumset conditions; true means the condition holds.
struct ConditionBreakdown {
    bool condition1 = true;  ///< 0 is not an h-fold (star) sum for 1 <= h <= t
    bool condition2 = true;  ///< h-fold and k-fold sums are disjoint for 1 <= h < k <= t - h
    bool condition3 = true;  ///< h-fold sums are all distinct for h <= t/2

    bool all() const { return condition1 && condition2 && condition3; }
    std::vector<int> failed() const;
};

struct IndependenceReport {
    bool independent = true;
    std::optional<CoeffVector> violating_vector;
    ConditionBreakdown conditions;
};

/// h * A as a bitset; h = 0 gives {0}.
ElementSet fold_sumset_set(const Subset & a, std::int64_t h);
std::vector<Element> fold_sumset(const Subset & a, std::int64_t h);

/// Sums of h pairwise distinct members; empty when h exceeds |A|.
ElementSet star_sumset_set(const Subset & a, std::int64_t h);
std::vector<Element> star_sumset(const Subset & a, std::int64_t h);

/// Least-weight nonzero coefficient vector (weak: entries in {-1,0,1}) with
/// sum lambda_i a_i = 0 and weight <= max_weight, lexicographically least
/// among those of that weight. Runs in O(m n) per call.
std::optional<CoeffVector> find_minimal_relation(const Subset & a, std::int64_t max_weight, RelationKind kind);

/// Same contract as find_minimal_relation, by literal enumeration of every
/// coefficient vector in weight-then-lexicographic order. Exponential.
std::optional<CoeffVector> find_relation_by_enumeration(const Subset & a, std::int64_t max_weight,
    RelationKind kind);

/// Evaluates the three sumset conditions on fold sums, or their star-sum analogues.
/// Levels beyond the exponent (strong) or |A| (weak) are not evaluated since
/// the outcome no longer changes there.
ConditionBreakdown check_conditions(const Subset & a, std::int64_t t, RelationKind kind);

/// Strong mode only: the shortened system that looks at equations with t or
/// t - 1 terms in total.
bool satisfies_reduced_conditions(const Subset & a, std::int64_t t);

/// Runs the relation finder and the condition triple; throws
/// std::logic_error if the two ever disagree.
IndependenceReport is_t_independent(const Subset & a, std::int64_t t);
IndependenceReport is_weakly_t_independent(const Subset & a, std::int64_t t);

/// ind(A); throws std::domain_error for the empty set.
std::int64_t independence_number(const Subset & a);

/// wind(A), or kInfinity; throws std::domain_error for the empty set.
std::int64_t weak_independence_number(const Subset & a);

bool is_sum_free(const Subset & a);

}  // namespace tindep
