#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tindep/group.hpp"
#include "tindep/independence.hpp"

namespace tindep {

/// Positive integers in [1, N] whose h-term multiset sums are pairwise distinct.
struct BhSequence {
    std::int64_t h = 1;
    std::int64_t N = 0;
    std::vector<std::int64_t> members;
};

/// Admits 1, 2, 3, ... in turn whenever the B_h property survives. The
/// result is checked by brute force before it is returned.
BhSequence bh_sequence_greedy(std::int64_t h, std::int64_t N);

/// Brute-force test over every h-multiset.
bool is_bh_sequence(const std::vector<std::int64_t> & members, std::int64_t h);

enum class SizeRelation { exact, at_least };

struct ConstructionCertificate {
    std::string method;
    std::int64_t claimed_t = 0;
    RelationKind kind = RelationKind::strong;
    Subset produced;
    std::int64_t expected_size = 0;
    SizeRelation relation = SizeRelation::exact;
    bool verified = false;
    std::string diagnostics;  ///< empty when verified
};

/// One of each pair {x, -x} outside Ord(G, 2): a largest 2-independent set.
ConstructionCertificate two_indep_construct(const Group & g);

/// Coset construction of a 3-independent set, chosen by the exponent mod 4.
/// For odd exponents every odd divisor d >= 3 is tried and the largest
/// resulting set kept (smallest d on ties).
ConstructionCertificate three_indep_construct(const Group & g);

/// {floor(n/t) - b : b in B} for a greedy B_{t/2}-sequence B. Requires 3 <= t <= n - 1.
ConstructionCertificate cyclic_t_construct(std::int64_t n, std::int64_t t);

/// Repeatedly adds the least element avoiding every h-th root (h <= t) of
/// the signed sums of weight at most t.
ConstructionCertificate greedy_t_construct(const Group & g, std::int64_t t);

/// Repeatedly adds the least element that is neither 0, a member, nor a
/// signed sum of at most t - 1 distinct members.
ConstructionCertificate greedy_weak_construct(const Group & g, std::int64_t t);

/// Largest m with 2 sigma m^t <= n: the floor of (n / (2 sigma))^(1/t).
std::int64_t torsion_greedy_floor(const Group & g, std::int64_t t);

/// Largest m >= 0 with n > sigma * C(2m - 2 + t, t) (m = 0 when none).
std::int64_t torsion_greedy_binomial(const Group & g, std::int64_t t);

/// Largest m >= 0 with n > sum_{h=1..t} C(2m - 2, h) + 1.
std::int64_t weak_greedy_binomial(std::uint64_t n, std::int64_t t);

/// Best of the coset constructions for t = 3, as a size only.
std::int64_t three_indep_size(const Group & g);

}  // namespace tindep
