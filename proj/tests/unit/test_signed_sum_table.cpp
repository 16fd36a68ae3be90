#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bridge.hpp"
#include "tindep/signed_sum_table.hpp"

using namespace tindep;
using testing_support::to_oracle;

namespace {

std::set<std::int64_t> level_values(const SignedSumTable & table, std::int64_t w)
{
    std::set<std::int64_t> out;
    for (auto x : table.level(w).to_indices())
        out.insert(x);
    return out;
}

std::vector<std::int64_t> members_of(const SignedSumTable & table)
{
    return std::vector<std::int64_t>(table.members().begin(), table.members().end());
}

void check_against_rebuild(const SignedSumTable & table)
{
    const auto o = to_oracle(table.group());
    const auto kind = to_oracle(table.kind());
    for (std::int64_t w = 0; w < table.t(); ++w)
        CHECK(level_values(table, w) == oracle::signed_sums(o, members_of(table), w, kind));
}

}  // namespace

TEST_CASE("feasibility examples")
{
    const Group z9 = Group::cyclic(9);
    const Group g8 = Group::cyclic(8);
    const Group g11 = Group::cyclic(11);
    SignedSumTable empty(z9, 3);
    CHECK_FALSE(empty.can_push(0));
    CHECK_FALSE(feasibility_extend(empty, 0));

    SignedSumTable z8(g8, 3);
    z8.push(1);
    CHECK(z8.can_push(5));
    CHECK(feasibility_extend(z8, 5));
    CHECK_FALSE(z8.can_push(1));

    SignedSumTable z11(g11, 4);
    z11.push(1);
    CHECK_FALSE(z11.can_push(3));
    CHECK_FALSE(feasibility_extend(z11, 3));
}

TEST_CASE("level structure: D_0 = {0}, nested, symmetric")
{
    std::mt19937_64 rng(4);
    for (const auto & g : abelian_groups_up_to(40))
        for (auto kind : {RelationKind::strong, RelationKind::weak}) {
            SignedSumTable table(g, 5, kind);
            for (auto x : testing_support::random_indices(g, 4, rng)) {
                table.push(x);
                CHECK(level_values(table, 0) == std::set<std::int64_t>{0});
                for (std::int64_t w = 0; w < table.t(); ++w) {
                    const auto lw = table.level(w);
                    for (auto y : lw.to_indices())
                        CHECK(lw.test(g.neg(y)));
                    if (w + 1 < table.t()) {
                        auto next = table.level(w + 1);
                        auto both = lw;
                        both &= next;
                        CHECK(both == lw);
                    }
                }
            }
        }
}

TEST_CASE("push equals brute-force rebuild")
{
    std::mt19937_64 rng(12345);
    const auto groups = abelian_groups_up_to(60);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto & g = groups[rng() % groups.size()];
        const auto t = 1 + static_cast<std::int64_t>(rng() % 6);
        const auto kind = rng() % 2 ? RelationKind::weak : RelationKind::strong;
        SignedSumTable table(g, t, kind);
        for (auto x : testing_support::random_indices(g, 1 + rng() % 6, rng)) {
            table.push(x);
            check_against_rebuild(table);
        }
    }
}

TEST_CASE("can_push agrees with the relation oracle")
{
    std::mt19937_64 rng(777);
    const auto groups = abelian_groups_up_to(60);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto & g = groups[rng() % groups.size()];
        const auto o = to_oracle(g);
        const auto t = 1 + static_cast<std::int64_t>(rng() % 6);
        const auto kind = rng() % 2 ? RelationKind::weak : RelationKind::strong;
        SignedSumTable table(g, t, kind);
        std::vector<std::int64_t> a;
        for (int step = 0; step < 6; ++step) {
            const auto x = static_cast<ElementIndex>(rng() % g.order());
            auto with = a;
            with.push_back(x);
            const bool distinct = std::find(a.begin(), a.end(), x) == a.end();
            const bool expected = distinct && oracle::independent(o, with, t, to_oracle(kind));
            CHECK(table.can_push(x) == expected);
            const auto extended = feasibility_extend(table, x);
            CHECK(extended.has_value() == expected);
            if (!expected)
                break;
            table.push(x);
            CHECK(extended->members() == table.members());
            for (std::int64_t w = 0; w < t; ++w)
                CHECK(extended->level(w) == table.level(w));
            a.push_back(x);
        }
    }
}

TEST_CASE("extend_from reuses storage and matches push")
{
    const Group g = parse_group("3x6");
    SignedSumTable parent(g, 4);
    parent.push(1);
    parent.push(8);
    SignedSumTable child(g, 4);
    child.extend_from(parent, 13);
    parent.push(13);
    CHECK(child.members() == parent.members());
    for (std::int64_t w = 0; w < 4; ++w)
        CHECK(child.level(w) == parent.level(w));
}
