#include <doctest.h>

#include <cmath>

#include "bridge.hpp"
#include "tindep/counting.hpp"
#include "tindep/formulas.hpp"
#include "tindep/search.hpp"

using namespace tindep;

namespace {

bool elementary(const Group & g, std::int64_t p) { return g.exponent() == p; }

void check_report_shape(const BoundsReport & b)
{
    CHECK(b.lower <= b.upper);
    CHECK_FALSE(b.provenance.empty());
    if (b.exact) {
        CHECK(b.lower == *b.exact);
        CHECK(b.upper == *b.exact);
    }
    bool has_lower = false;
    bool has_upper = false;
    for (const auto & e : b.provenance) {
        CHECK_FALSE(e.source.empty());
        switch (e.side) {
        case BoundSide::lower:
            has_lower = has_lower || e.value == b.lower;
            CHECK(e.value <= b.lower);
            break;
        case BoundSide::upper:
            has_upper = has_upper || e.value == b.upper;
            CHECK(e.value >= b.upper);
            break;
        case BoundSide::exact:
            has_lower = has_upper = true;
            CHECK(b.exact == e.value);
            break;
        }
    }
    CHECK(has_lower);
    CHECK(has_upper);
}

}  // namespace

TEST_CASE("exact values of s")
{
    CHECK(s_exact(parse_group("2x2x2"), 2) == 0);
    CHECK(s_exact(Group::cyclic(8), 3) == 2);
    CHECK(s_exact(Group::cyclic(49), 3) == 8);
    CHECK_FALSE(s_exact(Group::cyclic(7), 5));
    CHECK(s_exact(Group::cyclic(7), 0) == 7);
    CHECK(s_exact(Group::cyclic(7), 1) == 6);
    CHECK(s_exact(Group::cyclic(7), 7) == 0);
    CHECK(s_exact(parse_group("3x3"), 3) == 0);
    CHECK(s_exact(Group::cyclic(12), 2) == 5);
    CHECK_THROWS_AS(s_exact(Group::cyclic(12), -1), std::domain_error);
}

TEST_CASE("s(Z_n, 3) closed form")
{
    CHECK(s_Zn3(12) == 3);
    CHECK(s_Zn3(35) == 7);
    CHECK(s_Zn3(25) == 5);
    CHECK(s_Zn3(9) == 1);
    CHECK(s_Zn3(4) == 1);
    CHECK_THROWS_AS(s_Zn3(1), std::domain_error);
    for (std::int64_t n = 2; n <= 60; ++n)
        CHECK(s_Zn3(n) == max_independent(Group::cyclic(n), 3).max_size);
}

TEST_CASE("bounds on s")
{
    CHECK(s_bounds(Group::cyclic(11), 4).upper == 2);
    CHECK(s_bounds(Group::cyclic(100), 4).lower >= 1);

    // exponent 21 is odd with no prime divisor 5 mod 6: an interval, not a value
    const auto gap = s_bounds(parse_group("3x21"), 3);
    CHECK_FALSE(gap.exact);
    CHECK(gap.lower == 9);
    CHECK(gap.upper == 10);
    CHECK(max_independent(parse_group("3x21"), 3).max_size >= 9);

    for (const auto & g : abelian_groups_up_to(48))
        for (std::int64_t t = 0; t <= 6; ++t) {
            const auto b = s_bounds(g, t);
            check_report_shape(b);
            if (t <= 5) {
                const auto r = max_independent(g, t);
                REQUIRE(r.status == SearchStatus::exact);
                CHECK_MESSAGE(b.admits(r.max_size), g.to_string() << " t=" << t);
                if (const auto e = s_exact(g, t))
                    CHECK(*e == r.max_size);
            }
            if (t >= 2)
                CHECK(b.upper <= strong_counting_cap(g.order(), t));
        }
}

TEST_CASE("three-independence lies between n/9 and n/4")
{
    for (const auto & g : abelian_groups_up_to(48)) {
        if (elementary(g, 2) || elementary(g, 3))
            continue;
        const auto s = max_independent(g, 3).max_size;
        const auto n = static_cast<std::int64_t>(g.order());
        CHECK(9 * s >= n);
        CHECK(4 * s <= n);
    }
}

TEST_CASE("exact values of w")
{
    CHECK(w_exact_small_t(Group::cyclic(10), 2) == 5);
    CHECK(w_exact_small_t(Group::cyclic(5), 2) == 2);
    CHECK(w_exact_small_t(parse_group("2x4"), 0) == 8);
    CHECK(w_exact_small_t(parse_group("2x4"), 1) == 7);
    CHECK_FALSE(w_exact_small_t(parse_group("2x4"), 3));
    for (const auto & g : abelian_groups_up_to(36))
        CHECK(w_exact_small_t(g, 2) == max_weakly_independent(g, 2).max_size);
}

TEST_CASE("bounds on w")
{
    CHECK(w_bounds(Group::cyclic(16), 2).lower >= 2);
    for (const auto & g : abelian_groups_up_to(36))
        for (std::int64_t t = 0; t <= 6; ++t) {
            const auto b = w_bounds(g, t);
            check_report_shape(b);
            if (t >= 2) {
                CHECK(b.lower >= static_cast<std::int64_t>(g.rank()));
                CHECK(b.upper <= weak_counting_cap(g.order(), t));
            }
            if (t <= 5) {
                const auto r = max_weakly_independent(g, t);
                REQUIRE(r.status == SearchStatus::exact);
                CHECK_MESSAGE(b.admits(r.max_size), g.to_string() << " t=" << t);
            }
        }
}

TEST_CASE("bounds on sf")
{
    const auto z7 = sf_bounds(Group::cyclic(7));
    CHECK(z7.lower == 2);
    CHECK(z7.upper == 3);
    const auto z2 = sf_bounds(Group::cyclic(2));
    CHECK(z2.lower == 1);
    CHECK(z2.upper == 1);
    CHECK(sf_bounds(Group::cyclic(10)).upper == 5);
    for (const auto & g : abelian_groups_up_to(40)) {
        const auto b = sf_bounds(g);
        check_report_shape(b);
        const auto n = static_cast<std::int64_t>(g.order());
        CHECK(7 * b.lower >= 2 * n);
        CHECK(b.upper == n / 2);
        CHECK(b.admits(max_sum_free(g).max_size));
    }
}

TEST_CASE("bound side names")
{
    CHECK(to_string(BoundSide::lower) == "lower");
    CHECK(to_string(BoundSide::upper) == "upper");
    CHECK(to_string(BoundSide::exact) == "exact");
}
