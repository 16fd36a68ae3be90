#include <doctest.h>

#include <cmath>
#include <set>

#include "bridge.hpp"
#include "tindep/constructions.hpp"
#include "tindep/formulas.hpp"
#include "tindep/search.hpp"

using namespace tindep;
using testing_support::to_indices;
using testing_support::to_oracle;

namespace {

std::vector<std::int64_t> cyclic_values(const ConstructionCertificate & c)
{
    std::vector<std::int64_t> out;
    for (const auto & x : c.produced.members())
        out.push_back(x.coords.at(0));
    return out;
}

void check_certificate(const ConstructionCertificate & c)
{
    const Group & g = c.produced.group();
    CHECK_MESSAGE(c.verified, c.method << " on " << g.to_string() << ": " << c.diagnostics);
    CHECK(c.diagnostics.empty());
    CHECK(oracle::independent(to_oracle(g), to_indices(g, c.produced.members()), c.claimed_t, to_oracle(c.kind)));
    const auto size = static_cast<std::int64_t>(c.produced.size());
    if (c.relation == SizeRelation::exact)
        CHECK(size == c.expected_size);
    else
        CHECK(size >= c.expected_size);
}

// largest m with 2 sigma m^t <= n
std::int64_t floor_bound(const Group & g, std::int64_t t)
{
    const double s = static_cast<double>(sigma(g, t));
    std::int64_t m = 0;
    while (2.0 * s * std::pow(static_cast<double>(m + 1), static_cast<double>(t)) <= static_cast<double>(g.order()))
        ++m;
    return m;
}

}  // namespace

TEST_CASE("greedy B_h sequences")
{
    CHECK(bh_sequence_greedy(2, 7).members == std::vector<std::int64_t>{1, 2, 4});
    CHECK(bh_sequence_greedy(1, 5).members == std::vector<std::int64_t>{1, 2, 3, 4, 5});
    CHECK(bh_sequence_greedy(3, 2).members == std::vector<std::int64_t>{1, 2});
    CHECK(bh_sequence_greedy(2, 12).members == std::vector<std::int64_t>{1, 2, 4, 8});
    CHECK(bh_sequence_greedy(2, 0).members.empty());
    CHECK_THROWS_AS(bh_sequence_greedy(0, 5), std::domain_error);

    for (std::int64_t h = 1; h <= 4; ++h)
        for (std::int64_t n = 1; n <= 60; ++n) {
            const auto b = bh_sequence_greedy(h, n);
            CHECK(b.h == h);
            CHECK(b.N == n);
            CHECK(oracle::is_bh(b.members, h));
            CHECK(is_bh_sequence(b.members, h));
            const std::set<std::int64_t> in(b.members.begin(), b.members.end());
            for (std::int64_t x = 1; x <= n; ++x) {
                if (in.count(x))
                    continue;
                auto grown = b.members;
                grown.push_back(x);
                CHECK_FALSE(oracle::is_bh(grown, h));
            }
        }
    CHECK_FALSE(is_bh_sequence({1, 2, 3}, 2));
}

TEST_CASE("two-independent construction")
{
    const auto z7 = two_indep_construct(Group::cyclic(7));
    CHECK(cyclic_values(z7) == std::vector<std::int64_t>{1, 2, 3});
    CHECK(two_indep_construct(parse_group("2x2")).produced.empty());
    CHECK(two_indep_construct(Group::cyclic(12)).produced.size() == 5);
    for (const auto & g : abelian_groups_up_to(60)) {
        const auto c = two_indep_construct(g);
        check_certificate(c);
        CHECK(c.method == "two");
        CHECK(c.claimed_t == 2);
        CHECK(static_cast<std::int64_t>(c.produced.size()) == *s_exact(g, 2));
    }
}

TEST_CASE("three-independent construction")
{
    const auto z8 = three_indep_construct(Group::cyclic(8));
    CHECK(cyclic_values(z8) == std::vector<std::int64_t>{1, 5});
    // the divisor d = 5 beats d = 25
    CHECK(three_indep_construct(Group::cyclic(25)).produced.size() == 5);
    CHECK(three_indep_construct(parse_group("2x6")).produced.size() == 2);
    CHECK(three_indep_construct(parse_group("3x3")).produced.empty());

    for (const auto & g : abelian_groups_up_to(60)) {
        const auto c = three_indep_construct(g);
        check_certificate(c);
        CHECK(c.method == "three");
        CHECK(static_cast<std::int64_t>(c.produced.size()) == three_indep_size(g));
    }
    for (const auto & g : abelian_groups_up_to(48)) {
        const auto exact = s_exact(g, 3);
        if (!exact)
            continue;
        CHECK(static_cast<std::int64_t>(three_indep_construct(g).produced.size()) == *exact);
        CHECK(max_independent(g, 3).max_size == *exact);
    }
}

TEST_CASE("cyclic construction from B_h sequences")
{
    const auto c = cyclic_t_construct(101, 4);
    CHECK(cyclic_values(c) == std::vector<std::int64_t>{17, 21, 23, 24});
    CHECK(cyclic_values(cyclic_t_construct(20, 3)) == std::vector<std::int64_t>{3, 4, 5});
    CHECK_THROWS_AS(cyclic_t_construct(10, 2), std::domain_error);
    CHECK_THROWS_AS(cyclic_t_construct(10, 10), std::domain_error);

    for (std::int64_t n = 4; n <= 300; ++n)
        for (std::int64_t t = 3; t <= 7 && t <= n - 1; ++t) {
            const auto cert = cyclic_t_construct(n, t);
            check_certificate(cert);
            CHECK(cert.method == "cyclic");
            for (auto a : cyclic_values(cert)) {
                CHECK(a > 0);
                CHECK(a * t < n);
            }
        }
}

TEST_CASE("greedy t-independent construction")
{
    CHECK(greedy_t_construct(parse_group("2x2"), 2).produced.empty());
    CHECK(torsion_greedy_floor(Group::cyclic(100), 4) == 1);
    CHECK(greedy_t_construct(Group::cyclic(100), 4).produced.size() >= 1);
    CHECK_THROWS_AS(greedy_t_construct(Group::cyclic(10), 0), std::domain_error);

    for (const auto & g : abelian_groups_up_to(120))
        for (std::int64_t t = 1; t <= 5; ++t) {
            const auto c = greedy_t_construct(g, t);
            check_certificate(c);
            CHECK(torsion_greedy_floor(g, t) == floor_bound(g, t));
            CHECK(static_cast<std::int64_t>(c.produced.size()) >= torsion_greedy_floor(g, t));
            const auto idx = to_indices(g, c.produced.members());
            for (std::size_t k = 1; k < idx.size(); ++k)
                CHECK(oracle::independent(to_oracle(g), std::vector<std::int64_t>(idx.begin(), idx.begin() + k), t,
                    oracle::Kind::strong));
        }
}

TEST_CASE("greedy weak construction")
{
    const auto z16 = greedy_weak_construct(Group::cyclic(16), 2);
    CHECK(z16.produced.size() >= 2);
    for (const auto & g : abelian_groups_up_to(60)) {
        CHECK(static_cast<std::int64_t>(greedy_weak_construct(g, 1).produced.size()) ==
            static_cast<std::int64_t>(g.order()) - 1);
        for (std::int64_t t = 1; t <= 6; ++t) {
            const auto c = greedy_weak_construct(g, t);
            check_certificate(c);
            CHECK(c.kind == RelationKind::weak);
            if (t >= 2) {
                const double bound = std::pow(std::tgamma(static_cast<double>(t) + 1.0) *
                                             static_cast<double>(g.order()) / std::pow(2.0, static_cast<double>(t)),
                                         1.0 / static_cast<double>(t)) -
                    static_cast<double>(t) / 2.0;
                CHECK(static_cast<double>(c.produced.size()) >= bound - 1e-9);
            }
        }
    }
}
