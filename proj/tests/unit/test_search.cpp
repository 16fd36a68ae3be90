#include <doctest.h>

#include "bridge.hpp"
#include "tindep/counting.hpp"
#include "tindep/formulas.hpp"
#include "tindep/search.hpp"

using namespace tindep;
using testing_support::to_indices;
using testing_support::to_oracle;

namespace {

void check_witness(const Group & g, const SearchResult & r, std::int64_t t, RelationKind kind)
{
    CHECK(static_cast<std::int64_t>(r.witness.size()) == r.max_size);
    CHECK(std::is_sorted(r.witness.begin(), r.witness.end(),
        [&](const Element & a, const Element & b) { return g.index_of(a) < g.index_of(b); }));
    CHECK(oracle::independent(to_oracle(g), to_indices(g, r.witness), t, to_oracle(kind)));
}

}  // namespace

TEST_CASE("strong search examples")
{
    CHECK(max_independent(Group::cyclic(9), 3).max_size == 1);
    CHECK(max_independent(Group::cyclic(4), 3).max_size == 1);
    CHECK(max_independent(Group::cyclic(7), 2).max_size == 3);
    CHECK(max_independent(Group::cyclic(11), 4).max_size == 1);
    CHECK(max_independent(parse_group("3x3"), 3).max_size == 0);
    CHECK(max_independent(Group::cyclic(12), 0).max_size == 12);
    CHECK(max_independent(Group::cyclic(12), 1).max_size == 11);
    CHECK(max_independent(Group::cyclic(12), 12).max_size == 0);
    CHECK(max_independent(Group::cyclic(9), 3).status == SearchStatus::exact);
    CHECK_THROWS_AS(max_independent(Group::cyclic(9), -1), std::domain_error);
}

TEST_CASE("weak search examples")
{
    CHECK(max_weakly_independent(Group::cyclic(10), 2).max_size == 5);
    CHECK(max_weakly_independent(Group::cyclic(5), 2).max_size == 2);
    for (const auto & g : abelian_groups_up_to(30))
        CHECK(max_weakly_independent(g, 1).max_size == static_cast<std::int64_t>(g.order()) - 1);
}

TEST_CASE("sum-free search examples")
{
    CHECK(max_sum_free(Group::cyclic(7)).max_size == 2);
    CHECK(max_sum_free(Group::cyclic(2)).max_size == 1);
    CHECK(max_sum_free(Group::cyclic(10)).max_size == 5);
}

TEST_CASE("witness is lexicographically least")
{
    const auto r = max_independent(Group::cyclic(12), 2);
    CHECK(r.max_size == 5);
    CHECK(format_element_list(Group::cyclic(12), r.witness) == "1,2,3,4,5");
    const auto s = max_independent(Group::cyclic(101), 4);
    CHECK(s.witness.front() == Element{{1}});
}

TEST_CASE("branch and bound equals the all-subsets oracle")
{
    for (const auto & g : abelian_groups_up_to(20)) {
        const auto o = to_oracle(g);
        for (std::int64_t t = 0; t <= 5; ++t) {
            const auto s = max_independent(g, t);
            CHECK(s.max_size == oracle::max_independent_size(o, t, oracle::Kind::strong));
            check_witness(g, s, t, RelationKind::strong);
            const auto w = max_weakly_independent(g, t);
            CHECK(w.max_size == oracle::max_independent_size(o, t, oracle::Kind::weak));
            check_witness(g, w, t, RelationKind::weak);
        }
        if (g.order() <= 16) {
            const auto sf = max_sum_free(g);
            CHECK(sf.max_size == oracle::max_sum_free_size(o));
            CHECK(oracle::sum_free(o, to_indices(g, sf.witness)));
        }
    }
}

TEST_CASE("results do not depend on threads, pruning or budget")
{
    for (const auto & g : abelian_groups_up_to(40))
        for (std::int64_t t = 2; t <= 5; ++t) {
            const auto base = max_independent(g, t);
            const auto wbase = max_weakly_independent(g, t);
            for (unsigned threads : {2U, 5U}) {
                SearchOptions o;
                o.threads = threads;
                const auto r = max_independent(g, t, o);
                CHECK(r.max_size == base.max_size);
                CHECK(r.witness == base.witness);
                const auto w = max_weakly_independent(g, t, o);
                CHECK(w.max_size == wbase.max_size);
                CHECK(w.witness == wbase.witness);
            }
            SearchOptions plain;
            plain.negation_pruning = false;
            const auto r = max_independent(g, t, plain);
            CHECK(r.max_size == base.max_size);
            CHECK(r.witness == base.witness);
            CHECK(max_weakly_independent(g, t, plain).witness == wbase.witness);

            SearchOptions roomy;
            roomy.budget = base.nodes + 1;
            CHECK(max_independent(g, t, roomy).witness == base.witness);
        }
    for (const auto & g : abelian_groups_up_to(30)) {
        SearchOptions o;
        o.threads = 3;
        CHECK(max_sum_free(g, o).witness == max_sum_free(g).witness);
        o.negation_pruning = false;
        CHECK(max_sum_free(g, o).max_size == max_sum_free(g).max_size);
    }
}

TEST_CASE("budget exhaustion is reported, never exact")
{
    SearchOptions tiny;
    tiny.budget = 5;
    const auto r = max_independent(Group::cyclic(60), 4, tiny);
    CHECK(r.status == SearchStatus::budget_exhausted);
    CHECK(r.max_size <= max_independent(Group::cyclic(60), 4).max_size);
    CHECK(oracle::independent(to_oracle(Group::cyclic(60)), to_indices(Group::cyclic(60), r.witness), 4,
        oracle::Kind::strong));
    CHECK(max_weakly_independent(Group::cyclic(60), 4, tiny).status == SearchStatus::budget_exhausted);
    CHECK(max_sum_free(Group::cyclic(60), tiny).status == SearchStatus::budget_exhausted);
    CHECK(to_string(SearchStatus::exact) == "exact");
    CHECK(to_string(SearchStatus::budget_exhausted) == "budget_exhausted");
}

TEST_CASE("monotone in t, weak at least strong, counting cap respected")
{
    for (const auto & g : abelian_groups_up_to(48)) {
        std::int64_t prev_s = static_cast<std::int64_t>(g.order());
        std::int64_t prev_w = prev_s;
        for (std::int64_t t = 0; t <= 6; ++t) {
            const auto s = max_independent(g, t).max_size;
            const auto w = max_weakly_independent(g, t).max_size;
            CHECK(s <= prev_s);
            CHECK(w <= prev_w);
            CHECK(w >= s);
            if (t >= 2) {
                CHECK(s <= strong_counting_cap(g.order(), t));
                CHECK(w <= weak_counting_cap(g.order(), t));
            }
            prev_s = s;
            prev_w = w;
        }
    }
}

TEST_CASE("groups Z_2^k x Z_kappa stay below kappa")
{
    for (std::int64_t k = 1; k <= 3; ++k)
        for (std::int64_t kappa = 6; kappa <= 14; kappa += 2) {
            std::vector<std::int64_t> f(static_cast<std::size_t>(k), 2);
            f.push_back(kappa);
            const Group g(f);
            for (std::int64_t t = 4; t < kappa && t <= 5; ++t)
                CHECK(max_independent(g, t).max_size <= kappa);
        }
}
