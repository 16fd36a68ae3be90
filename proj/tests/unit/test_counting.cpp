#include <doctest.h>

#include "tindep/counting.hpp"

using namespace tindep;

TEST_CASE("binomial matches Pascal's triangle")
{
    std::uint64_t row[40] = {1};
    for (std::uint64_t n = 1; n < 40; ++n) {
        for (std::uint64_t k = n; k > 0; --k)
            row[k] += row[k - 1];
        for (std::uint64_t k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == row[k]);
    }
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(200, 100) == kSaturated);
}

TEST_CASE("saturating arithmetic")
{
    CHECK(saturating_add(kSaturated - 1, 5) == kSaturated);
    CHECK(saturating_mul(1ULL << 40, 1ULL << 30) == kSaturated);
    CHECK(saturating_pow(3, 4) == 81);
    CHECK(saturating_pow(10, 30) == kSaturated);
    CHECK(saturating_factorial(5) == 120);
    CHECK(saturating_factorial(30) == kSaturated);
}

TEST_CASE("strong counting cap is the largest m with 2 C(m+k, k) - 1 <= n")
{
    // Z_11, t = 4: 2 C(4,2) - 1 = 11 fits, 2 C(5,2) - 1 = 19 does not
    CHECK(strong_counting_cap(11, 4) == 2);
    for (std::uint64_t n = 2; n <= 300; ++n)
        for (std::int64_t t = 2; t <= 7; ++t) {
            const auto k = static_cast<std::uint64_t>(t / 2);
            const auto m = static_cast<std::uint64_t>(strong_counting_cap(n, t));
            CHECK(2 * binomial(m + k, k) - 1 <= n);
            CHECK(2 * binomial(m + 1 + k, k) - 1 > n);
        }
}

TEST_CASE("weak counting cap is the largest m with sum C(m, h) + 1 <= n")
{
    for (std::uint64_t n = 2; n <= 300; ++n)
        for (std::int64_t t = 2; t <= 7; ++t) {
            auto lhs = [&](std::uint64_t m) {
                std::uint64_t s = 1;
                for (std::int64_t h = 1; h <= t / 2; ++h)
                    s += binomial(m, static_cast<std::uint64_t>(h));
                return s;
            };
            const auto m = static_cast<std::uint64_t>(weak_counting_cap(n, t));
            CHECK(lhs(m) <= n);
            CHECK(lhs(m + 1) > n);
        }
}

TEST_CASE("number theory helpers")
{
    CHECK(gcd_u64(12, 18) == 6);
    CHECK(lcm_u64(4, 6) == 12);
    CHECK(smallest_prime_factor(35) == 5);
    CHECK(smallest_prime_factor(97) == 97);
    CHECK(smallest_prime_factor(2) == 2);
}
