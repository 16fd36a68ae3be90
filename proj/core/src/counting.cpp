#include "tindep/counting.hpp"

#include <stdexcept>

namespace tindep {

namespace {
__extension__ using u128 = unsigned __int128;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    if (a > kSaturated - b)
        return kSaturated;
    return a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    if (a > kSaturated / b)
        return kSaturated;
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        result = saturating_mul(result, base);
        if (result == kSaturated)
            break;
    }
    return result;
}

std::uint64_t saturating_factorial(std::uint64_t k)
{
    std::uint64_t result = 1;
    for (std::uint64_t i = 2; i <= k; ++i)
        result = saturating_mul(result, i);
    return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    u128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays exact at every step
        result = result * (n - k + i) / i;
        if (result > kSaturated)
            return kSaturated;
    }
    return static_cast<std::uint64_t>(result);
}

std::int64_t strong_counting_cap(std::uint64_t n, std::int64_t t)
{
    if (t < 2)
        throw std::domain_error("strong_counting_cap requires t >= 2");
    const auto k = static_cast<std::uint64_t>(t / 2);
    std::int64_t m = 0;
    for (;;) {
        const auto next = static_cast<std::uint64_t>(m + 1);
        const std::uint64_t lhs = saturating_mul(2, binomial(next + k, k));
        if (lhs == kSaturated || lhs - 1 > n)
            return m;
        ++m;
    }
}

std::int64_t weak_counting_cap(std::uint64_t n, std::int64_t t)
{
    if (t < 2)
        throw std::domain_error("weak_counting_cap requires t >= 2");
    const auto k = static_cast<std::uint64_t>(t / 2);
    std::int64_t m = 0;
    for (;;) {
        const auto next = static_cast<std::uint64_t>(m + 1);
        std::uint64_t total = 1;
        for (std::uint64_t h = 1; h <= k; ++h)
            total = saturating_add(total, binomial(next, h));
        if (total > n)
            return m;
        ++m;
    }
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    return saturating_mul(a / gcd_u64(a, b), b);
}

std::uint64_t smallest_prime_factor(std::uint64_t n)
{
    if (n < 2)
        throw std::domain_error("smallest_prime_factor requires n >= 2");
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return p;
    return n;
}

}  // namespace tindep
