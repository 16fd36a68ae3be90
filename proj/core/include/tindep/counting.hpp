#pragma once

#include <cstdint>
#include <limits>

namespace tindep {

/// Value returned by the saturating helpers once a result no longer fits.
inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t saturating_factorial(std::uint64_t k);

/// C(n, k), saturating at kSaturated.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Largest m >= 0 with 2*C(m+k, k) - 1 <= n where k = floor(t/2).  Any
/// t-independent set (t >= 2) in a group of order n has at most this size.
std::int64_t strong_counting_cap(std::uint64_t n, std::int64_t t);

/// Largest m >= 0 with sum_{h=1..k} C(m, h) + 1 <= n where k = floor(t/2).
/// Caps the size of weakly t-independent sets (t >= 2).
std::int64_t weak_counting_cap(std::uint64_t n, std::int64_t t);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Smallest prime factor of n (n >= 2).
std::uint64_t smallest_prime_factor(std::uint64_t n);

}  // namespace tindep
