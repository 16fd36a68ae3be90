#include "tindep/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "tindep/constructions.hpp"
#include "tindep/counting.hpp"

namespace tindep {

std::string to_string(BoundSide side)
{
    switch (side) {
    case BoundSide::lower:
        return "lower";
    case BoundSide::upper:
        return "upper";
    case BoundSide::exact:
        return "exact";
    }
    return "unknown";
}

namespace {

std::int64_t order_of(const Group & g) { return static_cast<std::int64_t>(g.order()); }

std::int64_t ord2(const Group & g) { return static_cast<std::int64_t>(ord_size(g, 2)); }

// smallest prime p = 5 (mod 6) dividing n, or 0
std::int64_t smallest_prime_5_mod_6(std::int64_t n)
{
    for (std::int64_t p = 5; p <= n; ++p) {
        if (n % p != 0 || p % 6 != 5)
            continue;
        if (smallest_prime_factor(static_cast<std::uint64_t>(p)) == static_cast<std::uint64_t>(p))
            return p;
    }
    return 0;
}

// smallest divisor d = 2 (mod 3) of n, or 0
std::int64_t smallest_divisor_2_mod_3(std::int64_t n)
{
    for (std::int64_t d = 2; d <= n; ++d)
        if (n % d == 0 && d % 3 == 2)
            return d;
    return 0;
}

class Collector {
public:
    void lower(std::int64_t v, std::string source) { add(BoundSide::lower, v, std::move(source)); }
    void upper(std::int64_t v, std::string source) { add(BoundSide::upper, v, std::move(source)); }
    void exact(std::int64_t v, std::string source) { add(BoundSide::exact, v, std::move(source)); }

    BoundsReport finish(std::int64_t floor_value, std::int64_t ceiling_value)
    {
        BoundsReport out;
        out.lower = floor_value;
        out.upper = ceiling_value;
        std::optional<std::int64_t> exact;
        for (const auto & e : entries_) {
            if (e.side == BoundSide::lower)
                out.lower = std::max(out.lower, e.value);
            else if (e.side == BoundSide::upper)
                out.upper = std::min(out.upper, e.value);
            else if (exact && *exact != e.value)
                throw std::logic_error("conflicting exact values from " + e.source);
            else
                exact = e.value;
        }
        if (out.lower > out.upper)
            throw std::logic_error("lower bound exceeds upper bound");
        if (exact) {
            if (!out.admits(*exact))
                throw std::logic_error("exact value falls outside its bounds");
            out.lower = out.upper = *exact;
        }
        if (out.lower == out.upper)
            out.exact = out.lower;
        out.provenance = std::move(entries_);
        return out;
    }

private:
    void add(BoundSide side, std::int64_t v, std::string source)
    {
        entries_.push_back(BoundEntry{side, v, std::move(source)});
    }

    std::vector<BoundEntry> entries_;
};

// largest m >= 0 with pred(m) true, for a predicate that holds on an initial segment
template <typename Pred>
std::int64_t largest_with(Pred pred)
{
    std::int64_t m = 0;
    while (pred(m + 1))
        ++m;
    return m;
}

std::int64_t s3_upper_divisor(const Group & g)
{
    const auto n = order_of(g);
    const auto p = smallest_divisor_2_mod_3(n);
    return p == 0 ? n / 6 : n * (p + 1) / (6 * p);
}

}  // namespace

std::optional<std::int64_t> s_exact(const Group & g, std::int64_t t)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    const auto n = order_of(g);
    const auto kappa = g.exponent();
    if (t == 0)
        return n;
    if (t == 1)
        return n - 1;
    if (t >= n || kappa <= t)
        return 0;
    if (t == 2)
        return (n - ord2(g)) / 2;
    if (t == 3) {
        if (kappa % 4 == 0)
            return n / 4;
        if (kappa % 2 == 0)
            return (n - ord2(g)) / 4;
        if (const auto p = smallest_prime_5_mod_6(kappa); p != 0)
            return n / p * (p + 1) / 6;
        if (g.is_cyclic())
            return s_Zn3(n);
    }
    return std::nullopt;
}

std::int64_t s_Zn3(std::int64_t n)
{
    if (n < 2)
        throw std::domain_error("s(Z_n, 3) requires n >= 2");
    if (n % 2 == 0)
        return n / 4;
    if (const auto p = smallest_prime_5_mod_6(n); p != 0)
        return n / p * (p + 1) / 6;
    return n / 6;
}

BoundsReport s_bounds(const Group & g, std::int64_t t)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    const auto n = order_of(g);
    const auto kappa = g.exponent();
    Collector c;
    if (const auto e = s_exact(g, t))
        c.exact(*e, t <= 1 ? "trivial levels" : (kappa <= t || t >= n) ? "exponent at most t" : "closed form");
    if (t < 2)
        return c.finish(0, n);

    const auto k = t / 2;
    c.upper(strong_counting_cap(g.order(), t), "sumset counting (binomial)");
    const auto kf = saturating_factorial(static_cast<std::uint64_t>(k));
    c.upper(largest_with([&](std::int64_t m) {
        return saturating_mul(2, saturating_pow(static_cast<std::uint64_t>(m), k)) <
            saturating_mul(kf, static_cast<std::uint64_t>(n));
    }),
        "sumset counting (power)");
    c.upper((n - ord2(g)) / 2, t == 2 ? "x/-x pairing" : "monotone in t (t = 2)");
    if (t >= 3) {
        const auto tag = [t](const char * name) { return t == 3 ? std::string(name) : std::string(name) + " (t = 3)"; };
        c.upper(s3_upper_divisor(g), tag("smallest divisor 2 mod 3"));
        c.upper(n / 4, tag("quarter bound"));
        if (kappa % 4 == 2)
            c.upper((n - ord2(g)) / 4, tag("exponent 2 mod 4"));
    }

    c.lower(torsion_greedy_floor(g, t), "torsion greedy");
    c.lower(torsion_greedy_binomial(g, t), "torsion greedy (binomial)");
    if (t == 2)
        c.lower((n - ord2(g)) / 2, "x/-x pairing");
    if (t == 3) {
        c.lower(three_indep_size(g), "coset construction");
        if (kappa > 3)
            c.lower((n + 8) / 9, "ninth bound");
    }
    if (g.is_cyclic() && t >= 3 && t <= n - 1) {
        const auto N = (n / t) / ((t + 1) / 2);
        c.lower(static_cast<std::int64_t>(bh_sequence_greedy(t / 2, N).members.size()), "cyclic B_h construction");
    }
    return c.finish(0, n);
}

std::optional<std::int64_t> w_exact_small_t(const Group & g, std::int64_t t)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    const auto n = order_of(g);
    if (t == 0)
        return n;
    if (t == 1)
        return n - 1;
    if (t == 2)
        return (n + ord2(g) - 2) / 2;
    return std::nullopt;
}

BoundsReport w_bounds(const Group & g, std::int64_t t)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    const auto n = order_of(g);
    const auto kappa = g.exponent();
    Collector c;
    if (const auto e = w_exact_small_t(g, t))
        c.exact(*e, t <= 1 ? "trivial levels" : "x/-x pairing");
    if (t < 2)
        return c.finish(0, n);

    const auto k = t / 2;
    c.upper(weak_counting_cap(g.order(), t), "star sumset counting (binomial)");
    const auto bound = saturating_mul(saturating_pow(2, k),
        saturating_mul(saturating_factorial(static_cast<std::uint64_t>(k)), static_cast<std::uint64_t>(n)));
    c.upper(largest_with([&](std::int64_t w) {
        return 2 * w <= t || saturating_pow(static_cast<std::uint64_t>(2 * w - t), k) < bound;
    }),
        "star sumset counting (power)");
    c.upper(n - 1, "zero excluded");
    if (t >= 3)
        c.upper((n + ord2(g) - 2) / 2, "monotone in t (t = 2)");

    c.lower(weak_greedy_binomial(g.order(), t), "weak greedy (binomial)");
    const auto tf = saturating_factorial(static_cast<std::uint64_t>(t));
    c.lower(largest_with([&](std::int64_t m) {
        return saturating_pow(static_cast<std::uint64_t>(2 * m - 2 + t), t) <
            saturating_mul(tf, static_cast<std::uint64_t>(n));
    }),
        "weak greedy (power)");
    c.lower(static_cast<std::int64_t>(g.rank()), "invariant factor basis");
    c.lower(largest_with([&](std::int64_t m) {
        return saturating_pow(static_cast<std::uint64_t>(kappa), m - 1) < static_cast<std::uint64_t>(n);
    }),
        "log n / log exponent");
    return c.finish(0, n);
}

BoundsReport sf_bounds(const Group & g)
{
    const auto n = order_of(g);
    const auto kappa = g.exponent();
    Collector c;
    c.upper(n / 2, "half bound");
    c.lower((2 * n + 6) / 7, "two-sevenths bound");
    std::int64_t best = 0, best_d = 0;
    for (std::int64_t d = 2; d <= kappa; ++d) {
        if (kappa % d != 0)
            continue;
        const auto per_coset = d % 2 == 0 ? d / 2 : (d + 1) / 3;
        if (per_coset * (n / d) > best) {
            best = per_coset * (n / d);
            best_d = d;
        }
    }
    if (best_d != 0)
        c.lower(best, "lift from Z_" + std::to_string(best_d));
    return c.finish(0, n);
}

}  // namespace tindep
