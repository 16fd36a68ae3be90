#include "tindep/constructions.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "tindep/counting.hpp"
#include "tindep/signed_sum_table.hpp"

namespace tindep {

namespace {

// multiset sums of exactly j members, for j = 0..h, as flags over [0, h N]
std::vector<std::vector<char>> empty_sum_layers(std::int64_t h, std::int64_t N)
{
    std::vector<std::vector<char>> layers(static_cast<std::size_t>(h) + 1,
        std::vector<char>(static_cast<std::size_t>(h * std::max<std::int64_t>(N, 0)) + 1, 0));
    layers[0][0] = 1;
    return layers;
}

}  // namespace

bool is_bh_sequence(const std::vector<std::int64_t> & members, std::int64_t h)
{
    if (h < 1)
        throw std::domain_error("B_h requires h >= 1");
    std::set<std::int64_t> sums;
    std::vector<std::size_t> pick(static_cast<std::size_t>(h), 0);
    if (members.empty())
        return true;
    // nondecreasing index tuples enumerate the h-multisets
    for (;;) {
        std::int64_t s = 0;
        for (const auto i : pick)
            s += members[i];
        if (!sums.insert(s).second)
            return false;
        std::size_t k = pick.size();
        while (k > 0 && pick[k - 1] + 1 == members.size())
            --k;
        if (k == 0)
            return true;
        const auto next = pick[k - 1] + 1;
        for (std::size_t j = k - 1; j < pick.size(); ++j)
            pick[j] = next;
    }
}

BhSequence bh_sequence_greedy(std::int64_t h, std::int64_t N)
{
    if (h < 1)
        throw std::domain_error("B_h requires h >= 1");
    BhSequence out{h, N, {}};
    if (N < 1)
        return out;
    auto layers = empty_sum_layers(h, N);
    std::vector<std::int64_t> fresh;
    for (std::int64_t k = 1; k <= N; ++k) {
        // sums using k at least once: c copies of k plus an (h - c)-sum of the old members
        fresh.clear();
        for (std::int64_t c = 1; c <= h; ++c) {
            const auto & base = layers[h - c];
            for (std::size_t s = 0; s < base.size(); ++s)
                if (base[s])
                    fresh.push_back(static_cast<std::int64_t>(s) + c * k);
        }
        std::sort(fresh.begin(), fresh.end());
        bool ok = std::adjacent_find(fresh.begin(), fresh.end()) == fresh.end();
        for (std::size_t i = 0; ok && i < fresh.size(); ++i)
            ok = !layers[h][fresh[i]];
        if (!ok)
            continue;
        out.members.push_back(k);
        for (std::int64_t j = h; j >= 1; --j)
            for (std::int64_t c = 1; c <= j; ++c) {
                auto & base = layers[j - c];
                for (std::size_t s = 0; s < base.size(); ++s)
                    if (base[s] && s + static_cast<std::size_t>(c * k) < layers[j].size())
                        layers[j][s + static_cast<std::size_t>(c * k)] = 1;
            }
    }
    if (!is_bh_sequence(out.members, h))
        throw std::logic_error("greedy B_h sequence failed verification");
    return out;
}

namespace {

ConstructionCertificate certify(std::string method, std::int64_t t, RelationKind kind, Subset produced,
    std::int64_t expected, SizeRelation relation)
{
    ConstructionCertificate cert{std::move(method), t, kind, std::move(produced), expected, relation, false, {}};
    const auto report = kind == RelationKind::weak ? is_weakly_t_independent(cert.produced, t)
                                                   : is_t_independent(cert.produced, t);
    const auto size = static_cast<std::int64_t>(cert.produced.size());
    if (!report.independent) {
        cert.diagnostics = "produced set is not " + std::string(kind == RelationKind::weak ? "weakly " : "") +
            std::to_string(t) + "-independent in " + cert.produced.group().to_string();
    } else if (relation == SizeRelation::exact ? size != expected : size < expected) {
        cert.diagnostics = "produced " + std::to_string(size) + " elements, expected " +
            (relation == SizeRelation::exact ? "" : "at least ") + std::to_string(expected);
    }
    cert.verified = cert.diagnostics.empty();
    return cert;
}

std::vector<ElementIndex> two_indep_indices(const Group & g)
{
    std::vector<ElementIndex> out;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        const auto x = static_cast<ElementIndex>(i);
        if (g.element_order(x) > 2 && x < g.neg(x))
            out.push_back(x);
    }
    return out;
}

std::int64_t last_coord(const Group & g, ElementIndex x)
{
    return static_cast<std::int64_t>(x % static_cast<std::uint64_t>(g.exponent()));
}

// odd divisor d >= 3 of the exponent maximizing floor((d + 1) / 6) n / d, smallest on ties
std::int64_t best_odd_divisor(const Group & g)
{
    const auto kappa = g.exponent();
    const auto n = static_cast<std::int64_t>(g.order());
    std::int64_t best = kappa, best_size = -1;
    for (std::int64_t d = 3; d <= kappa; d += 2) {
        if (kappa % d != 0)
            continue;
        const auto size = (d + 1) / 6 * (n / d);
        if (size > best_size) {
            best = d;
            best_size = size;
        }
    }
    return best;
}

}  // namespace

std::int64_t three_indep_size(const Group & g)
{
    const auto kappa = g.exponent();
    const auto n = static_cast<std::int64_t>(g.order());
    if (kappa % 4 == 0)
        return n / 4;
    if (kappa % 2 == 0)
        return (n - static_cast<std::int64_t>(ord_size(g, 2))) / 4;
    const auto d = best_odd_divisor(g);
    return (d + 1) / 6 * (n / d);
}

ConstructionCertificate two_indep_construct(const Group & g)
{
    const auto expected = (static_cast<std::int64_t>(g.order()) - static_cast<std::int64_t>(ord_size(g, 2))) / 2;
    return certify("two", 2, RelationKind::strong, Subset(g, two_indep_indices(g)), expected, SizeRelation::exact);
}

ConstructionCertificate three_indep_construct(const Group & g)
{
    const auto kappa = g.exponent();
    std::vector<ElementIndex> chosen;
    if (kappa % 4 == 0) {
        // fiber of 1 under the projection of the last coordinate onto Z_4
        for (std::uint64_t i = 0; i < g.order(); ++i)
            if (last_coord(g, static_cast<ElementIndex>(i)) % 4 == 1)
                chosen.push_back(static_cast<ElementIndex>(i));
    } else if (kappa % 2 == 0) {
        for (std::uint64_t i = 0; i < g.order(); ++i) {
            const auto c = last_coord(g, static_cast<ElementIndex>(i));
            if (c % 2 == 1 && c <= kappa / 2 - 2)
                chosen.push_back(static_cast<ElementIndex>(i));
        }
        if (g.rank() > 1) {
            // a largest 2-independent set of the kernel, lifted to last coordinate kappa / 2
            const std::vector<std::int64_t> kernel_factors(g.factors().begin(), g.factors().end() - 1);
            const Group kernel(kernel_factors, g.order());
            for (const auto y : two_indep_indices(kernel)) {
                auto e = kernel.element_at(y);
                e.coords.push_back(kappa / 2);
                chosen.push_back(g.index_of(e));
            }
        }
    } else {
        const auto d = best_odd_divisor(g);
        for (std::uint64_t i = 0; i < g.order(); ++i) {
            const auto j = last_coord(g, static_cast<ElementIndex>(i)) % d;
            if (6 * j > d && 3 * j < d)
                chosen.push_back(static_cast<ElementIndex>(i));
        }
    }
    return certify("three", 3, RelationKind::strong, Subset(g, std::move(chosen)), three_indep_size(g),
        SizeRelation::exact);
}

ConstructionCertificate cyclic_t_construct(std::int64_t n, std::int64_t t)
{
    if (t < 3 || t > n - 1)
        throw std::domain_error("cyclic construction requires 3 <= t <= n - 1");
    const auto g = Group::cyclic(n);
    const auto q = n / t;
    const auto N = q / ((t + 1) / 2);
    const auto bh = bh_sequence_greedy(t / 2, N);
    std::vector<ElementIndex> chosen;
    for (const auto b : bh.members)
        chosen.push_back(static_cast<ElementIndex>(q - b));
    auto cert = certify("cyclic", t, RelationKind::strong, Subset(g, std::move(chosen)),
        static_cast<std::int64_t>(bh.members.size()), SizeRelation::exact);
    for (const auto & x : cert.produced.members())
        if (x.coords[0] <= 0 || x.coords[0] * t >= n) {
            cert.verified = false;
            cert.diagnostics = "element " + std::to_string(x.coords[0]) + " lies outside (0, n/t)";
        }
    return cert;
}

std::int64_t torsion_greedy_floor(const Group & g, std::int64_t t)
{
    if (t < 1)
        throw std::domain_error("t must be positive");
    const auto twice_sigma = saturating_mul(2, sigma(g, t));
    std::int64_t m = 0;
    while (saturating_mul(twice_sigma, saturating_pow(static_cast<std::uint64_t>(m + 1), t)) <= g.order())
        ++m;
    return m;
}

std::int64_t torsion_greedy_binomial(const Group & g, std::int64_t t)
{
    if (t < 1)
        throw std::domain_error("t must be positive");
    const auto s = sigma(g, t);
    std::int64_t m = 0;
    for (;;) {
        const auto next = static_cast<std::uint64_t>(m + 1);
        if (g.order() <= saturating_mul(s, binomial(2 * next - 2 + static_cast<std::uint64_t>(t), t)))
            return m;
        ++m;
    }
}

std::int64_t weak_greedy_binomial(std::uint64_t n, std::int64_t t)
{
    if (t < 1)
        throw std::domain_error("t must be positive");
    std::int64_t m = 0;
    for (;;) {
        const auto next = static_cast<std::uint64_t>(m + 1);
        std::uint64_t total = 1;
        for (std::int64_t h = 1; h <= t; ++h)
            total = saturating_add(total, binomial(2 * next - 2, static_cast<std::uint64_t>(h)));
        if (n <= total)
            return m;
        ++m;
    }
}

ConstructionCertificate greedy_t_construct(const Group & g, std::int64_t t)
{
    if (t < 1)
        throw std::domain_error("t must be positive");
    const std::size_t n = g.order();
    // level t of the table is the union of h (A u -A) over h = 0..t
    SignedSumTable sums(g, t + 1, RelationKind::strong);
    std::vector<ElementIndex> chosen;
    for (;;) {
        std::optional<ElementIndex> pick;
        for (std::size_t i = 0; i < n && !pick; ++i) {
            // x is excluded when some h x with 1 <= h <= t is already reachable
            const auto x = static_cast<ElementIndex>(i);
            bool blocked = false;
            ElementIndex multiple = x;
            for (std::int64_t h = 1; h <= t && !blocked; ++h, multiple = g.add(multiple, x))
                blocked = sums.contains(t, multiple);
            if (!blocked)
                pick = x;
        }
        if (!pick)
            break;
        chosen.push_back(*pick);
        sums.push(*pick);
    }
    const auto expected = std::max(torsion_greedy_floor(g, t), torsion_greedy_binomial(g, t));
    return certify("greedy", t, RelationKind::strong, Subset(g, std::move(chosen)), expected,
        SizeRelation::at_least);
}

ConstructionCertificate greedy_weak_construct(const Group & g, std::int64_t t)
{
    if (t < 1)
        throw std::domain_error("t must be positive");
    const std::size_t n = g.order();
    // can_push rejects 0, members, and signed sums of at most t - 1 distinct members
    SignedSumTable sums(g, t, RelationKind::weak);
    std::vector<ElementIndex> chosen;
    for (std::size_t i = 1; i < n; ++i) {
        const auto x = static_cast<ElementIndex>(i);
        if (sums.can_push(x)) {
            chosen.push_back(x);
            sums.push(x);
        }
    }
    const auto expected = t == 1 ? static_cast<std::int64_t>(n) - 1 : weak_greedy_binomial(n, t);
    return certify("greedy-weak", t, RelationKind::weak, Subset(g, std::move(chosen)), expected,
        t == 1 ? SizeRelation::exact : SizeRelation::at_least);
}

}  // namespace tindep
