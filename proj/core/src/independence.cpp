#include "tindep/independence.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tindep/counting.hpp"

namespace tindep {

namespace {

std::vector<ElementIndex> indices_of(const Group & g, const std::vector<Element> & members)
{
    std::vector<ElementIndex> out;
    out.reserve(members.size());
    for (const auto & x : members)
        out.push_back(g.index_of(x));
    return out;
}

std::vector<Element> elements_of(const Group & g, const ElementSet & set)
{
    std::vector<Element> out;
    set.for_each([&](ElementIndex i) { out.push_back(g.element_at(i)); });
    return out;
}

}  // namespace

Subset::Subset(Group group, std::vector<Element> members) : Subset(group, indices_of(group, members)) {}

Subset::Subset(Group group, std::vector<ElementIndex> indices) : group_(std::move(group)), indices_(std::move(indices))
{
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw std::invalid_argument("subset contains a repeated element");
    for (const auto i : indices_) {
        if (i >= group_.order())
            throw std::invalid_argument("element index outside group " + group_.to_string());
        members_.push_back(group_.element_at(i));
    }
}

Subset Subset::negated() const
{
    std::vector<ElementIndex> out;
    out.reserve(indices_.size());
    for (const auto i : indices_)
        out.push_back(group_.neg(i));
    return Subset(group_, std::move(out));
}

ElementSet Subset::as_set() const
{
    auto set = group_.make_set();
    for (const auto i : indices_)
        set.set(i);
    return set;
}

std::int64_t CoeffVector::weight() const
{
    std::int64_t w = 0;
    for (const auto l : lambdas)
        w += l < 0 ? -l : l;
    return w;
}

std::vector<int> ConditionBreakdown::failed() const
{
    std::vector<int> out;
    if (!condition1)
        out.push_back(1);
    if (!condition2)
        out.push_back(2);
    if (!condition3)
        out.push_back(3);
    return out;
}

ElementSet fold_sumset_set(const Subset & a, std::int64_t h)
{
    if (h < 0)
        throw std::domain_error("sumset level must be nonnegative");
    const auto & g = a.group();
    auto current = g.make_set();
    current.set(0);
    for (std::int64_t level = 0; level < h; ++level) {
        auto next = g.make_set();
        for (const auto x : a.indices())
            g.or_translated(next, current, x);
        current = std::move(next);
    }
    return current;
}

std::vector<Element> fold_sumset(const Subset & a, std::int64_t h)
{
    return elements_of(a.group(), fold_sumset_set(a, h));
}

namespace {

// layers[k] = k-star sums for k = 0..top
std::vector<ElementSet> star_layers(const Subset & a, std::int64_t top)
{
    const auto & g = a.group();
    std::vector<ElementSet> layers(static_cast<std::size_t>(top) + 1, g.make_set());
    layers[0].set(0);
    std::size_t seen = 0;
    for (const auto x : a.indices()) {
        ++seen;
        for (auto k = std::min<std::size_t>(seen, static_cast<std::size_t>(top)); k >= 1; --k)
            g.or_translated(layers[k], layers[k - 1], x);
    }
    return layers;
}

std::vector<ElementSet> fold_layers(const Subset & a, std::int64_t top)
{
    const auto & g = a.group();
    std::vector<ElementSet> layers;
    layers.reserve(static_cast<std::size_t>(top) + 1);
    layers.push_back(g.make_set());
    layers[0].set(0);
    for (std::int64_t level = 1; level <= top; ++level) {
        auto next = g.make_set();
        for (const auto x : a.indices())
            g.or_translated(next, layers.back(), x);
        layers.push_back(std::move(next));
    }
    return layers;
}

}  // namespace

ElementSet star_sumset_set(const Subset & a, std::int64_t h)
{
    if (h < 0)
        throw std::domain_error("sumset level must be nonnegative");
    if (static_cast<std::uint64_t>(h) > a.size())
        return a.group().make_set();
    return std::move(star_layers(a, h).back());
}

std::vector<Element> star_sumset(const Subset & a, std::int64_t h)
{
    return elements_of(a.group(), star_sumset_set(a, h));
}

namespace {

using Dist = std::uint32_t;

struct RelationTables {
    // dist[i][g]: least weight of lambda_i..lambda_{m-1} (0-based) realising g, clamped at cap
    std::vector<std::vector<Dist>> dist;
    // best[i]: least weight of a nonzero relation supported on coordinates i..m-1
    std::vector<Dist> best;
    Dist cap = 0;
};

Dist bump(Dist d, Dist by, Dist cap) { return d >= cap - by ? cap : d + by; }

// out[g] = min_k D[g - k a] + min(k, o - k): an L1 distance transform around each coset of <a>.
void strong_transform(const Group & g, ElementIndex a, const std::vector<Dist> & in, std::vector<Dist> & out, Dist cap)
{
    const std::size_t n = g.order();
    out.assign(n, cap);
    std::vector<bool> visited(n, false);
    std::vector<ElementIndex> cycle;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start])
            continue;
        cycle.clear();
        auto x = static_cast<ElementIndex>(start);
        do {
            visited[x] = true;
            cycle.push_back(x);
            x = g.add(x, a);
        } while (x != start);
        const std::size_t o = cycle.size();
        Dist f = cap;
        for (std::size_t step = 0; step < 2 * o; ++step) {
            const auto y = cycle[step % o];
            f = std::min(bump(f, 1, cap), in[y]);
            out[y] = std::min(out[y], f);
        }
        f = cap;
        for (std::size_t step = 2 * o; step > 0; --step) {
            const auto y = cycle[(step - 1) % o];
            f = std::min(bump(f, 1, cap), in[y]);
            out[y] = std::min(out[y], f);
        }
    }
}

void weak_transform(const Group & g, ElementIndex a, const std::vector<Dist> & in, std::vector<Dist> & out, Dist cap)
{
    const std::size_t n = g.order();
    out.assign(n, cap);
    for (std::size_t x = 0; x < n; ++x) {
        const auto i = static_cast<ElementIndex>(x);
        out[x] = std::min({in[x], bump(in[g.sub(i, a)], 1, cap), bump(in[g.add(i, a)], 1, cap)});
    }
}

RelationTables build_tables(const Subset & s, Dist cap, RelationKind kind)
{
    const auto & g = s.group();
    const auto & a = s.indices();
    const std::size_t m = a.size();
    RelationTables tables;
    tables.cap = cap;
    tables.dist.resize(m + 1);
    tables.best.assign(m + 1, cap);
    tables.dist[m].assign(g.order(), cap);
    tables.dist[m][0] = 0;
    for (std::size_t i = m; i > 0; --i) {
        const auto x = a[i - 1];
        const auto & next = tables.dist[i];
        Dist via = cap;
        if (kind == RelationKind::weak) {
            via = bump(next[x], 1, cap);
        } else {
            const auto o = static_cast<std::uint64_t>(g.element_order(x));
            via = o >= cap ? cap : static_cast<Dist>(o);
            ElementIndex y = x;
            for (std::uint64_t k = 1; k < o; ++k, y = g.add(y, x)) {
                const auto c = static_cast<Dist>(std::min(k, o - k));
                if (c >= via)
                    continue;
                via = std::min(via, bump(next[y], c, cap));
            }
        }
        tables.best[i - 1] = std::min(tables.best[i], via);
        if (i > 1) {
            if (kind == RelationKind::weak)
                weak_transform(g, x, next, tables.dist[i - 1], cap);
            else
                strong_transform(g, x, next, tables.dist[i - 1], cap);
        }
    }
    return tables;
}

}  // namespace

std::optional<CoeffVector> find_minimal_relation(const Subset & s, std::int64_t max_weight, RelationKind kind)
{
    const std::size_t m = s.size();
    if (m == 0 || max_weight <= 0)
        return std::nullopt;
    const auto & g = s.group();
    const std::int64_t limit = kind == RelationKind::weak ? static_cast<std::int64_t>(m) : g.exponent();
    const auto w_cap = std::min(max_weight, limit);
    const auto cap = static_cast<Dist>(w_cap + 1);
    const auto tables = build_tables(s, cap, kind);
    const Dist w = tables.best[0];
    if (w >= cap)
        return std::nullopt;

    const auto & a = s.indices();
    CoeffVector out;
    out.lambdas.assign(m, 0);
    ElementIndex partial = 0;
    auto remaining = static_cast<std::int64_t>(w);
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t reach = kind == RelationKind::weak ? std::min<std::int64_t>(remaining, 1) : remaining;
        ElementIndex p = g.add(partial, g.scalar_mul(-reach, a[i]));
        bool placed = false;
        for (std::int64_t lambda = -reach; lambda <= reach; ++lambda, p = g.add(p, a[i])) {
            const std::int64_t left = remaining - (lambda < 0 ? -lambda : lambda);
            const bool nz = nonzero || lambda != 0;
            const bool feasible = nz ? tables.dist[i + 1][g.neg(p)] <= left
                                     : (p == 0 && tables.best[i + 1] <= left);
            if (feasible) {
                out.lambdas[i] = lambda;
                partial = p;
                remaining = left;
                nonzero = nz;
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::logic_error("relation reconstruction lost feasibility");
    }
    if (partial != 0 || !nonzero || out.weight() != static_cast<std::int64_t>(w))
        throw std::logic_error("reconstructed relation is inconsistent");
    return out;
}

std::optional<CoeffVector> find_relation_by_enumeration(const Subset & s, std::int64_t max_weight, RelationKind kind)
{
    const std::size_t m = s.size();
    if (m == 0)
        return std::nullopt;
    const auto & g = s.group();
    const auto & a = s.indices();
    std::vector<std::int64_t> lambdas(m, 0);

    // every vector of weight exactly `remaining` on coordinates i.., in lexicographic order
    std::function<bool(std::size_t, std::int64_t, ElementIndex)> walk = [&](std::size_t i, std::int64_t remaining,
                                                                              ElementIndex sum) -> bool {
        if (i + 1 == m) {
            if (kind == RelationKind::weak && remaining > 1)
                return false;
            for (const std::int64_t lambda : {-remaining, remaining}) {
                lambdas[i] = lambda;
                if (g.add(sum, g.scalar_mul(lambda, a[i])) == 0)
                    return true;
                if (remaining == 0)
                    break;
            }
            return false;
        }
        const std::int64_t reach = kind == RelationKind::weak ? std::min<std::int64_t>(remaining, 1) : remaining;
        for (std::int64_t lambda = -reach; lambda <= reach; ++lambda) {
            lambdas[i] = lambda;
            const std::int64_t left = remaining - (lambda < 0 ? -lambda : lambda);
            if (walk(i + 1, left, g.add(sum, g.scalar_mul(lambda, a[i]))))
                return true;
        }
        return false;
    };

    for (std::int64_t w = 1; w <= max_weight; ++w) {
        if (kind == RelationKind::weak && w > static_cast<std::int64_t>(m))
            break;
        std::fill(lambdas.begin(), lambdas.end(), 0);
        if (walk(0, w, 0))
            return CoeffVector{lambdas};
    }
    return std::nullopt;
}

ConditionBreakdown check_conditions(const Subset & a, std::int64_t t, RelationKind kind)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    ConditionBreakdown out;
    if (a.empty() || t == 0)
        return out;
    const auto m = static_cast<std::int64_t>(a.size());
    const std::int64_t top = std::min(t, kind == RelationKind::weak ? m : a.group().exponent());
    const auto layers = kind == RelationKind::weak ? star_layers(a, top) : fold_layers(a, top);

    for (std::int64_t h = 1; h <= top; ++h)
        if (layers[h].test(0))
            out.condition1 = false;
    for (std::int64_t h = 1; 2 * h < top; ++h)
        for (std::int64_t k = h + 1; k <= top - h; ++k)
            if (layers[h].intersects(layers[k]))
                out.condition2 = false;
    for (std::int64_t h = 1; h <= std::min(t / 2, top); ++h) {
        const auto expected = kind == RelationKind::weak ? binomial(static_cast<std::uint64_t>(m), h)
                                                         : binomial(static_cast<std::uint64_t>(m + h - 1), h);
        if (layers[h].count() != expected)
            out.condition3 = false;
    }
    return out;
}

bool satisfies_reduced_conditions(const Subset & a, std::int64_t t)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    if (a.empty() || t == 0)
        return true;
    const auto layers = fold_layers(a, t);
    for (const std::int64_t h : {t - 1, t})
        if (h >= 1 && layers[h].test(0))
            return false;
    for (const std::int64_t total : {t - 1, t})
        for (std::int64_t h = 1; 2 * h < total; ++h)
            if (layers[h].intersects(layers[total - h]))
                return false;
    const std::int64_t half = t / 2;
    const auto m = static_cast<std::uint64_t>(a.size());
    return layers[half].count() == binomial(m + half - 1, half);
}

namespace {

IndependenceReport report(const Subset & a, std::int64_t t, RelationKind kind)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    IndependenceReport out;
    out.violating_vector = find_minimal_relation(a, t, kind);
    out.independent = !out.violating_vector.has_value();
    out.conditions = check_conditions(a, t, kind);
    if (out.conditions.all() != out.independent)
        throw std::logic_error("relation search and sumset conditions disagree");
    return out;
}

}  // namespace

IndependenceReport is_t_independent(const Subset & a, std::int64_t t) { return report(a, t, RelationKind::strong); }

IndependenceReport is_weakly_t_independent(const Subset & a, std::int64_t t)
{
    return report(a, t, RelationKind::weak);
}

std::int64_t independence_number(const Subset & a)
{
    if (a.empty())
        throw std::domain_error("ind is undefined for the empty set");
    const auto rel = find_minimal_relation(a, a.group().exponent(), RelationKind::strong);
    if (!rel)
        throw std::logic_error("no relation up to the exponent");
    return rel->weight() - 1;
}

std::int64_t weak_independence_number(const Subset & a)
{
    if (a.empty())
        throw std::domain_error("wind is undefined for the empty set");
    const auto rel = find_minimal_relation(a, static_cast<std::int64_t>(a.size()), RelationKind::weak);
    return rel ? rel->weight() - 1 : kInfinity;
}

bool is_sum_free(const Subset & a)
{
    return !fold_sumset_set(a, 2).intersects(a.as_set());
}

}  // namespace tindep
