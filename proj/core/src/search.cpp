#include "tindep/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tindep/counting.hpp"
#include "tindep/signed_sum_table.hpp"

namespace tindep {

std::string to_string(SearchStatus status)
{
    return status == SearchStatus::exact ? "exact" : "budget_exhausted";
}

namespace {

class TablePolicy {
public:
    using State = SignedSumTable;

    TablePolicy(const Group & g, std::int64_t t, RelationKind kind) : g_(g), t_(t), kind_(kind) {}

    State root() const { return State(g_, t_, kind_); }
    bool feasible(const State & s, ElementIndex x) const { return s.can_push(x); }
    void extend(State & child, const State & parent, ElementIndex x) const { child.extend_from(parent, x); }

private:
    const Group & g_;
    std::int64_t t_;
    RelationKind kind_;
};

struct SumFreeState {
    ElementSet members;
    ElementSet negated;  // -A
    ElementSet sums;     // A + A
    ElementSet diffs;    // A - A
};

class SumFreePolicy {
public:
    using State = SumFreeState;

    explicit SumFreePolicy(const Group & g) : g_(g) {}

    State root() const { return State{g_.make_set(), g_.make_set(), g_.make_set(), g_.make_set()}; }

    bool feasible(const State & s, ElementIndex x) const
    {
        return x != 0 && !s.members.test(x) && !s.sums.test(x) && !s.diffs.test(x) &&
            !s.members.test(g_.add(x, x));
    }

    void extend(State & child, const State & parent, ElementIndex x) const
    {
        child = parent;
        g_.or_translated(child.sums, parent.members, x);
        child.sums.set(g_.add(x, x));
        g_.or_translated(child.diffs, parent.members, g_.neg(x));
        g_.or_translated(child.diffs, parent.negated, x);
        child.diffs.set(0);
        child.members.set(x);
        child.negated.set(g_.neg(x));
    }

private:
    const Group & g_;
};

template <typename Policy>
class BranchAndBound {
public:
    BranchAndBound(const Group & g, const Policy & policy, std::vector<ElementIndex> pool,
        std::vector<bool> root_allowed, std::int64_t cap, const SearchOptions & options)
        : g_(g), policy_(policy), pool_(std::move(pool)), root_allowed_(std::move(root_allowed)), cap_(cap),
          options_(options), span_(static_cast<std::int64_t>(pool_.size()) + 1)
    {
    }

    SearchResult run()
    {
        const unsigned threads = std::max(1U, options_.threads);
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < threads; ++i)
                pool.emplace_back([this] { worker(); });
            for (auto & th : pool)
                th.join();
        }
        SearchResult out;
        out.max_size = best_key_.load() / span_;
        for (const auto x : best_witness_)
            out.witness.push_back(g_.element_at(x));
        out.nodes = std::min(nodes_.load(), options_.budget);
        out.status = aborted_.load() ? SearchStatus::budget_exhausted : SearchStatus::exact;
        return out;
    }

private:
    struct Frame {
        typename Policy::State state;
        std::vector<ElementIndex> candidates;
    };

    // larger is better: size first, then the earlier root
    std::int64_t key(std::int64_t size, std::size_t root) const
    {
        return size * span_ + (span_ - 1 - static_cast<std::int64_t>(root));
    }

    bool count_node()
    {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= options_.budget) {
            aborted_.store(true);
            return false;
        }
        return true;
    }

    void record(std::int64_t size, std::size_t root, const std::vector<ElementIndex> & chosen)
    {
        const auto k = key(size, root);
        if (k <= best_key_.load())
            return;
        std::lock_guard lock(mutex_);
        if (k <= best_key_.load())
            return;
        best_witness_ = chosen;
        best_key_.store(k);
    }

    void worker()
    {
        std::vector<Frame> frames;
        const auto depth = static_cast<std::size_t>(std::min<std::int64_t>(cap_, span_)) + 1;
        for (std::size_t d = 0; d <= depth; ++d)
            frames.push_back(Frame{policy_.root(), {}});
        std::vector<ElementIndex> chosen;
        for (;;) {
            const std::size_t root = next_root_.fetch_add(1);
            if (root >= pool_.size() || aborted_.load())
                return;
            if (!root_allowed_[root])
                continue;
            const auto potential = std::min<std::int64_t>(static_cast<std::int64_t>(pool_.size() - root), cap_);
            if (key(potential, root) <= best_key_.load())
                continue;
            const auto x = pool_[root];
            if (!policy_.feasible(frames[0].state, x))
                continue;
            if (!count_node())
                return;
            policy_.extend(frames[1].state, frames[0].state, x);
            chosen.assign(1, x);
            auto & next = frames[1].candidates;
            next.clear();
            for (std::size_t j = root + 1; j < pool_.size(); ++j)
                if (policy_.feasible(frames[1].state, pool_[j]))
                    next.push_back(pool_[j]);
            record(1, root, chosen);
            if (!next.empty() && cap_ > 1)
                descend(frames, 1, root, chosen);
        }
    }

    void descend(std::vector<Frame> & frames, std::size_t depth, std::size_t root, std::vector<ElementIndex> & chosen)
    {
        const auto & candidates = frames[depth].candidates;
        const auto size = static_cast<std::int64_t>(depth);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const auto potential =
                std::min<std::int64_t>(size + static_cast<std::int64_t>(candidates.size() - i), cap_);
            if (key(potential, root) <= best_key_.load(std::memory_order_relaxed) || aborted_.load())
                return;
            if (!count_node())
                return;
            const auto x = candidates[i];
            auto & child = frames[depth + 1];
            policy_.extend(child.state, frames[depth].state, x);
            child.candidates.clear();
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (policy_.feasible(child.state, candidates[j]))
                    child.candidates.push_back(candidates[j]);
            chosen.push_back(x);
            record(size + 1, root, chosen);
            if (!child.candidates.empty() && size + 1 < cap_)
                descend(frames, depth + 1, root, chosen);
            chosen.pop_back();
        }
    }

    const Group & g_;
    const Policy & policy_;
    std::vector<ElementIndex> pool_;
    std::vector<bool> root_allowed_;
    std::int64_t cap_;
    SearchOptions options_;
    std::int64_t span_;

    std::atomic<std::int64_t> best_key_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> aborted_{false};
    std::atomic<std::size_t> next_root_{0};
    std::mutex mutex_;
    std::vector<ElementIndex> best_witness_;
};

SearchResult everything(const Group & g, bool skip_zero)
{
    SearchResult out;
    for (std::uint64_t i = skip_zero ? 1 : 0; i < g.order(); ++i)
        out.witness.push_back(g.element_at(static_cast<ElementIndex>(i)));
    out.max_size = static_cast<std::int64_t>(out.witness.size());
    return out;
}

template <typename Policy>
SearchResult run_search(const Group & g, const Policy & policy, std::vector<ElementIndex> pool,
    std::vector<bool> root_allowed, std::int64_t cap, const SearchOptions & options)
{
    if (pool.empty() || cap <= 0)
        return SearchResult{};
    BranchAndBound<Policy> engine(g, policy, std::move(pool), std::move(root_allowed), cap, options);
    return engine.run();
}

bool representative(const Group & g, ElementIndex x) { return x <= g.neg(x); }

}  // namespace

SearchResult max_independent(const Group & g, std::int64_t t, const SearchOptions & options)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    if (t <= 1)
        return everything(g, t == 1);
    // elements of order at most t can never belong to a t-independent set
    std::vector<ElementIndex> pool;
    for (std::uint64_t i = 1; i < g.order(); ++i) {
        const auto x = static_cast<ElementIndex>(i);
        if (g.element_order(x) > t && (!options.negation_pruning || representative(g, x)))
            pool.push_back(x);
    }
    const auto cap = strong_counting_cap(g.order(), t);
    std::vector<bool> allowed(pool.size(), true);
    return run_search(g, TablePolicy(g, t, RelationKind::strong), std::move(pool), std::move(allowed), cap, options);
}

SearchResult max_weakly_independent(const Group & g, std::int64_t t, const SearchOptions & options)
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    if (t <= 1)
        return everything(g, t == 1);
    std::vector<ElementIndex> pool;
    for (std::uint64_t i = 1; i < g.order(); ++i) {
        const auto x = static_cast<ElementIndex>(i);
        if (!options.negation_pruning || representative(g, x))
            pool.push_back(x);
    }
    const auto cap = weak_counting_cap(g.order(), t);
    // a weak relation never has weight above the set size
    const auto levels = std::min(t, cap + 1);
    std::vector<bool> allowed(pool.size(), true);
    return run_search(g, TablePolicy(g, levels, RelationKind::weak), std::move(pool), std::move(allowed), cap,
        options);
}

SearchResult max_sum_free(const Group & g, const SearchOptions & options)
{
    std::vector<ElementIndex> pool;
    std::vector<bool> allowed;
    for (std::uint64_t i = 1; i < g.order(); ++i) {
        const auto x = static_cast<ElementIndex>(i);
        pool.push_back(x);
        // A and -A are both sum-free, so the least element may be taken to be a representative
        allowed.push_back(!options.negation_pruning || representative(g, x));
    }
    const auto cap = static_cast<std::int64_t>(g.order() / 2);
    return run_search(g, SumFreePolicy(g), std::move(pool), std::move(allowed), cap, options);
}

}  // namespace tindep
