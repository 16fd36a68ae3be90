#include "tindep/signed_sum_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace tindep {

SignedSumTable::SignedSumTable(const Group & g, std::int64_t t, RelationKind kind)
    : group_(&g), t_(t), kind_(kind), words_per_level_(bits::words_for(g.order()))
{
    if (t < 0)
        throw std::domain_error("t must be nonnegative");
    data_.assign(static_cast<std::size_t>(t) * words_per_level_, 0);
    for (std::int64_t w = 0; w < t; ++w)
        bits::set(level_words(w), 0);
}

ElementSet SignedSumTable::level(std::int64_t level) const
{
    if (level < 0 || level >= t_)
        throw std::out_of_range("signed sum level out of range");
    ElementSet out(group_->order());
    std::copy_n(level_words(level).begin(), words_per_level_, out.words().begin());
    return out;
}

bool SignedSumTable::can_push(ElementIndex x) const
{
    if (std::find(members_.begin(), members_.end(), x) != members_.end())
        return false;
    if (t_ == 0)
        return true;
    if (kind_ == RelationKind::weak)
        return !contains(t_ - 1, x);
    // j x must avoid D_{t-j}; the levels are symmetric so the sign of j is irrelevant
    ElementIndex multiple = x;
    for (std::int64_t j = 1; j <= t_; ++j) {
        if (contains(t_ - j, multiple))
            return false;
        multiple = group_->add(multiple, x);
    }
    return true;
}

void SignedSumTable::push(ElementIndex x)
{
    members_.push_back(x);
    const ElementIndex minus = group_->neg(x);
    if (kind_ == RelationKind::weak) {
        for (std::int64_t w = t_ - 1; w >= 1; --w) {
            group_->or_translated(level_words(w), level_words(w - 1), x);
            group_->or_translated(level_words(w), level_words(w - 1), minus);
        }
        return;
    }
    // ascending: level w - 1 already includes x when level w is extended
    for (std::int64_t w = 1; w < t_; ++w) {
        group_->or_translated(level_words(w), level_words(w - 1), x);
        group_->or_translated(level_words(w), level_words(w - 1), minus);
    }
}

void SignedSumTable::extend_from(const SignedSumTable & parent, ElementIndex x)
{
    group_ = parent.group_;
    t_ = parent.t_;
    kind_ = parent.kind_;
    words_per_level_ = parent.words_per_level_;
    data_.assign(parent.data_.begin(), parent.data_.end());
    members_.assign(parent.members_.begin(), parent.members_.end());
    push(x);
}

std::optional<SignedSumTable> feasibility_extend(const SignedSumTable & table, ElementIndex x)
{
    if (!table.can_push(x))
        return std::nullopt;
    SignedSumTable out = table;
    out.push(x);
    return out;
}

}  // namespace tindep
