#include "tindep/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tindep/counting.hpp"

namespace tindep {

namespace {

__extension__ using i128 = __int128;

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>((static_cast<i128>(a) * b) % m);
}

// inverse of a modulo m, gcd(a, m) == 1; m == 1 gives 0
std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t old_r = mod_floor(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    return mod_floor(old_s, m);
}

std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t n)
{
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1)
        ++out[n];
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view text, const char * what)
{
    text = trim(text);
    std::int64_t value = 0;
    const auto * begin = text.data();
    const auto * end = text.data() + text.size();
    if (!text.empty() && *begin == '+')
        ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

// cartesian product of per-coordinate value lists, in lexicographic order
std::vector<Element> product(const std::vector<std::vector<std::int64_t>> & per_coord)
{
    std::vector<Element> out;
    for (const auto & c : per_coord)
        if (c.empty())
            return out;
    std::vector<std::size_t> pos(per_coord.size(), 0);
    for (;;) {
        Element e;
        e.coords.reserve(per_coord.size());
        for (std::size_t i = 0; i < per_coord.size(); ++i)
            e.coords.push_back(per_coord[i][pos[i]]);
        out.push_back(std::move(e));
        std::size_t i = per_coord.size();
        while (i > 0) {
            --i;
            if (++pos[i] < per_coord[i].size())
                break;
            pos[i] = 0;
            if (i == 0)
                return out;
        }
        if (per_coord.empty())
            return out;
    }
}

void partitions(std::uint64_t remaining, std::uint64_t max_part, std::vector<std::uint64_t> & current,
    std::vector<std::vector<std::uint64_t>> & out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::uint64_t part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

Group::Group(const std::vector<std::int64_t> & cyclic_orders, std::uint64_t max_order)
{
    if (cyclic_orders.empty())
        throw std::invalid_argument("group needs at least one cyclic factor");
    std::uint64_t n = 1;
    for (const auto d : cyclic_orders) {
        if (d < 2)
            throw std::invalid_argument("cyclic factor " + std::to_string(d) + " is below 2");
        n = saturating_mul(n, static_cast<std::uint64_t>(d));
    }
    if (n > max_order || n > std::numeric_limits<ElementIndex>::max())
        throw std::domain_error("group order exceeds the configured limit of " + std::to_string(max_order));

    // prime-power decomposition, then regroup into invariant factors
    std::map<std::uint64_t, std::vector<std::uint64_t>> exponents;
    for (const auto d : cyclic_orders)
        for (const auto & [p, e] : factorize(static_cast<std::uint64_t>(d)))
            exponents[p].push_back(e);
    std::size_t r = 0;
    for (auto & [p, es] : exponents) {
        std::sort(es.begin(), es.end(), std::greater<>());
        r = std::max(r, es.size());
    }
    factors_.assign(r, 1);
    for (const auto & [p, es] : exponents)
        for (std::size_t j = 0; j < es.size(); ++j)
            factors_[r - 1 - j] *= static_cast<std::int64_t>(saturating_pow(p, es[j]));

    order_ = n;
    strides_.assign(r, 1);
    for (std::size_t i = r - 1; i > 0; --i)
        strides_[i - 1] = strides_[i] * static_cast<std::uint64_t>(factors_[i]);
}

Group Group::cyclic(std::int64_t n, std::uint64_t max_order) { return Group({n}, max_order); }

std::string Group::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i != 0)
            out += 'x';
        out += std::to_string(factors_[i]);
    }
    return out;
}

Element Group::zero() const { return Element{std::vector<std::int64_t>(factors_.size(), 0)}; }

Element Group::element_at(ElementIndex index) const
{
    Element e;
    e.coords.resize(factors_.size());
    std::uint64_t rest = index;
    for (std::size_t k = factors_.size(); k > 0; --k) {
        const auto d = static_cast<std::uint64_t>(factors_[k - 1]);
        e.coords[k - 1] = static_cast<std::int64_t>(rest % d);
        rest /= d;
    }
    return e;
}

bool Group::contains(const Element & x) const
{
    if (x.coords.size() != factors_.size())
        return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= factors_[i])
            return false;
    return true;
}

ElementIndex Group::index_of(const Element & x) const
{
    if (!contains(x))
        throw std::invalid_argument("element does not belong to group " + to_string());
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        index += static_cast<std::uint64_t>(x.coords[i]) * strides_[i];
    return static_cast<ElementIndex>(index);
}

Element Group::add(const Element & x, const Element & y) const
{
    if (x.coords.size() != rank() || y.coords.size() != rank())
        throw std::invalid_argument("element shape does not match group " + to_string());
    Element out;
    out.coords.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        out.coords[i] = mod_floor(x.coords[i] + y.coords[i], factors_[i]);
    return out;
}

Element Group::neg(const Element & x) const
{
    if (x.coords.size() != rank())
        throw std::invalid_argument("element shape does not match group " + to_string());
    Element out;
    out.coords.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        out.coords[i] = mod_floor(-x.coords[i], factors_[i]);
    return out;
}

Element Group::scalar_mul(std::int64_t k, const Element & x) const
{
    if (x.coords.size() != rank())
        throw std::invalid_argument("element shape does not match group " + to_string());
    Element out;
    out.coords.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        out.coords[i] = mul_mod(mod_floor(k, factors_[i]), mod_floor(x.coords[i], factors_[i]), factors_[i]);
    return out;
}

std::int64_t Group::element_order(const Element & x) const
{
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        const auto d = static_cast<std::uint64_t>(factors_[i]);
        const auto c = static_cast<std::uint64_t>(mod_floor(x.coords[i], factors_[i]));
        ord = lcm_u64(ord, d / gcd_u64(c, d));
    }
    return static_cast<std::int64_t>(ord);
}

ElementIndex Group::add(ElementIndex x, ElementIndex y) const
{
    if (factors_.size() == 1) {
        const std::uint64_t s = std::uint64_t{x} + y;
        return static_cast<ElementIndex>(s >= order_ ? s - order_ : s);
    }
    std::uint64_t a = x, b = y, out = 0;
    for (std::size_t k = factors_.size(); k > 0; --k) {
        const auto d = static_cast<std::uint64_t>(factors_[k - 1]);
        std::uint64_t s = a % d + b % d;
        if (s >= d)
            s -= d;
        out += s * strides_[k - 1];
        a /= d;
        b /= d;
    }
    return static_cast<ElementIndex>(out);
}

ElementIndex Group::neg(ElementIndex x) const
{
    if (factors_.size() == 1)
        return x == 0 ? 0 : static_cast<ElementIndex>(order_ - x);
    std::uint64_t a = x, out = 0;
    for (std::size_t k = factors_.size(); k > 0; --k) {
        const auto d = static_cast<std::uint64_t>(factors_[k - 1]);
        const std::uint64_t c = a % d;
        out += (c == 0 ? 0 : d - c) * strides_[k - 1];
        a /= d;
    }
    return static_cast<ElementIndex>(out);
}

ElementIndex Group::sub(ElementIndex x, ElementIndex y) const { return add(x, neg(y)); }

ElementIndex Group::scalar_mul(std::int64_t k, ElementIndex x) const
{
    if (factors_.size() == 1) {
        const auto n = static_cast<std::int64_t>(order_);
        return static_cast<ElementIndex>(mul_mod(mod_floor(k, n), x, n));
    }
    std::uint64_t a = x, out = 0;
    for (std::size_t kk = factors_.size(); kk > 0; --kk) {
        const auto d = factors_[kk - 1];
        const auto c = static_cast<std::int64_t>(a % static_cast<std::uint64_t>(d));
        out += static_cast<std::uint64_t>(mul_mod(mod_floor(k, d), c, d)) * strides_[kk - 1];
        a /= static_cast<std::uint64_t>(d);
    }
    return static_cast<ElementIndex>(out);
}

std::int64_t Group::element_order(ElementIndex x) const
{
    std::uint64_t a = x, ord = 1;
    for (std::size_t k = factors_.size(); k > 0; --k) {
        const auto d = static_cast<std::uint64_t>(factors_[k - 1]);
        ord = lcm_u64(ord, d / gcd_u64(a % d, d));
        a /= d;
    }
    return static_cast<std::int64_t>(ord);
}

void Group::or_translated(std::span<bits::Word> dest, std::span<const bits::Word> src, ElementIndex g) const
{
    const auto block = static_cast<std::size_t>(factors_.back());
    if (factors_.size() == 1) {
        bits::or_rotated(dest, src, order_, g);
        return;
    }
    // Blocks of consecutive indices share all but the last coordinate; a
    // translate permutes the blocks and rotates each one by g's last digit.
    const std::size_t low = g % block;
    const auto high = static_cast<ElementIndex>(g - low);
    const std::size_t blocks = order_ / block;
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t base = b * block;
        const std::size_t target = add(static_cast<ElementIndex>(base), high);
        bits::or_range(dest, target + low, src, base, block - low);
        if (low != 0)
            bits::or_range(dest, target, src, base + block - low, low);
    }
}

Group parse_group(std::string_view spec, std::uint64_t max_order)
{
    const auto text = trim(spec);
    if (text.empty())
        throw std::invalid_argument("empty group spec");
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
        [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::vector<std::int64_t> orders;
    for (auto token : split(lowered, 'x')) {
        token = trim(token);
        if (!token.empty() && token.front() == 'z') {
            token.remove_prefix(1);
            if (!token.empty() && token.front() == '_')
                token.remove_prefix(1);
        }
        orders.push_back(parse_int(token, "group factor"));
    }
    return Group(orders, max_order);
}

std::vector<Element> enumerate_elements(const Group & g)
{
    std::vector<Element> out;
    out.reserve(g.order());
    for (std::uint64_t i = 0; i < g.order(); ++i)
        out.push_back(g.element_at(static_cast<ElementIndex>(i)));
    return out;
}

std::uint64_t torsion_size(const Group & g, std::int64_t h)
{
    if (h < 1)
        throw std::domain_error("torsion requires h >= 1");
    std::uint64_t size = 1;
    for (const auto d : g.factors())
        size *= gcd_u64(static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(d));
    return size;
}

TorsionData torsion_set(const Group & g, std::int64_t h)
{
    if (h < 1)
        throw std::domain_error("torsion requires h >= 1");
    std::vector<std::vector<std::int64_t>> per_coord;
    for (const auto d : g.factors()) {
        const auto step = d / static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(h), d));
        auto & vals = per_coord.emplace_back();
        for (std::int64_t c = 0; c < d; c += step)
            vals.push_back(c);
    }
    return TorsionData{h, product(per_coord)};
}

std::uint64_t sigma(const Group & g, std::int64_t t)
{
    std::uint64_t total = 0;
    for (std::int64_t h = 1; h <= t; ++h)
        total = saturating_add(total, torsion_size(g, h));
    return total;
}

namespace {

ElementSet ord_bitset(const Group & g, std::int64_t t)
{
    auto set = g.make_set();
    if (t < 1)
        return set;
    const std::int64_t top = std::min(t, g.exponent());
    for (std::int64_t h = 1; h <= top; ++h) {
        if (g.exponent() % h != 0)
            continue;  // Tor(G, h) = Tor(G, gcd(h, exponent)) is already included
        for (const auto & x : torsion_set(g, h).members)
            set.set(g.index_of(x));
    }
    return set;
}

}  // namespace

std::uint64_t ord_size(const Group & g, std::int64_t t)
{
    if (t >= g.exponent())
        return g.order();
    return ord_bitset(g, t).count();
}

OrdSet ord_set_and_sigma(const Group & g, std::int64_t t)
{
    OrdSet out;
    if (t < 1)
        return out;
    ord_bitset(g, t).for_each([&](ElementIndex i) { out.members.push_back(g.element_at(i)); });
    out.sigma = sigma(g, t);
    return out;
}

std::vector<Element> roots(const Group & g, std::int64_t h, const Element & target)
{
    if (h < 1)
        throw std::domain_error("roots require h >= 1");
    if (!g.contains(target))
        throw std::invalid_argument("root target does not belong to group " + g.to_string());
    std::vector<std::vector<std::int64_t>> per_coord;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const std::int64_t d = g.factors()[i];
        const std::int64_t hm = h % d;
        const auto common = static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(hm), d));
        const std::int64_t value = target.coords[i];
        if (value % common != 0)
            return {};
        const std::int64_t reduced = d / common;
        const std::int64_t base =
            reduced == 1 ? 0 : mul_mod(value / common, inverse_mod(hm / common, reduced), reduced);
        auto & vals = per_coord.emplace_back();
        for (std::int64_t k = 0; k < common; ++k)
            vals.push_back(base + k * reduced);
    }
    return product(per_coord);
}

std::vector<Group> abelian_groups_of_order(std::uint64_t n)
{
    if (n < 2)
        return {};
    // for each prime: the list of p-groups given by partitions of its exponent
    std::vector<std::vector<std::vector<std::int64_t>>> choices;
    for (const auto & [p, e] : factorize(n)) {
        std::vector<std::vector<std::uint64_t>> parts;
        std::vector<std::uint64_t> current;
        partitions(e, e, current, parts);
        auto & opts = choices.emplace_back();
        for (const auto & part : parts) {
            auto & orders = opts.emplace_back();
            for (const auto k : part)
                orders.push_back(static_cast<std::int64_t>(saturating_pow(p, k)));
        }
    }
    std::vector<Group> out;
    std::vector<std::size_t> pos(choices.size(), 0);
    for (;;) {
        std::vector<std::int64_t> orders;
        for (std::size_t i = 0; i < choices.size(); ++i)
            orders.insert(orders.end(), choices[i][pos[i]].begin(), choices[i][pos[i]].end());
        out.emplace_back(orders, n);
        std::size_t i = choices.size();
        for (;;) {
            if (i == 0)
                return out;
            --i;
            if (++pos[i] < choices[i].size())
                break;
            pos[i] = 0;
        }
    }
}

std::vector<Group> abelian_groups_up_to(std::uint64_t cap)
{
    std::vector<Group> out;
    for (std::uint64_t n = 2; n <= cap; ++n)
        for (auto & g : abelian_groups_of_order(n))
            out.push_back(std::move(g));
    return out;
}

std::string format_element(const Group & g, const Element & x)
{
    if (g.is_cyclic() && x.coords.size() == 1)
        return std::to_string(x.coords[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(x.coords[i]);
    }
    return out + ")";
}

Element parse_element(const Group & g, std::string_view text)
{
    text = trim(text);
    Element e;
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')')
            throw std::invalid_argument("unterminated element tuple: '" + std::string(text) + "'");
        for (const auto part : split(text.substr(1, text.size() - 2), ','))
            e.coords.push_back(parse_int(part, "element coordinate"));
    } else {
        e.coords.push_back(parse_int(text, "element"));
    }
    if (e.coords.size() != g.rank())
        throw std::invalid_argument("element '" + std::string(text) + "' needs " + std::to_string(g.rank()) +
            " coordinates for group " + g.to_string());
    for (std::size_t i = 0; i < g.rank(); ++i)
        e.coords[i] = mod_floor(e.coords[i], g.factors()[i]);
    return e;
}

std::vector<Element> parse_element_list(const Group & g, std::string_view text)
{
    text = trim(text);
    std::vector<Element> out;
    if (text.empty())
        return out;
    if (text.find('(') == std::string_view::npos) {
        for (const auto part : split(text, ','))
            out.push_back(parse_element(g, part));
        return out;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        if (i >= text.size())
            break;
        if (text[i] != '(')
            throw std::invalid_argument("expected '(' in element list: '" + std::string(text) + "'");
        const auto close = text.find(')', i);
        if (close == std::string_view::npos)
            throw std::invalid_argument("unterminated element tuple in: '" + std::string(text) + "'");
        out.push_back(parse_element(g, text.substr(i, close - i + 1)));
        i = close + 1;
    }
    return out;
}

std::string format_element_list(const Group & g, const std::vector<Element> & xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0)
            out += ',';
        out += format_element(g, xs[i]);
    }
    return out;
}

}  // namespace tindep
