#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tindep/element_set.hpp"

namespace tindep {

/// Default cap on the group order for enumeration-backed operations.
inline constexpr std::uint64_t kDefaultMaxOrder = 1'000'000;

/// A group element as a mixed-radix coefficient vector: one coordinate per
/// cyclic factor, each reduced into [0, d_i).
struct Element {
    std::vector<std::int64_t> coords;

    friend auto operator<=>(const Element &, const Element &) = default;
};

/// A finite abelian group Z_{d_1} x ... x Z_{d_r} in invariant factor form
/// (d_1 | d_2 | ... | d_r, every d_i >= 2).
///
/// Elements are addressed either by value (Element) or by their index in
/// the canonical order, where the first coordinate is the most significant
/// digit. Index 0 is always the zero element. The index-based arithmetic is
/// what the search and sumset code use in their inner loops.
class Group {
public:
    /// Canonicalizes an arbitrary list of cyclic orders into invariant
    /// factors. Throws std::invalid_argument for an empty list or a factor
    /// below 2, std::domain_error when the order exceeds max_order.
    explicit Group(const std::vector<std::int64_t> & cyclic_orders, std::uint64_t max_order = kDefaultMaxOrder);

    static Group cyclic(std::int64_t n, std::uint64_t max_order = kDefaultMaxOrder);

    const std::vector<std::int64_t> & factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::uint64_t order() const { return order_; }
    std::int64_t exponent() const { return factors_.back(); }
    bool is_cyclic() const { return factors_.size() == 1; }

    /// Canonical spec string, e.g. "2x6".
    std::string to_string() const;

    Element zero() const;
    Element element_at(ElementIndex index) const;
    ElementIndex index_of(const Element & x) const;
    bool contains(const Element & x) const;

    Element add(const Element & x, const Element & y) const;
    Element neg(const Element & x) const;
    Element scalar_mul(std::int64_t k, const Element & x) const;
    std::int64_t element_order(const Element & x) const;

    ElementIndex add(ElementIndex x, ElementIndex y) const;
    ElementIndex sub(ElementIndex x, ElementIndex y) const;
    ElementIndex neg(ElementIndex x) const;
    ElementIndex scalar_mul(std::int64_t k, ElementIndex x) const;
    std::int64_t element_order(ElementIndex x) const;

    /// dest |= src + g, the translate of a set by a group element.
    void or_translated(std::span<bits::Word> dest, std::span<const bits::Word> src, ElementIndex g) const;
    void or_translated(ElementSet & dest, const ElementSet & src, ElementIndex g) const
    {
        or_translated(dest.words(), src.words(), g);
    }

    ElementSet make_set() const { return ElementSet(order_); }

    friend bool operator==(const Group & a, const Group & b) { return a.factors_ == b.factors_; }

private:
    std::vector<std::int64_t> factors_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t order_ = 0;
};

/// Parses "8x2x3", "Z8xZ2", "z_8 X 2" and similar product expressions.
Group parse_group(std::string_view spec, std::uint64_t max_order = kDefaultMaxOrder);

/// All elements in canonical order; index i of the result has index i.
std::vector<Element> enumerate_elements(const Group & g);

struct TorsionData {
    std::int64_t h = 1;
    std::vector<Element> members;
};

/// Tor(G, h) = { x : h x = 0 }, solved coordinate-wise.
TorsionData torsion_set(const Group & g, std::int64_t h);

/// |Tor(G, h)| = prod_i gcd(h, d_i).
std::uint64_t torsion_size(const Group & g, std::int64_t h);

struct OrdSet {
    std::vector<Element> members;  ///< elements of order at most t
    std::uint64_t sigma = 0;       ///< sum_{h<=t} |Tor(G, h)|, counted with multiplicity
};

OrdSet ord_set_and_sigma(const Group & g, std::int64_t t);

std::uint64_t sigma(const Group & g, std::int64_t t);

/// Number of elements of order at most t.
std::uint64_t ord_size(const Group & g, std::int64_t t);

/// Root_h(target) = { x : h x = target }, solved per cyclic factor.
std::vector<Element> roots(const Group & g, std::int64_t h, const Element & target);

/// Every abelian group of order n up to isomorphism, one per combination of
/// prime-power partitions, in a fixed deterministic order.
std::vector<Group> abelian_groups_of_order(std::uint64_t n);

/// abelian_groups_of_order(n) for n = 2..cap, concatenated.
std::vector<Group> abelian_groups_up_to(std::uint64_t cap);

/// "5" for cyclic groups, "(1,0,3)" otherwise.
std::string format_element(const Group & g, const Element & x);

/// Accepts a bare integer (cyclic groups only) or a parenthesized tuple.
/// Coordinates are reduced into range, so negative values are accepted.
Element parse_element(const Group & g, std::string_view text);

/// "1,2,4" for cyclic groups or "(0,1),(1,1)" in general; empty text is the empty list.
std::vector<Element> parse_element_list(const Group & g, std::string_view text);

std::string format_element_list(const Group & g, const std::vector<Element> & xs);

}  // namespace tindep
