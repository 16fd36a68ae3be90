#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tindep {

/// Position of an element in the canonical (mixed-radix lexicographic) order.
using ElementIndex = std::uint32_t;

namespace bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> words, std::size_t i)
{
    return (words[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> words, std::size_t i) { words[i / kWordBits] |= Word{1} << (i % kWordBits); }

/// dest[dest_pos + k] |= src[src_pos + k] for k in [0, len).
void or_range(std::span<Word> dest, std::size_t dest_pos, std::span<const Word> src, std::size_t src_pos,
    std::size_t len);

/// dest[(i + shift) mod n] |= src[i] for i in [0, n): a cyclic rotation.
void or_rotated(std::span<Word> dest, std::span<const Word> src, std::size_t n, std::size_t shift);

template <typename F>
void for_each_set(std::span<const Word> words, F && f)
{
    for (std::size_t w = 0; w < words.size(); ++w) {
        Word word = words[w];
        while (word != 0) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(word));
            f(static_cast<ElementIndex>(w * kWordBits + bit));
            word &= word - 1;
        }
    }
}

}  // namespace bits

/// A set of group elements, stored as a bitset over canonical indices.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : universe_(universe), words_(bits::words_for(universe), 0) {}

    std::size_t universe() const { return universe_; }

    bool test(ElementIndex i) const { return bits::test(words_, i); }
    void set(ElementIndex i) { bits::set(words_, i); }
    void reset(ElementIndex i) { words_[i / bits::kWordBits] &= ~(bits::Word{1} << (i % bits::kWordBits)); }
    void clear();

    std::size_t count() const;
    bool empty() const;

    ElementSet & operator|=(const ElementSet & other);
    ElementSet & operator&=(const ElementSet & other);
    bool intersects(const ElementSet & other) const;

    template <typename F>
    void for_each(F && f) const
    {
        bits::for_each_set(words_, std::forward<F>(f));
    }

    std::vector<ElementIndex> to_indices() const;

    std::span<bits::Word> words() { return words_; }
    std::span<const bits::Word> words() const { return words_; }

    friend bool operator==(const ElementSet &, const ElementSet &) = default;

private:
    std::size_t universe_ = 0;
    std::vector<bits::Word> words_;
};

}  // namespace tindep
