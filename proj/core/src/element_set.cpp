#include "tindep/element_set.hpp"

#include <algorithm>

namespace tindep {

namespace bits {

namespace {

Word read_bits(std::span<const Word> src, std::size_t pos)
{
    const std::size_t w = pos / kWordBits;
    const std::size_t off = pos % kWordBits;
    Word v = src[w] >> off;
    if (off != 0 && w + 1 < src.size())
        v |= src[w + 1] << (kWordBits - off);
    return v;
}

}  // namespace

void or_range(std::span<Word> dest, std::size_t dest_pos, std::span<const Word> src, std::size_t src_pos,
    std::size_t len)
{
    while (len > 0) {
        const std::size_t chunk = std::min(len, kWordBits);
        Word v = read_bits(src, src_pos);
        if (chunk < kWordBits)
            v &= (Word{1} << chunk) - 1;
        const std::size_t w = dest_pos / kWordBits;
        const std::size_t off = dest_pos % kWordBits;
        dest[w] |= v << off;
        if (off != 0 && chunk > kWordBits - off)
            dest[w + 1] |= v >> (kWordBits - off);
        len -= chunk;
        src_pos += chunk;
        dest_pos += chunk;
    }
}

void or_rotated(std::span<Word> dest, std::span<const Word> src, std::size_t n, std::size_t shift)
{
    shift %= n;
    if (shift == 0) {
        for (std::size_t w = 0; w < dest.size(); ++w)
            dest[w] |= src[w];
        return;
    }
    // [0, n - shift) moves up by shift, [n - shift, n) wraps to the bottom
    or_range(dest, shift, src, 0, n - shift);
    or_range(dest, 0, src, n - shift, shift);
}

}  // namespace bits

void ElementSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t ElementSet::count() const
{
    std::size_t total = 0;
    for (const auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool ElementSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](bits::Word w) { return w == 0; });
}

ElementSet & ElementSet::operator|=(const ElementSet & other)
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

ElementSet & ElementSet::operator&=(const ElementSet & other)
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    return *this;
}

bool ElementSet::intersects(const ElementSet & other) const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0)
            return true;
    return false;
}

std::vector<ElementIndex> ElementSet::to_indices() const
{
    std::vector<ElementIndex> out;
    out.reserve(count());
    for_each([&](ElementIndex i) { out.push_back(i); });
    return out;
}

}  // namespace tindep
