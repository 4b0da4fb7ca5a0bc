#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace domino {

using Vertex = std::size_t;

/// Fixed-universe bit vector over vertex indices 0..size()-1, stored as
/// 64-bit words. Bits at or beyond size() are always zero.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : size_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) set(v);
    }

    template <class Range>
    static VertexSet of(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.set(static_cast<Vertex>(v));
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
        s.trim();
        return s;
    }

    /// Set built from the low `universe` bits of `mask` (universe <= 64).
    static VertexSet from_mask(std::size_t universe, Word mask) {
        assert(universe <= word_bits);
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t size() const noexcept { return size_; }

    bool test(Vertex v) const {
        assert(v < size_);
        return (words_[v / word_bits] >> (v % word_bits)) & 1U;
    }
    void set(Vertex v) {
        assert(v < size_);
        words_[v / word_bits] |= Word{1} << (v % word_bits);
    }
    void reset(Vertex v) {
        assert(v < size_);
        words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
    }
    void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

    std::size_t count() const {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }
    bool any() const { return !empty(); }

    /// |this ∩ other|
    std::size_t intersection_count(const VertexSet& other) const {
        assert(other.size_ == size_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }
    bool intersects(const VertexSet& other) const {
        assert(other.size_ == size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& other) const {
        assert(other.size_ == size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(o.size_ == size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(o.size_ == size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(o.size_ == size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Calls fn(v) for each member in increasing order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                fn(i * word_bits + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    /// Smallest member, or size() when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return size_;
    }

    /// Low word; meaningful as a full mask only when size() <= 64.
    Word mask() const { return words_.empty() ? Word{0} : words_[0]; }

    std::span<const Word> words() const noexcept { return words_; }

private:
    void trim() {
        if (size_ % word_bits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace domino
