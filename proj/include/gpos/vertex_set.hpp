#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace gpos {

using Vertex = std::uint32_t;

/// Subset of the vertex labels 0..universe-1, stored as a packed bitset.
///
/// Graphs up to 128 vertices keep their words inline, which covers every
/// product the theorem catalog builds.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    class Iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        Iterator() = default;
        Iterator(const VertexSet * set, std::size_t word_index) : set_(set), word_index_(word_index)
        {
            if (set_ && word_index_ < set_->words_.size()) {
                current_ = set_->words_[word_index_];
                settle();
            }
        }

        auto operator*() const -> Vertex
        {
            return static_cast<Vertex>(word_index_ * kWordBits + static_cast<std::size_t>(std::countr_zero(current_)));
        }

        auto operator++() -> Iterator &
        {
            current_ &= current_ - 1;
            settle();
            return *this;
        }

        auto operator++(int) -> Iterator
        {
            auto old = *this;
            ++*this;
            return old;
        }

        friend auto operator==(const Iterator & a, const Iterator & b) -> bool
        {
            return a.word_index_ == b.word_index_ && a.current_ == b.current_;
        }

    private:
        auto settle() -> void
        {
            while (current_ == 0) {
                ++word_index_;
                if (word_index_ >= set_->words_.size()) {
                    word_index_ = set_->words_.size();
                    return;
                }
                current_ = set_->words_[word_index_];
            }
        }

        const VertexSet * set_ = nullptr;
        std::size_t word_index_ = 0;
        Word current_ = 0;
    };

    VertexSet() = default;

    explicit VertexSet(std::size_t universe) :
        universe_(universe), words_((universe + kWordBits - 1) / kWordBits, Word{0})
    {
    }

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    static auto full(std::size_t universe) -> VertexSet
    {
        VertexSet result(universe);
        std::fill(result.words_.begin(), result.words_.end(), ~Word{0});
        result.trim();
        return result;
    }

    template <typename Range>
    static auto from_range(std::size_t universe, const Range & members) -> VertexSet
    {
        VertexSet result(universe);
        for (auto v : members)
            result.insert(static_cast<Vertex>(v));
        return result;
    }

    /// Bits 0..universe-1 of a single mask; universe must be at most 64.
    static auto from_mask(std::size_t universe, Word mask) -> VertexSet
    {
        assert(universe <= kWordBits);
        VertexSet result(universe);
        if (! result.words_.empty())
            result.words_[0] = mask;
        result.trim();
        return result;
    }

    auto universe() const -> std::size_t { return universe_; }

    auto contains(Vertex v) const -> bool
    {
        return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
    }

    auto insert(Vertex v) -> void
    {
        assert(v < universe_);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }

    auto erase(Vertex v) -> void
    {
        assert(v < universe_);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }

    auto set(Vertex v, bool value) -> void
    {
        if (value)
            insert(v);
        else
            erase(v);
    }

    auto size() const -> std::size_t
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    auto empty() const -> bool
    {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    auto clear() -> void { std::fill(words_.begin(), words_.end(), Word{0}); }

    /// Lowest member; universe() when empty.
    auto first() const -> Vertex
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return static_cast<Vertex>(universe_);
    }

    auto intersects(const VertexSet & other) const -> bool
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    auto is_subset_of(const VertexSet & other) const -> bool
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    auto intersection_size(const VertexSet & other) const -> std::size_t
    {
        assert(universe_ == other.universe_);
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return total;
    }

    auto complement() const -> VertexSet
    {
        VertexSet result(*this);
        for (auto & w : result.words_)
            w = ~w;
        result.trim();
        return result;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// Set difference.
    auto operator-=(const VertexSet & other) -> VertexSet &
    {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    friend auto operator==(const VertexSet & a, const VertexSet & b) -> bool
    {
        return a.universe_ == b.universe_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
    }

    /// Compares member lists lexicographically (sorted ascending).
    friend auto lexicographically_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        auto ia = a.begin(), ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
            if (*ia != *ib)
                return *ia < *ib;
        return ia == a.end() && ib != b.end();
    }

    auto begin() const -> Iterator { return Iterator(this, 0); }
    auto end() const -> Iterator { return Iterator(this, words_.size()); }

    auto to_vector() const -> std::vector<Vertex> { return std::vector<Vertex>(begin(), end()); }

    auto words() const -> std::span<const Word> { return {words_.data(), words_.size()}; }

    /// Low 64 bits; meaningful only when universe() <= 64.
    auto mask() const -> Word { return words_.empty() ? Word{0} : words_[0]; }

private:
    auto trim() -> void
    {
        if (universe_ % kWordBits != 0 && ! words_.empty())
            words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }

    std::size_t universe_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

} // namespace gpos
