#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace lpsem {

/// Index of a ground atom in its program's atom table. Ids follow the
/// lexicographic order of the atoms' printed form.
using AtomId = std::uint32_t;

/// Fixed-universe bitset over atom ids. Iterates in ascending id order.
class AtomSet {
    using Word = std::uint64_t;
    static constexpr std::size_t kBits = 64;

public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = AtomId;
        using difference_type = std::ptrdiff_t;
        using pointer = const AtomId*;
        using reference = AtomId;

        const_iterator() = default;
        const_iterator(const AtomSet* set, std::size_t pos) : set_(set), pos_(pos) { advance(); }

        AtomId operator*() const { return static_cast<AtomId>(pos_); }
        const_iterator& operator++() {
            ++pos_;
            advance();
            return *this;
        }
        const_iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

    private:
        void advance() {
            const std::size_t n = set_ ? set_->universe_ : 0;
            while (pos_ < n) {
                Word w = set_->words_[pos_ / kBits] >> (pos_ % kBits);
                if (w != 0) {
                    pos_ += static_cast<std::size_t>(std::countr_zero(w));
                    return;
                }
                pos_ = (pos_ / kBits + 1) * kBits;
            }
            pos_ = n;
        }

        const AtomSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    AtomSet() = default;
    explicit AtomSet(std::size_t universe) : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
    AtomSet(std::size_t universe, std::initializer_list<AtomId> ids) : AtomSet(universe) {
        for (AtomId id : ids) insert(id);
    }

    static AtomSet full(std::size_t universe) {
        AtomSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    /// Bit i of mask selects atom i. Only valid for universes of at most 64 atoms.
    static AtomSet from_mask(std::size_t universe, std::uint64_t mask) {
        assert(universe <= kBits);
        AtomSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(AtomId id) const {
        return id < universe_ && ((words_[id / kBits] >> (id % kBits)) & 1U) != 0;
    }
    void insert(AtomId id) {
        assert(id < universe_);
        words_[id / kBits] |= Word{1} << (id % kBits);
    }
    void erase(AtomId id) {
        assert(id < universe_);
        words_[id / kBits] &= ~(Word{1} << (id % kBits));
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    bool is_subset_of(const AtomSet& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        }
        return true;
    }
    bool intersects(const AtomSet& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & other.words_[i]) != 0) return true;
        }
        return false;
    }

    /// Smallest member, or universe() when empty.
    AtomId first() const { return *begin(); }

    AtomSet complement() const {
        AtomSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    AtomSet& operator|=(const AtomSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    AtomSet& operator&=(const AtomSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    AtomSet& operator-=(const AtomSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
    friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
    friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }

    friend bool operator==(const AtomSet& a, const AtomSet& b) = default;

    const_iterator begin() const { return const_iterator(this, 0); }
    const_iterator end() const { return const_iterator(this, universe_); }

    std::vector<AtomId> to_vector() const { return {begin(), end()}; }

private:
    void trim() {
        if (universe_ % kBits != 0 && !words_.empty()) {
            words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
        }
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

/// Lexicographic comparison of the ascending member lists.
inline bool lex_less(const AtomSet& a, const AtomSet& b) {
    auto va = a.to_vector();
    auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace lpsem
