#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace srgint {

// Fixed-capacity set of vertex indices backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    static VertexSet full(std::size_t capacity) {
        VertexSet s(capacity);
        for (std::size_t i = 0; i < capacity; ++i) s.insert(i);
        return s;
    }

    std::size_t capacity() const { return capacity_; }

    bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void set(std::size_t i, bool on) { on ? insert(i) : erase(i); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t intersection_count(const VertexSet& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Smallest element >= from, or capacity() if none.
    std::size_t next(std::size_t from) const {
        if (from >= capacity_) return capacity_;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
                return i < capacity_ ? i : capacity_;
            }
            if (++k >= words_.size()) return capacity_;
            w = words_[k];
        }
    }
    std::size_t first() const { return next(0); }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for (auto i = first(); i < capacity_; i = next(i + 1)) out.push_back(i);
        return out;
    }

    bool operator==(const VertexSet&) const = default;
    // Orders sets by their sorted element sequence.
    bool lex_less(const VertexSet& o) const {
        auto a = elements(), b = o.elements();
        return a < b;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace srgint
