#ifndef DIACHROME_VERTEX_SET_HPP
#define DIACHROME_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace diachrome {

/// Set of vertices drawn from 0..capacity-1, stored as a bitset so that
/// membership tests and set algebra cost O(capacity/64).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {
        assert(capacity >= 0);
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (int v = 0; v < capacity; ++v) s.add(v);
        return s;
    }

    int capacity() const { return capacity_; }

    bool contains(int v) const {
        assert(v >= 0 && v < capacity_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        assert(v >= 0 && v < capacity_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < capacity_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }

    bool empty() const {
        for (auto w : words_) {
            if (w) return false;
        }
        return true;
    }

    /// Least member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        }
        return -1;
    }

    bool intersects(const VertexSet& other) const {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

    int intersection_size(const VertexSet& other) const {
        assert(capacity_ == other.capacity_);
        int total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            total += std::popcount(words_[i] & other.words_[i]);
        }
        return total;
    }

    bool is_subset_of(const VertexSet& other) const {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) {
        assert(capacity_ == other.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    /// Visits members in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t bits = words_[i];
            while (bits) {
                f(static_cast<int>(i * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace diachrome

#endif
