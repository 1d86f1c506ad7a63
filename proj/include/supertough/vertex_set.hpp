#ifndef SUPERTOUGH_VERTEX_SET_HPP_
#define SUPERTOUGH_VERTEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace supertough {

/// Largest order handled by the single-word bitset representation.
inline constexpr int kMaxOrder = 64;

/// A subset of {0, ..., 63} stored as one machine word.
///
/// Ordering compares the underlying word, so "lexicographically smallest"
/// witness sets are the ones with the smallest integer value.
class VertexSet {
 public:
    using word_type = std::uint64_t;

    class iterator {
     public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(word_type rest) : rest_{rest} {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

     private:
        word_type rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(word_type bits) : bits_{bits} {}

    static constexpr VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    static constexpr VertexSet single(int v) { return VertexSet{bit(v)}; }

    /// {0, ..., n-1}.
    static constexpr VertexSet full(int n) {
        if (n < 0 || n > kMaxOrder) throw std::out_of_range{"VertexSet::full: order out of range"};
        return VertexSet{n == kMaxOrder ? ~word_type{0} : (word_type{1} << n) - 1};
    }

    template<typename Range>
    static VertexSet from_range(const Range& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    constexpr word_type bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return v >= 0 && v < kMaxOrder && (bits_ >> v) & 1U; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Smallest member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= bit(v); }
    constexpr void erase(int v) { bits_ &= ~bit(v); }
    constexpr VertexSet with(int v) const { return VertexSet{bits_ | bit(v)}; }
    constexpr VertexSet without(int v) const { return VertexSet{bits_ & ~bit(v)}; }

    /// Complement relative to {0, ..., n-1}.
    constexpr VertexSet complement_in(int n) const { return VertexSet{full(n).bits_ & ~bits_}; }

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{}; }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
    static constexpr word_type bit(int v) {
        if (v < 0 || v >= kMaxOrder) throw std::out_of_range{"VertexSet: vertex out of range"};
        return word_type{1} << v;
    }

    word_type bits_ = 0;
};

}  // namespace supertough

#endif  // SUPERTOUGH_VERTEX_SET_HPP_
