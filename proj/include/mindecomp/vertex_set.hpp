#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mindecomp {

/// Dense vertex id. Internally 0-based; the file formats shift to 1-based.
using Vertex = std::uint32_t;

/// Fixed-universe bit set over the vertices 0..universe-1 of one graph.
///
/// Sets from different universes must not be mixed in binary operations.
/// Up to 256 vertices are stored inline, which covers every solver workload.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, Word{0}) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (auto v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
        return s;
    }

    template <class Range>
    static VertexSet from_range(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const {
        assert(v < universe_);
        return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void insert(Vertex v) {
        assert(v < universe_);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(Vertex v) {
        assert(v < universe_);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    /// Lexicographic order on the sorted member lists ({1,2} < {1,3} < {2}).
    friend bool lex_less(const VertexSet& a, const VertexSet& b) {
        const auto am = a.members();
        const auto bm = b.members();
        return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
    }

    /// Strict weak order usable for std::map keys (not lexicographic on members).
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    /// Smallest member, or universe() when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
        return static_cast<Vertex>(universe_);
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w != 0) {
                const int bit = std::countr_zero(w);
                f(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ std::hash<Word>{}(w)) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

private:
    std::size_t universe_ = 0;
    boost::container::small_vector<Word, 4> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace mindecomp
