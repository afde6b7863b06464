#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace oal {

/// Subset of {0..n-1} stored as a packed bitset. Word-level ops make
/// membership counts against adjacency rows cheap (popcount per word).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    /// {0, 1, ..., end-1} inside a universe of the given size.
    static VertexSet prefix(int universe, int end) {
        VertexSet s(universe);
        for (int v = 0; v < end; ++v) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    int intersection_size(const VertexSet& o) const {
        require_same_universe(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    /// Number of members with index >= v.
    int count_from(int v) const {
        if (v <= 0) return size();
        if (v >= n_) return 0;
        int c = std::popcount(words_[v >> 6] >> (v & 63));
        for (std::size_t i = (v >> 6) + 1; i < words_.size(); ++i)
            c += std::popcount(words_[i]);
        return c;
    }

    bool intersects(const VertexSet& o) const {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet operator|(const VertexSet& o) const {
        require_same_universe(o);
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] | o.words_[i];
        return s;
    }

    VertexSet operator&(const VertexSet& o) const {
        require_same_universe(o);
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & o.words_[i];
        return s;
    }

    /// Set difference: members of *this not in o.
    VertexSet operator-(const VertexSet& o) const {
        require_same_universe(o);
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & ~o.words_[i];
        return s;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Smallest member >= v, or universe() when none.
    int next(int v) const {
        if (v < 0) v = 0;
        while (v < n_) {
            std::uint64_t w = words_[v >> 6] >> (v & 63);
            if (w) return v + std::countr_zero(w);
            v = (v / 64 + 1) * 64;
        }
        return n_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = next(0); v < n_; v = next(v + 1)) out.push_back(v);
        return out;
    }

    /// Lexicographic order on the sorted member lists (not on bit patterns).
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        int va = a.next(0), vb = b.next(0);
        while (va < a.n_ && vb < b.n_) {
            if (va != vb) return va < vb;
            va = a.next(va + 1);
            vb = b.next(vb + 1);
        }
        return va >= a.n_ && vb < b.n_;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v = next(0); v < n_; v = next(v + 1)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    }
    void require_same_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() {
        if (n_ % 64 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace oal
