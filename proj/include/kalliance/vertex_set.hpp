#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kalliance {

// Subset of {0..n-1}, bound to a fixed universe size n. Value-like; all set
// algebra requires both operands bound to the same n (checked, throws).
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check_vertex(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_vertex(v);
        words_[v >> 6] |= uint64_t(1) << (v & 63);
    }

    void erase(int v) {
        check_vertex(v);
        words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    VertexSet operator|(const VertexSet& o) const {
        check_same(o);
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    VertexSet operator&(const VertexSet& o) const {
        check_same(o);
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    // set difference
    VertexSet operator-(const VertexSet& o) const {
        check_same(o);
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    bool operator==(const VertexSet& o) const {
        check_same(o);
        return words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool subset_of(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int intersection_size(const VertexSet& o) const {
        check_same(o);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // smallest member, or -1 if empty
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // smallest member > v, or -1 if none
    int next(int v) const {
        if (v + 1 >= n_) return -1;
        int start = v + 1;
        size_t wi = size_t(start) >> 6;
        uint64_t w = words_[wi] >> (start & 63);
        if (w) return start + std::countr_zero(w);
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return int(wi * 64 + std::countr_zero(words_[wi]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    // Lexicographic order on the sorted member sequence ({0,3} < {1,2}; {0} < {0,1}).
    bool lex_less(const VertexSet& o) const {
        check_same(o);
        int a = first(), b = o.first();
        while (a != -1 && b != -1) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a == -1 && b != -1;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v = first(); v != -1; v = next(v)) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range for universe " + std::to_string(n_));
    }
    void check_same(const VertexSet& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("vertex sets bound to different universes (" +
                                        std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
    }
    void trim() {
        if (n_ & 63) words_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }

    int n_;
    std::vector<uint64_t> words_;
};

} // namespace kalliance
