#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gp {

// Subset of vertex labels 0..n-1 stored as a fixed-width bit mask.
// Only bits below the universe size may ever be set.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(n), w_(word_count(n), 0) { assert(n >= 0); }

    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.w_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[size_t(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[size_t(i) >> 6] |= uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[size_t(i) >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    VertexSet minus(const VertexSet& o) const {
        assert(n_ == o.n_);
        VertexSet r(*this);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Visits members in ascending label order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                f(int(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

private:
    static size_t word_count(int n) { return (size_t(n) + 63) / 64; }

    void trim() {
        if (!w_.empty() && (n_ & 63)) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace gp
