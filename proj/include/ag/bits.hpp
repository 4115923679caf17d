#ifndef AG_BITS_HPP
#define AG_BITS_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "ag/graph.hpp"

namespace ag {

// Fixed-capacity bit set over vertex ids; the workhorse of the solvers.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n, bool ones = false) : n_(n), w_((n + 63) / 64, 0) {
        if (ones) {
            for (auto& x : w_) x = ~0ULL;
            trim();
        }
    }

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits minus(Bits a, const Bits& b) { return a.subtract(b); }
    friend bool operator==(const Bits& a, const Bits& b) { return a.w_ == b.w_; }

    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }
    // first set bit strictly after i, or -1
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t wi = i >> 6;
        std::uint64_t x = w_[wi] >> (i & 63);
        if (x) return i + std::countr_zero(x);
        for (++wi; wi < w_.size(); ++wi)
            if (w_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(w_[wi]);
        return -1;
    }

    VertexSet to_vector() const {
        VertexSet out;
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

private:
    void trim() {
        int r = n_ & 63;
        if (r && !w_.empty()) w_.back() &= (1ULL << r) - 1;
    }
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Adjacency rows as bit sets; shared, read-only during a search.
struct BitGraph {
    int n = 0;
    std::vector<Bits> adj;

    BitGraph() = default;
    explicit BitGraph(const Graph& g) : n(g.num_vertices()), adj(n, Bits(n)) {
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) adj[u].set(v);
    }

    int degree_in(int v, const Bits& alive) const { return adj[v].count_and(alive); }
};

}  // namespace ag

#endif
