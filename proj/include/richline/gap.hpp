#pragma once

#include <richline/errors.hpp>
#include <richline/numbers.hpp>

#include <utility>
#include <vector>

namespace richline {

/// floor(m^(1/n)) for m >= 0, n >= 1, by integer binary search. The result
/// root satisfies root^n <= m < (root+1)^n.
inline Int integer_nth_root(const Int& m, unsigned n) {
    if (m < 0) {
        throw std::domain_error("integer_nth_root: negative radicand");
    }
    if (n == 0) {
        throw std::domain_error("integer_nth_root: zeroth root");
    }
    if (m == 0) {
        return 0;
    }
    Int hi = 1;
    while (int_pow(hi, n) <= m) {
        hi <<= 1;
    }
    Int lo = hi >> 1;  // lo^n <= m < hi^n
    while (hi - lo > 1) {
        Int mid = (lo + hi) >> 1;
        if (int_pow(mid, n) <= m) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

/// Symmetric coefficient box: the vectors (a_1, ..., a_n) with |a_i| <= h.
/// Enumeration is lexicographic from (-h, ..., -h), last coordinate fastest.
class GapBox {
public:
    GapBox(unsigned dim, Int half_width)
        : n_(dim), h_(std::move(half_width)) {
        if (n_ == 0) {
            throw std::domain_error("GapBox: dimension must be positive");
        }
        if (h_ < 0) {
            throw std::domain_error("GapBox: negative half-width");
        }
    }

    unsigned dim() const { return n_; }
    const Int& half_width() const { return h_; }

    Int side() const { return 2 * h_ + 1; }
    Int cardinality() const { return int_pow(side(), n_); }

    bool contains(const std::vector<Int>& x) const {
        if (x.size() != n_) {
            throw DimensionError("GapBox::contains: dimension mismatch");
        }
        for (const Int& c : x) {
            if (c > h_ || c < -h_) {
                return false;
            }
        }
        return true;
    }

    std::vector<Int> first() const { return std::vector<Int>(n_, -h_); }

    /// Advance v to its lexicographic successor; false once v was the last
    /// vector (v is then reset to the first).
    bool next(std::vector<Int>& v) const {
        for (unsigned i = n_; i-- > 0;) {
            if (v[i] < h_) {
                ++v[i];
                return true;
            }
            v[i] = -h_;
        }
        return false;
    }

    /// Vector at a given lexicographic rank, 0 <= index < cardinality().
    std::vector<Int> at(Int index) const {
        if (index < 0 || index >= cardinality()) {
            throw std::out_of_range("GapBox::at: rank out of range");
        }
        const Int base = side();
        std::vector<Int> v(n_);
        for (unsigned i = n_; i-- > 0;) {
            Int digit = index % base;
            index /= base;
            v[i] = digit - h_;
        }
        return v;
    }

    template <typename F>
    void for_each(F&& f) const {
        std::vector<Int> v = first();
        do {
            f(v);
        } while (next(v));
    }

private:
    unsigned n_;
    Int h_;
};

/// Box realizing a coefficient set of target size m: half-width
/// floor(m^(1/n) / 2). Flooring only shrinks the set, so every downstream
/// guarantee is re-verified exactly instead of trusted through the floor.
inline GapBox box_for_size(const Int& m, unsigned n) {
    if (m < 1) {
        throw std::domain_error("box_for_size: size must be positive");
    }
    return GapBox(n, integer_nth_root(m, n) / 2);
}

}  // namespace richline
