#pragma once

#include <richline/numbers.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace richline {

/// Default seed for sampled verification; recorded in every sampled report
/// so runs are reproducible.
constexpr std::uint64_t kDefaultSeed = 1;

/// Uniform draw from [0, bound) for arbitrary-precision bounds. Hand-rolled
/// bit rejection on top of mt19937_64: std::uniform_int_distribution is
/// implementation-defined, which would break byte-identical reruns across
/// standard libraries.
inline Int uniform_below(std::mt19937_64& rng, const Int& bound) {
    if (bound <= 1) {
        return 0;
    }
    const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~std::uint64_t(0)
                       : ((std::uint64_t(1) << top_bits) - 1);
    while (true) {
        Int v = rng() & top_mask;
        for (unsigned w = 1; w < words; ++w) {
            v <<= 64;
            v |= Int(rng());
        }
        if (v < bound) {
            return v;
        }
    }
}

/// k distinct indices from [0, total), ascending. Floyd's sampling: each
/// k-subset is equally likely, and the result depends only on
/// (total, k, seed).
inline std::vector<Int> sample_indices(const Int& total, const Int& k,
                                       std::uint64_t seed) {
    if (k < 0 || k > total) {
        throw std::domain_error("sample_indices: k out of range");
    }
    std::mt19937_64 rng(seed);
    std::set<Int> chosen;
    for (Int j = total - k; j < total; ++j) {
        Int t = uniform_below(rng, j + 1);
        if (chosen.count(t)) {
            chosen.insert(j);
        } else {
            chosen.insert(std::move(t));
        }
    }
    return std::vector<Int>(chosen.begin(), chosen.end());
}

}  // namespace richline
