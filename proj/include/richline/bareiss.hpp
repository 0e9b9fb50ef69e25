#pragma once

#include <richline/errors.hpp>
#include <richline/numbers.hpp>

#include <cstddef>
#include <vector>

namespace richline {

/// Solve A z = b over the integers by fraction-free (Bareiss) elimination,
/// returning the exact rational solution. Every interior division is exact,
/// so coefficient growth stays polynomial instead of the exponential blow-up
/// of naive rational elimination. Throws NotAFieldError on a singular A.
inline std::vector<Rat> solve_fraction_free(std::vector<std::vector<Int>> m,
                                            const std::vector<Int>& rhs) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) {
            throw DimensionError("solve_fraction_free: matrix not square");
        }
        m[i].push_back(rhs.at(i));
    }

    auto exact_div = [](const Int& num, const Int& den) {
        Int q, r;
        boost::multiprecision::divide_qr(num, den, q, r);
        if (r != 0) {
            throw InternalError("solve_fraction_free: inexact Bareiss division");
        }
        return q;
    };

    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot on the largest magnitude to keep intermediate entries small.
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (abs(m[i][k]) > abs(m[piv][k])) {
                piv = i;
            }
        }
        if (m[piv][k] == 0) {
            throw NotAFieldError("solve_fraction_free: singular matrix");
        }
        if (piv != k) {
            m[piv].swap(m[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if (m[n - 1][n - 1] == 0) {
        throw NotAFieldError("solve_fraction_free: singular matrix");
    }

    std::vector<Rat> z(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= z[j] * m[i][j];
        }
        z[i] = acc / Rat(m[i][i]);
    }
    return z;
}

}  // namespace richline
