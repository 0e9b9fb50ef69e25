#pragma once

#include <richline/bareiss.hpp>
#include <richline/errors.hpp>
#include <richline/numbers.hpp>

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace richline {

/// A field element as its exact coordinate vector a_1, ..., a_n over the
/// working basis. Two elements are equal iff their coordinates are (the
/// basis property), so comparison never consults the table.
template <typename T>
struct Element {
    std::vector<T> coords;

    unsigned dim() const { return static_cast<unsigned>(coords.size()); }

    bool is_zero() const {
        for (const T& c : coords) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const Element&) const = default;
};

using IntElement = Element<Int>;
using RatElement = Element<Rat>;

inline RatElement to_rational(const IntElement& x) {
    RatElement out;
    out.coords.reserve(x.coords.size());
    for (const Int& c : x.coords) {
        out.coords.emplace_back(c);
    }
    return out;
}

/// Lossless only when every coordinate has denominator 1.
inline IntElement to_integral(const RatElement& x) {
    IntElement out;
    out.coords.reserve(x.coords.size());
    for (const Rat& c : x.coords) {
        if (denominator(c) != 1) {
            throw std::domain_error("to_integral: non-integer coordinate");
        }
        out.coords.push_back(numerator(c));
    }
    return out;
}

/// Monic integer polynomial, coefficients ascending (constant term first).
struct MinimalPolynomial {
    std::vector<Int> coefficients;

    unsigned degree() const {
        return static_cast<unsigned>(coefficients.size()) - 1;
    }

    void validate() const {
        if (coefficients.size() < 2) {
            throw SpecError("minimal polynomial must have degree >= 1");
        }
        if (coefficients.back() != 1) {
            throw SpecError("minimal polynomial must be monic");
        }
    }

    double eval(double x) const {
        double acc = 0.0;
        for (std::size_t i = coefficients.size(); i-- > 0;) {
            acc = acc * x + to_double(coefficients[i]);
        }
        return acc;
    }

    double eval_derivative(double x) const {
        double acc = 0.0;
        for (std::size_t i = coefficients.size(); i-- > 1;) {
            acc = acc * x + static_cast<double>(i) * to_double(coefficients[i]);
        }
        return acc;
    }
};

/// The multiplication data of a nice basis: integers c(i,j,k) with
/// lambda_i * lambda_j = sum_k c(i,j,k) lambda_k, the coordinates of the
/// field element 1, and a real embedding of the basis. A table alone does
/// not pick an embedding of the field into the reals, so the embedding is
/// explicit data whose consistency is checked rather than assumed.
class StructureTable {
public:
    StructureTable(unsigned n, std::vector<Int> c, IntElement unity,
                   std::vector<double> embedding)
        : n_(n),
          c_(std::move(c)),
          unity_(std::move(unity)),
          embedding_(std::move(embedding)) {
        if (n_ == 0) {
            throw SpecError("structure table: dimension must be positive");
        }
        if (c_.size() != static_cast<std::size_t>(n_) * n_ * n_) {
            throw SpecError("structure table: expected n^3 constants");
        }
        if (unity_.dim() != n_) {
            throw SpecError("structure table: unity has wrong dimension");
        }
        if (embedding_.size() != n_) {
            throw SpecError("structure table: embedding has wrong dimension");
        }
    }

    unsigned dim() const { return n_; }

    /// Structure constant c(i,j,k), zero-based indices.
    const Int& c(unsigned i, unsigned j, unsigned k) const {
        return c_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }

    const IntElement& unity() const { return unity_; }
    const std::vector<double>& embedding() const { return embedding_; }

    IntElement zero() const { return IntElement{std::vector<Int>(n_, Int(0))}; }

    IntElement basis_vector(unsigned j) const {
        IntElement e = zero();
        e.coords[j] = 1;
        return e;
    }

private:
    unsigned n_;
    std::vector<Int> c_;  // flat (i*n + j)*n + k
    IntElement unity_;
    std::vector<double> embedding_;
};

namespace detail {

inline void require_dim(unsigned have, unsigned want, const char* where) {
    if (have != want) {
        throw DimensionError(std::string(where) + ": dimension mismatch");
    }
}

inline double newton_polish(const MinimalPolynomial& p, double x) {
    for (int it = 0; it < 128; ++it) {
        const double d = p.eval_derivative(x);
        if (d == 0.0) {
            break;
        }
        const double step = p.eval(x) / d;
        x -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) {
            break;
        }
    }
    return x;
}

}  // namespace detail

/// Structure table for the power basis 1, alpha, ..., alpha^(n-1), obtained
/// by reducing alpha^(i+j) modulo the minimal polynomial. alpha_approx must
/// hit a real root of p (residual tolerance 1e-6); it is then polished by
/// Newton iteration so the stored embedding is accurate to machine
/// precision, which the 1e-9 embedding-consistency check requires.
inline StructureTable power_basis_table(const MinimalPolynomial& p,
                                        double alpha_approx) {
    p.validate();
    const unsigned n = p.degree();
    const double residual = p.eval(alpha_approx);
    if (!(std::abs(residual) <= 1e-6)) {
        std::ostringstream msg;
        msg << "alpha_approx is not a root: |p(alpha)| = " << std::abs(residual);
        throw SpecError(msg.str());
    }
    const double alpha = detail::newton_polish(p, alpha_approx);

    // powers[t] = coordinates of alpha^t in the power basis, t = 0..2n-2.
    // Monic p keeps every reduction integral: alpha^n = -(c_0 + ... +
    // c_{n-1} alpha^{n-1}).
    std::vector<std::vector<Int>> powers;
    powers.reserve(2 * n - 1);
    std::vector<Int> cur(n, Int(0));
    cur[0] = 1;
    powers.push_back(cur);
    for (unsigned t = 1; t <= 2 * n - 2; ++t) {
        Int carry = cur[n - 1];
        for (unsigned k = n - 1; k > 0; --k) {
            cur[k] = cur[k - 1];
        }
        cur[0] = 0;
        if (carry != 0) {
            for (unsigned k = 0; k < n; ++k) {
                cur[k] -= carry * p.coefficients[k];
            }
        }
        powers.push_back(cur);
    }

    std::vector<Int> c(static_cast<std::size_t>(n) * n * n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            for (unsigned k = 0; k < n; ++k) {
                c[(static_cast<std::size_t>(i) * n + j) * n + k] =
                    powers[i + j][k];
            }
        }
    }

    IntElement unity{std::vector<Int>(n, Int(0))};
    unity.coords[0] = 1;

    std::vector<double> embedding(n);
    double pw = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        embedding[i] = pw;
        pw *= alpha;
    }
    return StructureTable(n, std::move(c), std::move(unity),
                          std::move(embedding));
}

struct ValidationReport {
    bool symmetry_ok = true;
    bool associativity_ok = true;
    bool unity_ok = true;
    bool embedding_ok = true;
    std::vector<std::string> failures;

    bool pass() const {
        return symmetry_ok && associativity_ok && unity_ok && embedding_ok;
    }
};

inline Int c_lambda(const StructureTable& t) {
    Int best = 0;
    const unsigned n = t.dim();
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            for (unsigned k = 0; k < n; ++k) {
                Int a = abs(t.c(i, j, k));
                if (a > best) {
                    best = a;
                }
            }
        }
    }
    return best;
}

template <typename T>
Element<T> add(const Element<T>& x, const Element<T>& y) {
    detail::require_dim(y.dim(), x.dim(), "add");
    Element<T> out = x;
    for (unsigned i = 0; i < y.dim(); ++i) {
        out.coords[i] += y.coords[i];
    }
    return out;
}

template <typename T>
Element<T> sub(const Element<T>& x, const Element<T>& y) {
    detail::require_dim(y.dim(), x.dim(), "sub");
    Element<T> out = x;
    for (unsigned i = 0; i < y.dim(); ++i) {
        out.coords[i] -= y.coords[i];
    }
    return out;
}

template <typename T>
Element<T> neg(const Element<T>& x) {
    Element<T> out = x;
    for (T& c : out.coords) {
        c = -c;
    }
    return out;
}

/// Exact product through the table: coordinate k of x*y is
/// sum_{i,j} x_i y_j c(i,j,k).
template <typename T>
Element<T> mul(const Element<T>& x, const Element<T>& y,
               const StructureTable& t) {
    const unsigned n = t.dim();
    detail::require_dim(x.dim(), n, "mul");
    detail::require_dim(y.dim(), n, "mul");
    Element<T> out{std::vector<T>(n, T(0))};
    for (unsigned i = 0; i < n; ++i) {
        if (x.coords[i] == 0) {
            continue;
        }
        for (unsigned j = 0; j < n; ++j) {
            if (y.coords[j] == 0) {
                continue;
            }
            T p = x.coords[i] * y.coords[j];
            for (unsigned k = 0; k < n; ++k) {
                const Int& cijk = t.c(i, j, k);
                if (cijk != 0) {
                    out.coords[k] += p * cijk;
                }
            }
        }
    }
    return out;
}

/// Checks the niceness axioms as stated: symmetry c(i,j,k) = c(j,i,k),
/// associativity expanded through the table on all basis triples, the unity
/// law on basis vectors (which extends to all elements by bilinearity), and
/// embedding consistency within relative tolerance 1e-9. Failures are
/// reported, never thrown.
inline ValidationReport validate_table(const StructureTable& t) {
    ValidationReport rep;
    const unsigned n = t.dim();

    for (unsigned i = 0; i < n && rep.symmetry_ok; ++i) {
        for (unsigned j = i + 1; j < n && rep.symmetry_ok; ++j) {
            for (unsigned k = 0; k < n; ++k) {
                if (t.c(i, j, k) != t.c(j, i, k)) {
                    rep.symmetry_ok = false;
                    std::ostringstream msg;
                    msg << "symmetry: c(" << i << "," << j << "," << k
                        << ") != c(" << j << "," << i << "," << k << ")";
                    rep.failures.push_back(msg.str());
                    break;
                }
            }
        }
    }

    // (l_i l_j) l_k vs l_i (l_j l_k), both expanded twice through the table.
    for (unsigned i = 0; i < n && rep.associativity_ok; ++i) {
        for (unsigned j = 0; j < n && rep.associativity_ok; ++j) {
            for (unsigned k = 0; k < n && rep.associativity_ok; ++k) {
                for (unsigned out = 0; out < n; ++out) {
                    Int lhs = 0;
                    Int rhs = 0;
                    for (unsigned m = 0; m < n; ++m) {
                        lhs += t.c(i, j, m) * t.c(m, k, out);
                        rhs += t.c(j, k, m) * t.c(i, m, out);
                    }
                    if (lhs != rhs) {
                        rep.associativity_ok = false;
                        std::ostringstream msg;
                        msg << "associativity: basis triple (" << i << "," << j
                            << "," << k << ")";
                        rep.failures.push_back(msg.str());
                        break;
                    }
                }
            }
        }
    }

    for (unsigned j = 0; j < n; ++j) {
        if (mul(t.unity(), t.basis_vector(j), t) != t.basis_vector(j)) {
            rep.unity_ok = false;
            std::ostringstream msg;
            msg << "unity law fails on basis vector " << j;
            rep.failures.push_back(msg.str());
            break;
        }
    }

    const std::vector<double>& e = t.embedding();
    for (unsigned i = 0; i < n && rep.embedding_ok; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            double direct = e[i] * e[j];
            double via_table = 0.0;
            for (unsigned k = 0; k < n; ++k) {
                via_table += to_double(t.c(i, j, k)) * e[k];
            }
            const double tol = 1e-9 * std::max(1.0, std::abs(direct));
            if (std::abs(direct - via_table) > tol) {
                rep.embedding_ok = false;
                std::ostringstream msg;
                msg << "embedding: e(" << i << ")*e(" << j << ") = " << direct
                    << " but table gives " << via_table;
                rep.failures.push_back(msg.str());
                break;
            }
        }
    }
    return rep;
}

/// Multiplication-by-x as a linear map: column j holds the coordinates of
/// x * lambda_j, so matrix * y = mul(x, y) for every y.
inline std::vector<std::vector<Rat>> representation_matrix(
    const RatElement& x, const StructureTable& t) {
    const unsigned n = t.dim();
    detail::require_dim(x.dim(), n, "representation_matrix");
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) {
            if (x.coords[i] == 0) {
                continue;
            }
            for (unsigned k = 0; k < n; ++k) {
                const Int& cijk = t.c(i, j, k);
                if (cijk != 0) {
                    m[k][j] += x.coords[i] * cijk;
                }
            }
        }
    }
    return m;
}

/// Exact inverse: mul(result, x) = unity. Denominators are cleared so the
/// regular representation is an integer matrix, then the system is solved
/// fraction-free. Needed only by the oracle's slope computation.
inline RatElement invert(const RatElement& x, const StructureTable& t) {
    const unsigned n = t.dim();
    detail::require_dim(x.dim(), n, "invert");
    if (x.is_zero()) {
        throw ZeroDivisionError("invert: zero element");
    }

    Int d = 1;
    for (const Rat& c : x.coords) {
        d = lcm(d, denominator(c));
    }
    std::vector<Int> scaled(n);
    for (unsigned i = 0; i < n; ++i) {
        scaled[i] = numerator(x.coords[i]) * (d / denominator(x.coords[i]));
    }

    // Integer regular representation of d*x.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) {
            if (scaled[i] == 0) {
                continue;
            }
            for (unsigned k = 0; k < n; ++k) {
                const Int& cijk = t.c(i, j, k);
                if (cijk != 0) {
                    m[k][j] += scaled[i] * cijk;
                }
            }
        }
    }

    std::vector<Rat> z = solve_fraction_free(std::move(m), t.unity().coords);
    RatElement out{std::move(z)};
    for (Rat& c : out.coords) {
        c *= d;  // (x)^-1 = d * (d*x)^-1
    }
    return out;
}

template <typename T>
double embed(const Element<T>& x, const StructureTable& t) {
    detail::require_dim(x.dim(), t.dim(), "embed");
    double acc = 0.0;
    for (unsigned i = 0; i < t.dim(); ++i) {
        acc += to_double(x.coords[i]) * t.embedding()[i];
    }
    return acc;
}

}  // namespace richline
