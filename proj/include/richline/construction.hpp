#pragma once

#include <richline/errors.hpp>
#include <richline/gap.hpp>
#include <richline/numberfield.hpp>

#include <utility>
#include <vector>

namespace richline {

/// A line y = m x + b with exact field coefficients. Distinct coefficient
/// vectors give distinct real lines because the basis is a basis.
struct Line {
    IntElement slope;
    IntElement intercept;

    bool operator==(const Line&) const = default;
};

/// The implicit point set: the product of two coefficient boxes. Never
/// materialized except for export and the desk-scale oracle.
struct PointGrid {
    StructureTable table;
    GapBox x_box;
    GapBox y_box;

    Int point_count() const {
        return x_box.cardinality() * y_box.cardinality();
    }
};

/// Everything derived from (N, r, table): the four box half-widths, the line
/// counts, and the margin of the exact richness certificate
/// n^2 C h_m h_x + h_b <= h_y.
struct ConstructionParams {
    Int N;
    Int r;
    StructureTable table;
    Int c_lambda_value;

    Int h_x;  // x-coordinate box, target size r
    Int h_y;  // y-coordinate box, target size N/r
    Int h_m;  // slope box
    Int h_b;  // intercept box

    Int guaranteed_lines;   // actual family size (2h_m+1)^n (2h_b+1)^n
    Int paper_lines;        // floor(N^2 / ((2 n^2 C)^n r^3))
    Int margin;             // h_y - n^2 C h_m h_x - h_b, certified >= 0
    Int achieved_richness;  // points per line, (2h_x+1)^n
    bool degenerate_slopes = false;  // h_m == 0: single zero slope

    unsigned dim() const { return table.dim(); }

    GapBox x_box() const { return GapBox(dim(), h_x); }
    GapBox y_box() const { return GapBox(dim(), h_y); }
    GapBox slope_box() const { return GapBox(dim(), h_m); }
    GapBox intercept_box() const { return GapBox(dim(), h_b); }

    PointGrid grid() const { return PointGrid{table, x_box(), y_box()}; }
};

/// Derive the construction for target point count N and richness r over the
/// given basis. Box-size arguments use integer division, which only shrinks
/// the boxes; the richness condition is then checked eagerly so that every
/// downstream guarantee rests on an exact certificate, not on the floored
/// asymptotics.
inline ConstructionParams derive_params(const Int& N, const Int& r,
                                        const StructureTable& table) {
    if (N < 1 || r < 1) {
        throw HypothesisError("derive_params: N and r must be positive");
    }
    if (r * r > N) {
        throw HypothesisError("derive_params: hypothesis r^2 <= N violated");
    }
    const unsigned n = table.dim();
    const Int c = c_lambda(table);
    const Int n2c = Int(n) * Int(n) * c;

    const Int slope_arg = N / (int_pow(n2c, n) * r * r);
    if (slope_arg < 1) {
        throw ParamsTooSmallError(
            "derive_params: N too small for r, slope box would be empty");
    }
    const Int intercept_arg = N / (int_pow(Int(2), n) * r);
    if (intercept_arg < 1) {
        throw ParamsTooSmallError(
            "derive_params: N too small for r, intercept box would be empty");
    }

    ConstructionParams p{N, r, table, c, 0, 0, 0, 0, 0, 0, 0, 0, false};
    p.h_x = box_for_size(r, n).half_width();
    p.h_y = box_for_size(N / r, n).half_width();
    p.h_m = box_for_size(slope_arg, n).half_width();
    p.h_b = box_for_size(intercept_arg, n).half_width();

    p.margin = p.h_y - n2c * p.h_m * p.h_x - p.h_b;
    if (p.margin < 0) {
        // The floored widths are supposed to make this impossible.
        throw InternalError("derive_params: richness condition failed");
    }

    p.guaranteed_lines = int_pow(2 * p.h_m + 1, n) * int_pow(2 * p.h_b + 1, n);
    p.paper_lines = (N * N) / (int_pow(2 * n2c, n) * r * r * r);
    p.achieved_richness = int_pow(2 * p.h_x + 1, n);
    p.degenerate_slopes = (p.h_m == 0);
    return p;
}

/// The line family as an indexed stream: slope-major lexicographic order,
/// splittable into disjoint index ranges for parallel consumption.
class LineFamily {
public:
    explicit LineFamily(const ConstructionParams& p)
        : slope_box_(p.slope_box()), intercept_box_(p.intercept_box()) {}

    Int size() const {
        return slope_box_.cardinality() * intercept_box_.cardinality();
    }

    Line at(const Int& index) const {
        Int si = index / intercept_box_.cardinality();
        Int bi = index % intercept_box_.cardinality();
        return Line{IntElement{slope_box_.at(si)},
                    IntElement{intercept_box_.at(bi)}};
    }

    /// Visit lines with index in [begin, end), in index order.
    template <typename F>
    void for_each_in_range(const Int& begin, const Int& end, F&& f) const {
        if (begin >= end) {
            return;
        }
        Line line = at(begin);
        Int remaining = end - begin;
        while (true) {
            f(line);
            if (--remaining == 0) {
                break;
            }
            if (!intercept_box_.next(line.intercept.coords)) {
                slope_box_.next(line.slope.coords);
            }
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for_each_in_range(0, size(), std::forward<F>(f));
    }

private:
    GapBox slope_box_;
    GapBox intercept_box_;
};

inline LineFamily build_lines(const ConstructionParams& p) {
    return LineFamily(p);
}

inline IntElement evaluate_line_at(const Line& line, const IntElement& x,
                                   const StructureTable& t) {
    return add(mul(line.slope, x, t), line.intercept);
}

/// The one-dimensional rational basis {1}; the integer-grid constructions
/// live over this table.
inline StructureTable rational_table() {
    MinimalPolynomial p{{Int(-1), Int(1)}};  // x - 1
    return power_basis_table(p, 1.0);
}

/// Balanced integer grid, both axes sized sqrt(N). Carries no analytic line
/// family; richness is checked empirically through the oracle.
inline PointGrid erdos_balanced(const Int& N) {
    if (N < 1) {
        throw HypothesisError("erdos_balanced: N must be positive");
    }
    StructureTable t = rational_table();
    GapBox axis = box_for_size(integer_nth_root(N, 2), 1);
    return PointGrid{std::move(t), axis, axis};
}

/// Unbalanced integer grid r x N/r. The general derivation specializes to
/// it over the rational table, so this is literally the same code path.
inline ConstructionParams elekes_unbalanced(const Int& N, const Int& r) {
    return derive_params(N, r, rational_table());
}

/// Balanced grid over the quadratic basis {1, sqrt(k)}, both axes sized
/// sqrt(N). Requires square-free k >= 2 so that x^2 - k is irreducible and
/// the basis embeds faithfully. No analytic line family.
inline PointGrid guth_silier(const Int& N, const Int& k) {
    if (N < 1) {
        throw HypothesisError("guth_silier: N must be positive");
    }
    if (k < 2) {
        throw HypothesisError("guth_silier: k must be >= 2");
    }
    for (Int d = 2; d * d <= k; ++d) {
        if (k % (d * d) == 0) {
            throw HypothesisError("guth_silier: k must be square-free");
        }
    }
    MinimalPolynomial p{{-k, Int(0), Int(1)}};  // x^2 - k
    StructureTable t = power_basis_table(p, std::sqrt(to_double(k)));
    GapBox axis = box_for_size(integer_nth_root(N, 2), 2);
    return PointGrid{std::move(t), axis, axis};
}

}  // namespace richline
