#pragma once

#include <richline/construction.hpp>
#include <richline/errors.hpp>
#include <richline/sampling.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace richline {

// Incidence tests are fully symbolic: y = mx + b holds in the reals iff it
// holds in the field, and box membership is an integer comparison. Floating
// point appears only in exports.

struct Point {
    RatElement x;
    RatElement y;

    bool operator==(const Point&) const = default;
};

namespace detail {

inline int lex_compare(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) {
            return -1;
        }
        if (b[i] < a[i]) {
            return 1;
        }
    }
    if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
    }
    return 0;
}

}  // namespace detail

inline bool operator<(const Point& a, const Point& b) {
    int c = detail::lex_compare(a.x.coords, b.x.coords);
    if (c != 0) {
        return c < 0;
    }
    return detail::lex_compare(a.y.coords, b.y.coords) < 0;
}

/// One value per geometric line: vertical lines by their x-coordinate,
/// everything else by exact (slope, intercept). Whichever point pair spans
/// the line, the canonical form is identical, so exact rationals make this
/// a collision-free key.
struct CanonicalLine {
    enum class Kind { vertical, sloped };

    Kind kind = Kind::sloped;
    RatElement slope;      // sloped only
    RatElement intercept;  // sloped only
    RatElement x0;         // vertical only

    bool operator==(const CanonicalLine&) const = default;
};

inline bool operator<(const CanonicalLine& a, const CanonicalLine& b) {
    if (a.kind != b.kind) {
        return a.kind < b.kind;
    }
    if (a.kind == CanonicalLine::Kind::vertical) {
        return detail::lex_compare(a.x0.coords, b.x0.coords) < 0;
    }
    int c = detail::lex_compare(a.slope.coords, b.slope.coords);
    if (c != 0) {
        return c < 0;
    }
    return detail::lex_compare(a.intercept.coords, b.intercept.coords) < 0;
}

inline CanonicalLine canonical_form(const Line& line) {
    CanonicalLine c;
    c.kind = CanonicalLine::Kind::sloped;
    c.slope = to_rational(line.slope);
    c.intercept = to_rational(line.intercept);
    return c;
}

/// The line through two distinct points, in canonical form. Equal
/// x-coordinates give a vertical line; otherwise the slope is computed by
/// exact field division.
inline CanonicalLine line_through(const Point& p, const Point& q,
                                  const StructureTable& t) {
    if (p.x == q.x) {
        if (p.y == q.y) {
            throw DegeneratePairError("line_through: points coincide");
        }
        CanonicalLine c;
        c.kind = CanonicalLine::Kind::vertical;
        c.x0 = p.x;
        return c;
    }
    CanonicalLine c;
    c.kind = CanonicalLine::Kind::sloped;
    c.slope = mul(sub(q.y, p.y), invert(sub(q.x, p.x), t), t);
    c.intercept = sub(p.y, mul(c.slope, p.x, t));
    return c;
}

inline bool point_on_line(const Point& p, const CanonicalLine& line,
                          const StructureTable& t) {
    if (line.kind == CanonicalLine::Kind::vertical) {
        return p.x == line.x0;
    }
    return p.y == add(mul(line.slope, p.x, t), line.intercept);
}

/// Points of an x-box times y-box grid as explicit field-coordinate pairs,
/// x-major lexicographic. Callers enforce their own size guard first.
inline std::vector<Point> materialize_points(const PointGrid& grid) {
    std::vector<Point> pts;
    grid.x_box.for_each([&](const std::vector<Int>& xv) {
        RatElement x = to_rational(IntElement{xv});
        grid.y_box.for_each([&](const std::vector<Int>& yv) {
            pts.push_back(Point{x, to_rational(IntElement{yv})});
        });
    });
    return pts;
}

/// Number of grid points on the line: for each x in the x-box, evaluate
/// y = mx + b exactly and test membership in the y-box. For a constructed
/// line every x succeeds, so the count equals the x-box cardinality.
inline Int count_points_on_line(const Line& line,
                                const ConstructionParams& params) {
    detail::require_dim(line.slope.dim(), params.dim(), "count_points_on_line");
    detail::require_dim(line.intercept.dim(), params.dim(),
                        "count_points_on_line");
    const GapBox x_box = params.x_box();
    const GapBox y_box = params.y_box();
    Int count = 0;
    x_box.for_each([&](const std::vector<Int>& xv) {
        IntElement y = evaluate_line_at(line, IntElement{xv}, params.table);
        if (y_box.contains(y.coords)) {
            ++count;
        }
    });
    return count;
}

struct RichnessReport {
    unsigned n = 0;
    Int c_lambda_value;
    Int N;
    Int r;
    Int lines_total;        // size of the constructed family
    Int lines_checked;      // all of them, or the sample size
    Int expected_per_line;  // (2 h_x + 1)^n
    Int min_points;
    Int max_points;
    Rat mean_points;
    Int lines_meeting_target;  // checked lines with count >= r
    Rat achieved_constant;     // guaranteed_lines * r^3 / N^2
    Rat paper_constant;        // 1 / (2 n^2 C)^n
    bool sampled = false;
    std::uint64_t seed = kDefaultSeed;
};

struct VerifyOptions {
    std::optional<Int> sample;  // check only this many lines, drawn uniformly
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 0;  // 0 = hardware concurrency
};

namespace detail {

struct VerifyAccumulator {
    Int checked = 0;
    Int min_points = 0;
    Int max_points = 0;
    Int sum_points = 0;
    Int meeting_target = 0;
    std::optional<Int> violation_index;
    Line violation_line;
    Int violation_count = 0;

    void absorb_line(const Int& index, const Line& line, const Int& count,
                     const Int& expected, const Int& target) {
        if (checked == 0) {
            min_points = count;
            max_points = count;
        } else {
            if (count < min_points) {
                min_points = count;
            }
            if (count > max_points) {
                max_points = count;
            }
        }
        ++checked;
        sum_points += count;
        if (count >= target) {
            ++meeting_target;
        }
        if (count != expected && !violation_index) {
            violation_index = index;
            violation_line = line;
            violation_count = count;
        }
    }

    void merge(const VerifyAccumulator& o) {
        if (o.checked == 0) {
            return;
        }
        if (checked == 0) {
            *this = o;
            return;
        }
        if (o.min_points < min_points) {
            min_points = o.min_points;
        }
        if (o.max_points > max_points) {
            max_points = o.max_points;
        }
        checked += o.checked;
        sum_points += o.sum_points;
        meeting_target += o.meeting_target;
        if (o.violation_index &&
            (!violation_index || *o.violation_index < *violation_index)) {
            violation_index = o.violation_index;
            violation_line = o.violation_line;
            violation_count = o.violation_count;
        }
    }
};

/// Count with the x-box vectors already materialized; the verification inner
/// loop shares them across every line.
inline Int count_with_xs(const Line& line, const std::vector<IntElement>& xs,
                         const GapBox& y_box, const StructureTable& t) {
    Int count = 0;
    for (const IntElement& x : xs) {
        IntElement y = evaluate_line_at(line, x, t);
        if (y_box.contains(y.coords)) {
            ++count;
        }
    }
    return count;
}

}  // namespace detail

/// Exact richness check over the whole family, or over a uniform sample when
/// one is requested. Every constructed line must contain exactly
/// (2 h_x + 1)^n grid points; any other count throws RichnessError carrying
/// the offending line. The line index space is partitioned across workers;
/// all aggregation is commutative, so the report does not depend on the
/// partition.
inline RichnessReport verify_construction(const ConstructionParams& params,
                                          const VerifyOptions& options = {}) {
    const LineFamily family = build_lines(params);
    const Int total = family.size();
    if (total != params.guaranteed_lines) {
        throw InternalError("verify_construction: family size mismatch");
    }

    const bool sampled = options.sample && *options.sample < total;
    std::vector<Int> sample_set;
    if (sampled) {
        if (*options.sample < 1) {
            throw std::domain_error("verify_construction: empty sample");
        }
        sample_set = sample_indices(total, *options.sample, options.seed);
    }
    const Int checked_total = sampled ? Int(sample_set.size()) : total;

    std::vector<IntElement> xs;
    params.x_box().for_each(
        [&](const std::vector<Int>& v) { xs.push_back(IntElement{v}); });

    unsigned workers = options.workers;
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    // Do not spawn more workers than lines.
    if (Int(workers) > checked_total) {
        workers = checked_total.convert_to<unsigned>();
    }

    const GapBox y_box = params.y_box();
    std::vector<detail::VerifyAccumulator> acc(workers);

    auto run_chunk = [&](unsigned w) {
        detail::VerifyAccumulator& a = acc[w];
        auto handle = [&](const Int& index, const Line& line) {
            Int count = detail::count_with_xs(line, xs, y_box, params.table);
            a.absorb_line(index, line, count, params.achieved_richness,
                          params.r);
        };
        if (sampled) {
            const std::size_t k = sample_set.size();
            const std::size_t lo = k * w / workers;
            const std::size_t hi = k * (w + 1) / workers;
            for (std::size_t i = lo; i < hi; ++i) {
                handle(sample_set[i], family.at(sample_set[i]));
            }
        } else {
            const Int lo = total * w / workers;
            const Int hi = total * (w + 1) / workers;
            Int index = lo;
            family.for_each_in_range(lo, hi, [&](const Line& line) {
                handle(index, line);
                ++index;
            });
        }
    };

    if (workers <= 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run_chunk, w);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    detail::VerifyAccumulator merged;
    for (const detail::VerifyAccumulator& a : acc) {
        merged.merge(a);
    }

    if (merged.violation_index) {
        std::ostringstream msg;
        msg << "line " << *merged.violation_index << " contains "
            << merged.violation_count << " grid points, expected "
            << params.achieved_richness;
        throw RichnessError(msg.str(), *merged.violation_index,
                            merged.violation_line.slope.coords,
                            merged.violation_line.intercept.coords,
                            merged.violation_count);
    }

    const unsigned n = params.dim();
    RichnessReport rep;
    rep.n = n;
    rep.c_lambda_value = params.c_lambda_value;
    rep.N = params.N;
    rep.r = params.r;
    rep.lines_total = total;
    rep.lines_checked = merged.checked;
    rep.expected_per_line = params.achieved_richness;
    rep.min_points = merged.min_points;
    rep.max_points = merged.max_points;
    rep.mean_points =
        merged.checked == 0 ? Rat(0) : make_rat(merged.sum_points, merged.checked);
    rep.lines_meeting_target = merged.meeting_target;
    rep.achieved_constant =
        make_rat(params.guaranteed_lines * params.r * params.r * params.r,
                 params.N * params.N);
    const Int n2c2 = 2 * Int(n) * Int(n) * params.c_lambda_value;
    rep.paper_constant = make_rat(1, int_pow(n2c2, n));
    rep.sampled = sampled;
    rep.seed = options.seed;
    return rep;
}

/// Quadratic pair enumeration refuses beyond this point count rather than
/// silently sampling.
constexpr std::int64_t kOracleMaxPoints = 20000;

/// Exhaustive r-rich-line detection by pair enumeration: canonicalize the
/// line through every pair, recover each line's point count t from its pair
/// count t(t-1)/2, and keep the lines with t >= r. Exact; independent of the
/// construction path it cross-checks.
inline std::map<CanonicalLine, Int> rich_lines_oracle(
    const std::vector<Point>& points, const Int& r, const StructureTable& t) {
    if (Int(points.size()) > kOracleMaxPoints) {
        std::ostringstream msg;
        msg << "rich_lines_oracle: " << points.size() << " points exceed the "
            << kOracleMaxPoints << "-point guard";
        throw OracleGuardError(msg.str());
    }
    {
        std::vector<Point> sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw DegeneratePairError("rich_lines_oracle: duplicate points");
        }
    }

    std::map<CanonicalLine, Int> pair_counts;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            ++pair_counts[line_through(points[i], points[j], t)];
        }
    }

    std::map<CanonicalLine, Int> rich;
    for (const auto& [line, pairs] : pair_counts) {
        // pairs = t(t-1)/2 for a line with t distinct points.
        Int disc = 8 * pairs + 1;
        Int s = integer_nth_root(disc, 2);
        if (s * s != disc) {
            throw InternalError("rich_lines_oracle: non-triangular pair count");
        }
        Int points_on_line = (1 + s) / 2;
        if (points_on_line >= r) {
            rich.emplace(line, std::move(points_on_line));
        }
    }
    return rich;
}

/// Total number of (point, line) incidences, line-major.
inline Int count_incidences(const std::vector<Point>& points,
                            const std::vector<CanonicalLine>& lines,
                            const StructureTable& t) {
    if (Int(points.size()) > kOracleMaxPoints) {
        throw OracleGuardError("count_incidences: point guard exceeded");
    }
    Int total = 0;
    for (const CanonicalLine& line : lines) {
        for (const Point& p : points) {
            if (point_on_line(p, line, t)) {
                ++total;
            }
        }
    }
    return total;
}

struct OracleReport {
    Int point_count;
    Int oracle_rich_lines;     // lines with count >= r among the points
    Int constructed_lines;     // guaranteed_lines
    bool containment = false;  // every constructed line found, count >= achieved
};

/// Cross-validate a construction against the pair oracle: materialize the
/// grid, find every r-rich line independently, and confirm the constructed
/// family is contained with at least the certified richness.
inline OracleReport oracle_cross_check(const ConstructionParams& params) {
    const PointGrid grid = params.grid();
    const Int point_count = grid.point_count();
    if (point_count > kOracleMaxPoints) {
        std::ostringstream msg;
        msg << "oracle_cross_check: " << point_count << " points exceed the "
            << kOracleMaxPoints << "-point guard";
        throw OracleGuardError(msg.str());
    }
    const std::vector<Point> points = materialize_points(grid);
    const std::map<CanonicalLine, Int> rich =
        rich_lines_oracle(points, params.r, params.table);

    bool containment = true;
    build_lines(params).for_each([&](const Line& line) {
        auto it = rich.find(canonical_form(line));
        if (it == rich.end() || it->second < params.achieved_richness) {
            containment = false;
        }
    });

    OracleReport rep;
    rep.point_count = point_count;
    rep.oracle_rich_lines = Int(rich.size());
    rep.constructed_lines = params.guaranteed_lines;
    rep.containment = containment;
    return rep;
}

}  // namespace richline
