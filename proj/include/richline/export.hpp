#pragma once

#include <richline/construction.hpp>
#include <richline/errors.hpp>
#include <richline/incidence.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace richline {

enum class ExportFormat { json, csv };

struct ExportResult {
    std::string points_path;
    std::string lines_path;
    Int points_written;
    Int lines_written;
};

namespace detail {

/// Shortest-round-trip is what the JSON writer uses; for CSV, %.17g
/// round-trips as well and is byte-stable for a fixed input.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write: " + path);
    }
    out << body;
}

}  // namespace detail

/// Write the materialized point grid and the line family. Columns are the
/// exact integer coordinates (n per axis) followed by the real embeddings.
/// Output is byte-stable across runs for fixed inputs: fixed row order
/// (lexicographic), fixed float formatting.
inline ExportResult export_construction(const ConstructionParams& params,
                                        ExportFormat format,
                                        const std::string& base_path,
                                        const Int& row_cap = Int(1000000)) {
    const PointGrid grid = params.grid();
    const Int points = grid.point_count();
    const Int lines = params.guaranteed_lines;
    if (points > row_cap || lines > row_cap) {
        std::ostringstream msg;
        msg << "export cap exceeded: " << points << " points / " << lines
            << " lines against cap " << row_cap;
        throw ExportCapError(msg.str());
    }

    const unsigned n = params.dim();
    const StructureTable& t = params.table;
    const char* ext = format == ExportFormat::csv ? ".csv" : ".json";

    ExportResult result;
    result.points_path = base_path + ".points" + ext;
    result.lines_path = base_path + ".lines" + ext;
    result.points_written = points;
    result.lines_written = lines;

    if (format == ExportFormat::csv) {
        std::ostringstream pts;
        for (unsigned i = 1; i <= n; ++i) {
            pts << "x" << i << ",";
        }
        for (unsigned i = 1; i <= n; ++i) {
            pts << "y" << i << ",";
        }
        pts << "x_embed,y_embed\n";
        grid.x_box.for_each([&](const std::vector<Int>& xv) {
            const double xe = embed(IntElement{xv}, t);
            grid.y_box.for_each([&](const std::vector<Int>& yv) {
                for (const Int& c : xv) {
                    pts << c << ",";
                }
                for (const Int& c : yv) {
                    pts << c << ",";
                }
                pts << detail::format_double(xe) << ","
                    << detail::format_double(embed(IntElement{yv}, t)) << "\n";
            });
        });
        detail::write_file(result.points_path, pts.str());

        std::ostringstream lns;
        for (unsigned i = 1; i <= n; ++i) {
            lns << "m" << i << ",";
        }
        for (unsigned i = 1; i <= n; ++i) {
            lns << "b" << i << ",";
        }
        lns << "m_embed,b_embed\n";
        build_lines(params).for_each([&](const Line& line) {
            for (const Int& c : line.slope.coords) {
                lns << c << ",";
            }
            for (const Int& c : line.intercept.coords) {
                lns << c << ",";
            }
            lns << detail::format_double(embed(line.slope, t)) << ","
                << detail::format_double(embed(line.intercept, t)) << "\n";
        });
        detail::write_file(result.lines_path, lns.str());
        return result;
    }

    auto coords = [](const std::vector<Int>& v) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Int& c : v) {
            arr.push_back(to_decimal(c));
        }
        return arr;
    };

    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    grid.x_box.for_each([&](const std::vector<Int>& xv) {
        const double xe = embed(IntElement{xv}, t);
        grid.y_box.for_each([&](const std::vector<Int>& yv) {
            nlohmann::ordered_json rec;
            rec["x"] = coords(xv);
            rec["y"] = coords(yv);
            rec["x_embed"] = xe;
            rec["y_embed"] = embed(IntElement{yv}, t);
            pts.push_back(std::move(rec));
        });
    });
    detail::write_file(result.points_path, pts.dump(2) + "\n");

    nlohmann::ordered_json lns = nlohmann::ordered_json::array();
    build_lines(params).for_each([&](const Line& line) {
        nlohmann::ordered_json rec;
        rec["m"] = coords(line.slope.coords);
        rec["b"] = coords(line.intercept.coords);
        rec["m_embed"] = embed(line.slope, t);
        rec["b_embed"] = embed(line.intercept, t);
        lns.push_back(std::move(rec));
    });
    detail::write_file(result.lines_path, lns.dump(2) + "\n");
    return result;
}

}  // namespace richline
