#include <richline/basis_spec.hpp>
#include <richline/construction.hpp>
#include <richline/export.hpp>
#include <richline/report_json.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

using namespace richline;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "richline_spec_io";
    fs::create_directories(dir);
    return dir;
}

fs::path write_spec(const std::string& name, const std::string& body) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << body;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kSqrt2Spec =
    R"({"kind":"power","min_poly":[-2,0,1],"alpha":1.4142135623730951})";

}  // namespace

TEST_CASE("power spec loads and validates") {
    fs::path p = write_spec("sqrt2.json", kSqrt2Spec);
    StructureTable t = load_basis_spec(p.string());
    CHECK(t.dim() == 2);
    CHECK(c_lambda(t) == 2);
}

TEST_CASE("table spec loads") {
    // The sqrt-2 table written out explicitly.
    fs::path p = write_spec("table2.json", R"({
      "kind": "table", "n": 2,
      "c": [[[1,0],[0,1]], [[0,1],[2,0]]],
      "unity": [1,0],
      "embedding": [1.0, 1.4142135623730951]
    })");
    StructureTable t = load_basis_spec(p.string());
    CHECK(t.c(1, 1, 0) == 2);
    CHECK(validate_table(t).pass());
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(load_basis_spec((scratch_dir() / "missing.json").string()),
                    SpecError);
    CHECK_THROWS_AS(
        load_basis_spec(write_spec("garbage.json", "not json").string()),
        SpecError);
    CHECK_THROWS_AS(
        load_basis_spec(write_spec("nokind.json", R"({"n":1})").string()),
        SpecError);
    CHECK_THROWS_AS(
        load_basis_spec(
            write_spec("badalpha.json",
                       R"({"kind":"power","min_poly":[-2,0,1],"alpha":1.3})")
                .string()),
        SpecError);

    // Broken symmetry: parses, then fails the validation gate.
    fs::path broken = write_spec("asym.json", R"({
      "kind": "table", "n": 2,
      "c": [[[1,0],[5,0]], [[3,0],[2,0]]],
      "unity": [1,0],
      "embedding": [1.0, 1.4142135623730951]
    })");
    CHECK_THROWS_AS(load_basis_spec(broken.string()), SpecError);
    auto [table, report] = load_basis_spec_unchecked(broken.string());
    CHECK_FALSE(report.pass());
    CHECK_FALSE(report.symmetry_ok);
}

TEST_CASE("reports serialize exact values as strings") {
    fs::path p = write_spec("sqrt2.json", kSqrt2Spec);
    StructureTable t = load_basis_spec(p.string());
    ConstructionParams params = derive_params(46656, 9, t);
    nlohmann::ordered_json j = params_report_json(params);
    CHECK(j["guaranteed_lines"] == "12321");
    CHECK(j["paper_lines"] == "11664");
    CHECK(j["point_count"] == "47961");
    CHECK(j["margin"] == "10");
    CHECK(j["degenerate_slopes"] == false);
    CHECK(j["richness_met"] == true);

    RichnessReport rep = verify_construction(params);
    nlohmann::ordered_json rj = richness_report_json(rep);
    // 12321 * 729 / 46656^2 in lowest terms.
    CHECK(rj["achieved_constant"] == "1369/331776");
    CHECK(rj["paper_constant"] == "1/256");
    CHECK(rj["mean_points"] == "9");
}

TEST_CASE("export writes byte-stable files with exact row counts") {
    StructureTable t = rational_table();
    ConstructionParams params = derive_params(16, 2, t);
    fs::path base = scratch_dir() / "export_n1";

    SECTION("csv") {
        ExportResult res = export_construction(params, ExportFormat::csv,
                                               base.string());
        CHECK(res.points_written == 27);
        CHECK(res.lines_written == 25);
        std::string pts = read_file(res.points_path);
        std::string lns = read_file(res.lines_path);
        CHECK(pts.substr(0, pts.find('\n')) == "x1,y1,x_embed,y_embed");
        CHECK(std::count(pts.begin(), pts.end(), '\n') == 28);  // header + 27
        CHECK(std::count(lns.begin(), lns.end(), '\n') == 26);  // header + 25

        ExportResult again = export_construction(params, ExportFormat::csv,
                                                 base.string());
        CHECK(read_file(again.points_path) == pts);
        CHECK(read_file(again.lines_path) == lns);
    }

    SECTION("json") {
        ExportResult res = export_construction(params, ExportFormat::json,
                                               base.string());
        nlohmann::json pts = nlohmann::json::parse(read_file(res.points_path));
        REQUIRE(pts.is_array());
        CHECK(pts.size() == 27);
        CHECK(pts[0]["x"][0] == "-1");
        CHECK(pts[0]["x_embed"] == -1.0);
        nlohmann::json lns = nlohmann::json::parse(read_file(res.lines_path));
        CHECK(lns.size() == 25);
    }

    SECTION("cap") {
        CHECK_THROWS_AS(export_construction(params, ExportFormat::csv,
                                            base.string(), Int(10)),
                        ExportCapError);
    }
}

TEST_CASE("embedding column matches the field embedding") {
    fs::path spec = write_spec("sqrt2.json", kSqrt2Spec);
    StructureTable t = load_basis_spec(spec.string());
    CHECK_THAT(embed(IntElement{{Int(1), Int(1)}}, t),
               Catch::Matchers::WithinAbs(2.414213562373095, 1e-9));
}
