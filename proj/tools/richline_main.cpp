// Command-line front end. JSON goes to stdout so reports are pipeable;
// human-readable summaries go to stderr. Exit codes are a stable contract:
// 0 success, 2 spec error, 3 hypothesis violation, 4 richness violation,
// 5 oracle guard, 6 export cap.

#include <richline/richline.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitSpecError = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitRichness = 4;
constexpr int kExitOracleGuard = 5;
constexpr int kExitExportCap = 6;

struct RunConfig {
    std::string spec_path;
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::optional<std::int64_t> sample;
    std::uint64_t seed = richline::kDefaultSeed;
    std::string format = "json";
    std::string out_path;
    unsigned workers = 0;
    std::int64_t export_cap = 1000000;
    std::optional<std::int64_t> override_h_y;
};

int cmd_basis(const RunConfig& cfg) {
    auto [table, report] = richline::load_basis_spec_unchecked(cfg.spec_path);
    std::cout << richline::validation_report_json(table, report).dump(2)
              << "\n";
    if (!report.pass()) {
        std::cerr << "basis: validation failed\n";
        return kExitSpecError;
    }
    std::cerr << "basis: ok, n=" << table.dim()
              << " C_Lambda=" << richline::c_lambda(table) << "\n";
    return 0;
}

richline::ConstructionParams derive_from(const RunConfig& cfg) {
    richline::StructureTable table = richline::load_basis_spec(cfg.spec_path);
    return richline::derive_params(richline::Int(cfg.n), richline::Int(cfg.r),
                                   table);
}

int cmd_construct(const RunConfig& cfg) {
    richline::ConstructionParams params = derive_from(cfg);
    std::cout << richline::params_report_json(params).dump(2) << "\n";
    std::cerr << "construct: " << params.guaranteed_lines << " lines, each "
              << params.achieved_richness << "-rich\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    richline::ConstructionParams params = derive_from(cfg);
    if (cfg.override_h_y) {
        // Testing hook: force a corrupted y half-width through verification.
        params.h_y = richline::Int(*cfg.override_h_y);
        params.margin = params.h_y -
                        richline::Int(params.dim()) * params.dim() *
                            params.c_lambda_value * params.h_m * params.h_x -
                        params.h_b;
    }
    richline::VerifyOptions options;
    if (cfg.sample) {
        options.sample = richline::Int(*cfg.sample);
    }
    options.seed = cfg.seed;
    options.workers = cfg.workers;
    try {
        richline::RichnessReport report =
            richline::verify_construction(params, options);
        std::cout << richline::richness_report_json(report).dump(2) << "\n";
        std::cerr << "verify: " << report.lines_checked << "/"
                  << report.lines_total << " lines checked, all "
                  << report.expected_per_line << "-rich\n";
        return 0;
    } catch (const richline::RichnessError& e) {
        std::cout << richline::richness_error_json(e).dump(2) << "\n";
        std::cerr << "verify: FAILED: " << e.what() << "\n";
        return kExitRichness;
    }
}

int cmd_oracle(const RunConfig& cfg) {
    richline::ConstructionParams params = derive_from(cfg);
    richline::OracleReport report = richline::oracle_cross_check(params);
    std::cout << richline::oracle_report_json(report).dump(2) << "\n";
    if (!report.containment) {
        std::cerr << "oracle: containment FAILED\n";
        return kExitRichness;
    }
    std::cerr << "oracle: " << report.oracle_rich_lines << " rich lines, "
              << "constructed family contained\n";
    return 0;
}

int cmd_export(const RunConfig& cfg) {
    richline::ConstructionParams params = derive_from(cfg);
    const richline::ExportFormat format = cfg.format == "csv"
                                              ? richline::ExportFormat::csv
                                              : richline::ExportFormat::json;
    richline::ExportResult result = richline::export_construction(
        params, format, cfg.out_path, richline::Int(cfg.export_cap));
    nlohmann::ordered_json j;
    j["points_path"] = result.points_path;
    j["lines_path"] = result.lines_path;
    j["points_written"] = richline::to_decimal(result.points_written);
    j["lines_written"] = richline::to_decimal(result.lines_written);
    std::cout << j.dump(2) << "\n";
    std::cerr << "export: " << result.points_written << " points, "
              << result.lines_written << " lines\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Sharp point-line incidence grids from number fields: derive, "
        "verify, and export exactly certified r-rich line families."};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--spec", cfg.spec_path, "basis specification file")
            ->required();
    };
    auto add_nr = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "target point count N")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--r", cfg.r, "richness target r")
            ->required()
            ->check(CLI::PositiveNumber);
    };

    CLI::App* basis =
        app.add_subcommand("basis", "validate a basis specification");
    add_spec(basis);

    CLI::App* construct =
        app.add_subcommand("construct", "derive construction parameters");
    add_spec(construct);
    add_nr(construct);

    CLI::App* verify =
        app.add_subcommand("verify", "exactly verify line richness");
    add_spec(verify);
    add_nr(verify);
    verify->add_option("--sample", cfg.sample,
                       "check a uniform sample of this many lines")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "sampling seed")
        ->capture_default_str();
    verify->add_option("--workers", cfg.workers,
                       "worker threads (0 = machine parallelism)")
        ->capture_default_str();
    verify->add_option("--override-hy", cfg.override_h_y,
                       "force this y half-width (testing hook)")
        ->group("");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "cross-check against the pair-enumeration oracle");
    add_spec(oracle);
    add_nr(oracle);

    CLI::App* exp =
        app.add_subcommand("export", "write point and line files");
    add_spec(exp);
    add_nr(exp);
    exp->add_option("--format", cfg.format, "json or csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("--out", cfg.out_path, "output base path")->required();
    exp->add_option("--cap", cfg.export_cap, "row cap per file")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (basis->parsed()) {
            return cmd_basis(cfg);
        }
        if (construct->parsed()) {
            return cmd_construct(cfg);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg);
        }
        if (oracle->parsed()) {
            return cmd_oracle(cfg);
        }
        if (exp->parsed()) {
            return cmd_export(cfg);
        }
    } catch (const richline::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    } catch (const richline::HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const richline::RichnessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRichness;
    } catch (const richline::OracleGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOracleGuard;
    } catch (const richline::ExportCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExportCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
