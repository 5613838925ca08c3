// citest: citation-profile indices, total-citation estimators and partition statistics.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "citest/error.hpp"
#include "citest/estimators.hpp"
#include "citest/partitions.hpp"
#include "citest/profile.hpp"
#include "citest/shifted.hpp"
#include "report.hpp"
#include "tables.hpp"

namespace {

using namespace citest;

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kDegenerate = 3,
    kInsufficientTail = 4,
    kResource = 5,
    kMissingFixtures = 6,
};

CitationProfile load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return load_profile(in, format_for_path(path));
}

long partition_ceiling() {
    if (const char* env = std::getenv("CITEST_MAX_N")) {
        try {
            return std::stol(env);
        } catch (const std::exception&) {
            throw ParseError(0, std::string("CITEST_MAX_N is not an integer: ") + env);
        }
    }
    return kDefaultPartitionCeiling;
}

struct IndicesArgs {
    std::string file;
    bool json = false;
    bool csv = false;
    int precision = report::kDefaultPrecision;
};

int run_indices(const IndicesArgs& a) {
    const report::ReportRow row = report::indices_row(load_file(a.file));
    if (a.json) std::cout << report::to_json(row, a.precision).dump(2) << '\n';
    else if (a.csv) report::write_csv(std::cout, std::span(&row, 1), a.precision);
    else report::write_text(std::cout, row, a.precision);
    return kOk;
}

// Smallest prefix length that classifies, searched upward from a known lower bound.
// Success is monotone in the prefix length, so the first success is the minimum.
std::size_t minimal_prefix(const CitationProfile& profile, std::size_t from) {
    std::size_t m = std::min(from, profile.size());
    while (m < profile.size()) {
        try {
            (void)h_defect(truncate_head(profile, m).ranked());
            return m;
        } catch (const InsufficientTail& e) {
            m = std::max(m + 1, std::min(e.required(), profile.size()));
        }
    }
    return profile.size();
}

struct EstimateArgs {
    std::string file;
    std::optional<std::size_t> blind;
    bool json = false;
    int precision = report::kDefaultPrecision;
};

int run_estimate(const EstimateArgs& a) {
    const CitationProfile profile = load_file(a.file);
    report::ReportRow row;
    report::add_identity(row, profile);
    if (a.blind) {
        // Only the first K ranks are visible; the true total stays hidden.
        const TruncatedProfile head = truncate_head(profile, std::min(*a.blind, profile.size()));
        DefectAnalysis defect;
        try {
            defect = h_defect(head.ranked());
        } catch (const InsufficientTail& e) {
            throw InsufficientTail(e.known(), minimal_prefix(profile, e.required()));
        }
        const EstimateReport rep = estimate(head.ranked(), defect);
        const report::ReportRow estimates = report::estimate_row(defect, rep, std::nullopt);
        row = {};
        row.add("name", profile.meta().name);
        row.add("known_ranks", report::as_int(head.known_rank_count()));
        for (const auto& c : estimates.cells()) row.add(c.label, c.value);
    } else {
        const DefectAnalysis defect = h_defect(profile);
        const EstimateReport rep = estimate(profile.ranked(), defect);
        const report::ReportRow estimates = report::estimate_row(defect, rep, profile.total());
        row.add("h", report::as_int(h_index(profile)));
        row.add("h_na", h_na(static_cast<double>(profile.total())));
        for (const auto& c : estimates.cells()) row.add(c.label, c.value);
    }
    if (a.json) std::cout << report::to_json(row, a.precision).dump(2) << '\n';
    else report::write_text(std::cout, row, a.precision);
    return kOk;
}

struct PartitionArgs {
    std::string what;
    long n = 0;
    std::string out;
    int precision = report::kDefaultPrecision;
};

void emit_partition(const PartitionArgs& a, std::ostream& out) {
    if (a.n < 0) throw NegativeArgument("n must be non-negative");
    const long ceiling = partition_ceiling();
    if (a.what == "count") {
        if (a.n > ceiling) throw ResourceLimit(a.n, ceiling);
        out << partition_count(a.n).get_str() << '\n';
    } else if (a.what == "durfee-dist") {
        const DurfeeDistribution dist = count_by_durfee(a.n, ceiling);
        out << "d,count,probability\n";
        for (std::size_t d = 0; d < dist.counts.size(); ++d)
            out << d << ',' << dist.counts[d].get_str() << ',' << report::format_real(dist.probability(d), a.precision)
                << '\n';
    } else {
        out << "formula," << report::format_real(durfee_mode_formula(static_cast<double>(a.n)), a.precision) << '\n';
        if (a.n <= ceiling) {
            const DurfeeDistribution dist = count_by_durfee(a.n, ceiling);
            out << "exact," << dist.mode << '\n';
            out << "tied," << (dist.mode_tied ? "yes" : "no") << '\n';
        }
    }
}

int run_partition(const PartitionArgs& a) {
    if (a.out.empty()) {
        emit_partition(a, std::cout);
        return kOk;
    }
    std::ofstream file(a.out);
    if (!file) throw Error("cannot write " + a.out);
    emit_partition(a, file);
    return kOk;
}

struct TableArgs {
    int id = 0;
    std::string fixtures;
    bool diff = false;
    int precision = report::kDefaultPrecision;
};

int run_table(const TableArgs& a) {
    const auto id = tables::parse_table_id(a.id);
    if (!id) throw ParseError(0, "unknown table " + std::to_string(a.id) + "; expected 1, 2, 5 or 8");
    if (const auto missing = tables::missing_fixtures(*id, a.fixtures); !missing.empty()) {
        std::cerr << "citest: missing " << missing.size() << " fixture(s):\n";
        for (const auto& p : missing) std::cerr << "  " << p.string() << '\n';
        return kMissingFixtures;
    }
    const auto rows = tables::compute_table(*id, a.fixtures);
    tables::write_table(std::cout, rows, a.precision);
    if (a.diff) {
        const auto diff = tables::diff_table(*id, rows);
        std::cout << '\n';
        tables::write_diff(std::cout, diff, a.precision);
        std::size_t counts[5] = {};
        for (const auto& e : diff) ++counts[static_cast<int>(e.status)];
        std::cerr << "citest: " << counts[0] << " ok, " << counts[1] << " mismatch, " << counts[2] << " malformed, "
                  << counts[3] << " blank, " << counts[4] << " not computed\n";
    }
    return kOk;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const NegativeCitation*>(&e) ||
        dynamic_cast<const NegativeArgument*>(&e))
        return kParse;
    if (dynamic_cast<const EmptyCore*>(&e) || dynamic_cast<const DegenerateCore*>(&e) ||
        dynamic_cast<const IndexUnderflow*>(&e))
        return kDegenerate;
    if (dynamic_cast<const InsufficientTail*>(&e)) return kInsufficientTail;
    if (dynamic_cast<const ResourceLimit*>(&e)) return kResource;
    return kFailure;
}

void add_precision(CLI::App* cmd, int& precision) {
    cmd->add_option("--precision", precision, "Significant digits for reals")->check(CLI::Range(1, 17));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Citation-profile indices, total-citation estimators and partition statistics"};
    app.require_subcommand(1);

    IndicesArgs indices;
    auto* cmd_indices = app.add_subcommand("indices", "Core indices of a citation profile");
    cmd_indices->add_option("file", indices.file, "Profile (.csv, .json, or one count per line)")->required();
    auto* json_flag = cmd_indices->add_flag("--json", indices.json, "JSON output");
    cmd_indices->add_flag("--csv", indices.csv, "CSV output")->excludes(json_flag);
    add_precision(cmd_indices, indices.precision);

    EstimateArgs est;
    auto* cmd_estimate = app.add_subcommand("estimate", "Defect split and total-citation estimates");
    cmd_estimate->add_option("file", est.file, "Profile")->required();
    cmd_estimate->add_option("--blind", est.blind, "Use only the first K ranks")->check(CLI::PositiveNumber);
    cmd_estimate->add_flag("--json", est.json, "JSON output");
    add_precision(cmd_estimate, est.precision);

    PartitionArgs part;
    auto* cmd_partition = app.add_subcommand("partition", "Partition counts and Durfee-square statistics");
    cmd_partition->add_option("what", part.what, "count | durfee-dist | mode")
        ->required()
        ->check(CLI::IsMember({"count", "durfee-dist", "mode"}));
    cmd_partition->add_option("n", part.n, "Integer to partition")->required();
    cmd_partition->add_option("--out", part.out, "Write to FILE instead of stdout");
    add_precision(cmd_partition, part.precision);

    TableArgs table;
    auto* cmd_table = app.add_subcommand("table", "Recompute a reference table from fixtures");
    cmd_table->add_option("id", table.id, "1, 2, 5 or 8")->required();
    cmd_table->add_option("--fixtures", table.fixtures, "Fixture directory")->required();
    cmd_table->add_flag("--diff", table.diff, "Append a comparison against the printed values");
    add_precision(cmd_table, table.precision);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (cmd_indices->parsed()) return run_indices(indices);
        if (cmd_estimate->parsed()) return run_estimate(est);
        if (cmd_partition->parsed()) return run_partition(part);
        return run_table(table);
    } catch (const InsufficientTail& e) {
        std::cerr << "citest: " << e.what() << '\n';
        return kInsufficientTail;
    } catch (const std::exception& e) {
        std::cerr << "citest: " << e.what() << '\n';
        return exit_code_for(e);
    }
}
