#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expected_values.hpp"
#include "report.hpp"

namespace citest::tables {

enum class TableId { indices = 1, estimates = 2, extended = 5, brown = 8 };

std::optional<TableId> parse_table_id(int id);

// Fixture stems a table needs, in output order.
std::vector<std::string> fixtures_for(TableId id);

std::vector<std::filesystem::path> missing_fixtures(TableId id, const std::filesystem::path& dir);

struct KeyedRow {
    std::string fixture;
    report::ReportRow row;
};

// One row per fixture, computed concurrently and returned in fixture order.
std::vector<KeyedRow> compute_table(TableId id, const std::filesystem::path& dir);

// A printed cell parsed into one number or an interval's two bounds, each with its decimals.
struct PrintedValue {
    std::vector<double> numbers;
    std::vector<int> decimals;
};

// Empty or "-" cells yield an empty value; unparseable cells yield nullopt.
std::optional<PrintedValue> parse_printed(std::string_view text);

enum class CellStatus { ok, mismatch, malformed, blank, not_computed };
std::string_view to_string(CellStatus s);

struct DiffEntry {
    ExpectedCell expected;
    std::vector<double> computed;
    std::vector<double> tolerance;
    CellStatus status = CellStatus::ok;
};

std::vector<DiffEntry> diff_table(TableId id, std::span<const KeyedRow> rows);

void write_table(std::ostream& out, std::span<const KeyedRow> rows, int precision);
void write_diff(std::ostream& out, std::span<const DiffEntry> diff, int precision);

}  // namespace citest::tables
