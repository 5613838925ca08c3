#include "tables.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <regex>

#include "citest/error.hpp"
#include "citest/estimators.hpp"
#include "citest/profile.hpp"
#include "citest/shifted.hpp"

namespace citest::tables {

namespace {

std::span<const ExpectedCell> expected_for(TableId id) {
    switch (id) {
        case TableId::indices: return kIndicesExpected;
        case TableId::estimates: return kEstimatesExpected;
        case TableId::extended: return kExtendedExpected;
        case TableId::brown: return kBrownExpected;
    }
    return {};
}

std::filesystem::path fixture_path(const std::filesystem::path& dir, std::string_view stem) {
    return dir / (std::string(stem) + ".csv");
}

CitationProfile load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return load_profile(in, format_for_path(path.string()));
}

void append(report::ReportRow& into, const report::ReportRow& from) {
    for (const auto& c : from.cells())
        if (!into.find(c.label)) into.add(c.label, c.value);
}

report::ReportRow estimates_for(const CitationProfile& p) {
    report::ReportRow row;
    report::add_identity(row, p);
    row.add("h", report::as_int(h_index(p)));
    const DefectAnalysis defect = h_defect(p);
    append(row, report::estimate_row(defect, estimate(p.ranked(), defect), p.total()));
    return row;
}

report::ReportRow compute_row(TableId id, const CitationProfile& p) {
    switch (id) {
        case TableId::indices: return report::indices_row(p);
        case TableId::estimates: return estimates_for(p);
        case TableId::extended: {
            report::ReportRow row = report::indices_row(p);
            append(row, estimates_for(p));
            return row;
        }
        case TableId::brown: return report::brown_row(p);
    }
    return {};
}

bool integer_valued(const report::Value& v) { return std::holds_alternative<long long>(v); }

}  // namespace

std::optional<TableId> parse_table_id(int id) {
    switch (id) {
        case 1: return TableId::indices;
        case 2: return TableId::estimates;
        case 5: return TableId::extended;
        case 8: return TableId::brown;
        default: return std::nullopt;
    }
}

std::vector<std::string> fixtures_for(TableId id) {
    std::vector<std::string> out;
    for (const auto& cell : expected_for(id))
        if (std::ranges::find(out, cell.fixture) == out.end()) out.emplace_back(cell.fixture);
    return out;
}

std::vector<std::filesystem::path> missing_fixtures(TableId id, const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> missing;
    for (const auto& stem : fixtures_for(id)) {
        auto path = fixture_path(dir, stem);
        if (!std::filesystem::is_regular_file(path)) missing.push_back(path);
    }
    return missing;
}

std::vector<KeyedRow> compute_table(TableId id, const std::filesystem::path& dir) {
    const auto stems = fixtures_for(id);
    std::vector<std::future<report::ReportRow>> pending;
    pending.reserve(stems.size());
    for (const auto& stem : stems) {
        pending.push_back(std::async(std::launch::async, [id, path = fixture_path(dir, stem)] {
            try {
                return compute_row(id, load_fixture(path));
            } catch (const Error& e) {
                report::ReportRow row;
                row.add("error", std::string(e.what()));
                return row;
            }
        }));
    }
    std::vector<KeyedRow> rows;
    rows.reserve(stems.size());
    for (std::size_t i = 0; i < stems.size(); ++i) rows.push_back({stems[i], pending[i].get()});
    return rows;
}

std::optional<PrintedValue> parse_printed(std::string_view text) {
    static const std::regex number(R"(\s*(-?\d+)(?:\.(\d*))?\s*)");
    static const std::regex interval(R"(\(([^,;()]+)[,;]([^,;()]+)\))");
    PrintedValue out;
    auto scalar = [&](const std::string& s) {
        std::smatch m;
        if (!std::regex_match(s, m, number)) return false;
        std::string digits = m[1].str() + (m[2].matched ? "." + m[2].str() : "");
        out.numbers.push_back(std::stod(digits));
        out.decimals.push_back(m[2].matched ? static_cast<int>(m[2].length()) : 0);
        return true;
    };
    const std::string s(text);
    if (s.empty() || s == "-") return out;
    std::smatch m;
    if (std::regex_match(s, m, interval)) {
        if (scalar(m[1].str()) && scalar(m[2].str())) return out;
        return std::nullopt;
    }
    if (scalar(s)) return out;
    return std::nullopt;
}

std::string_view to_string(CellStatus s) {
    switch (s) {
        case CellStatus::ok: return "ok";
        case CellStatus::mismatch: return "mismatch";
        case CellStatus::malformed: return "malformed";
        case CellStatus::blank: return "blank";
        case CellStatus::not_computed: return "not_computed";
    }
    return "?";
}

// Tolerance is one unit in the last printed place; integer quantities must match exactly.
std::vector<DiffEntry> diff_table(TableId id, std::span<const KeyedRow> rows) {
    std::vector<DiffEntry> out;
    for (const auto& cell : expected_for(id)) {
        DiffEntry entry;
        entry.expected = cell;
        const auto row = std::ranges::find(rows, cell.fixture, &KeyedRow::fixture);
        const report::Value* value = row == rows.end() ? nullptr : row->row.find(cell.quantity);
        const auto printed = parse_printed(cell.printed);
        if (value) entry.computed = report::numbers(*value);
        if (!printed) {
            entry.status = CellStatus::malformed;
        } else if (printed->numbers.empty()) {
            entry.status = CellStatus::blank;
        } else if (!value || entry.computed.size() != printed->numbers.size()) {
            entry.status = CellStatus::not_computed;
        } else {
            entry.status = CellStatus::ok;
            for (std::size_t i = 0; i < printed->numbers.size(); ++i) {
                const double tol = integer_valued(*value) ? 0.0 : std::pow(10.0, -printed->decimals[i]);
                entry.tolerance.push_back(tol);
                if (std::abs(entry.computed[i] - printed->numbers[i]) > tol + 1e-9) entry.status = CellStatus::mismatch;
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

void write_table(std::ostream& out, std::span<const KeyedRow> rows, int precision) {
    std::vector<report::ReportRow> with_keys;
    with_keys.reserve(rows.size());
    for (const auto& r : rows) {
        report::ReportRow row;
        row.add("fixture", r.fixture);
        append(row, r.row);
        with_keys.push_back(std::move(row));
    }
    report::write_csv(out, with_keys, precision);
}

void write_diff(std::ostream& out, std::span<const DiffEntry> diff, int precision) {
    auto join = [precision](std::span<const double> xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + report::format_real(xs[i], precision);
        return s;
    };
    out << "fixture,quantity,printed,computed,tolerance,status\n";
    for (const auto& e : diff) {
        out << e.expected.fixture << ',' << e.expected.quantity << ',' << report::csv_field(std::string(e.expected.printed))
            << ',' << join(e.computed) << ',' << join(e.tolerance) << ',' << to_string(e.status) << '\n';
    }
}

}  // namespace citest::tables
