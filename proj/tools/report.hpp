#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "citest/estimators.hpp"
#include "citest/indices.hpp"
#include "citest/profile.hpp"
#include "citest/shifted.hpp"

namespace citest::report {

inline constexpr int kDefaultPrecision = 6;

using Value = std::variant<std::string, long long, double, Interval>;

struct Cell {
    std::string label;
    Value value;
};

// One report line: labelled values in insertion order.
class ReportRow {
public:
    void add(std::string label, Value value) { cells_.push_back({std::move(label), std::move(value)}); }
    template <class T>
    void add(std::string label, const std::optional<T>& value) {
        if (value) add(std::move(label), Value{*value});
    }

    const Value* find(std::string_view label) const {
        for (const auto& c : cells_)
            if (c.label == label) return &c.value;
        return nullptr;
    }
    std::span<const Cell> cells() const noexcept { return cells_; }

private:
    std::vector<Cell> cells_;
};

inline std::string format_real(double x, int precision) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

inline std::string format_value(const Value& v, int precision) {
    return std::visit(
        [precision](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>) return x;
            else if constexpr (std::is_same_v<T, long long>) return std::to_string(x);
            else if constexpr (std::is_same_v<T, double>) return format_real(x, precision);
            else return "(" + format_real(x.lo, precision) + ", " + format_real(x.hi, precision) + ")";
        },
        v);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Header from the union of labels in first-seen order; absent cells stay empty.
inline void write_csv(std::ostream& out, std::span<const ReportRow> rows, int precision) {
    std::vector<std::string> labels;
    for (const auto& row : rows)
        for (const auto& c : row.cells())
            if (std::ranges::find(labels, c.label) == labels.end()) labels.push_back(c.label);
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << csv_field(labels[i]);
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out << ',';
            if (const Value* v = row.find(labels[i])) out << csv_field(format_value(*v, precision));
        }
        out << '\n';
    }
}

// Reals become JSON numbers rounded to the requested precision; intervals keep "(lo, hi)".
inline nlohmann::ordered_json to_json(const ReportRow& row, int precision) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& c : row.cells()) {
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, double>) {
                    if (std::isfinite(x)) j[c.label] = std::stod(format_real(x, precision));
                    else j[c.label] = nullptr;
                } else if constexpr (std::is_same_v<T, Interval>) {
                    j[c.label] = format_value(x, precision);
                } else {
                    j[c.label] = x;
                }
            },
            c.value);
    }
    return j;
}

inline void write_text(std::ostream& out, const ReportRow& row, int precision) {
    std::size_t width = 0;
    for (const auto& c : row.cells()) width = std::max(width, c.label.size());
    for (const auto& c : row.cells())
        out << c.label << std::string(width - c.label.size() + 2, ' ') << format_value(c.value, precision) << '\n';
}

// Scalar view of a value, or both bounds of an interval.
inline std::vector<double> numbers(const Value& v) {
    if (const auto* i = std::get_if<long long>(&v)) return {static_cast<double>(*i)};
    if (const auto* d = std::get_if<double>(&v)) return {*d};
    if (const auto* iv = std::get_if<Interval>(&v)) return {iv->lo, iv->hi};
    return {};
}

inline long long as_int(std::size_t x) { return static_cast<long long>(x); }

inline void add_identity(ReportRow& row, const CitationProfile& p) {
    row.add("name", p.meta().name);
    row.add("source", std::string(to_string(p.meta().source)));
    row.add("p", as_int(p.size()));
    row.add("n_p_plus", as_int(p.cited_count()));
    row.add("n_cit", static_cast<long long>(p.total()));
}

inline ReportRow indices_row(const CitationProfile& p) {
    ReportRow row;
    add_identity(row, p);
    const CoreIndices ix = compute_core_indices(p);
    const double n = static_cast<double>(p.total());
    const double h = static_cast<double>(ix.h);
    const double hna = h_na(n);
    row.add("h", as_int(ix.h));
    row.add("g", as_int(ix.g));
    row.add("n_cit_h", static_cast<long long>(ix.n_cit_h));
    row.add("a_index", ix.a_index);
    row.add("r_index", ix.r_index);
    row.add("e", ix.e_index);
    row.add("h_cap_index", ix.h_cap_index);
    row.add("d_index", ix.d_index);
    row.add("r", static_cast<long long>(ix.r_floor));
    row.add("q", ix.q);
    row.add("q_prime", ix.q_prime);
    row.add("h_na", hna);
    row.add("h_na_ratio", hna / h);
    row.add("e_over_h", ix.e_index / h);
    if (ix.e_index > 0) {
        row.add("q_over_e", ix.q / ix.e_index);
        const VariantIntervals v = interval_variants(ix);
        auto add_variant = [&](const std::string& name, const CenteredInterval& c) {
            row.add(name, c.bounds);
            row.add(name + "_mean", c.mean);
        };
        add_variant("I", v.base);
        add_variant("I_q", v.by_q);
        add_variant("I_r", v.by_r);
        add_variant("I_q_prime", v.by_q_prime);
        row.add("delta_1", (v.base.mean - n) / n);
        row.add("delta_2", (v.by_q.mean - n) / n);
        row.add("delta_3", (v.by_r.mean - n) / n);
        row.add("delta_4", (v.by_q_prime.mean - n) / n);
    }
    return row;
}

// Defect split and estimators; `truth` adds the error columns.
inline ReportRow estimate_row(const DefectAnalysis& defect, const EstimateReport& rep, std::optional<Count> truth) {
    ReportRow row;
    const ShiftedRow& rd = defect.row_d();
    const ShiftedRow& rd1 = defect.row_d1();
    row.add("case", rep.case_label());
    row.add("d", as_int(rep.d));
    row.add("h_d", as_int(rep.h_d));
    row.add("n_h_d", static_cast<long long>(rd.n_h));
    row.add("e_d", rep.e_d);
    row.add("q_d", rep.q_d);
    row.add("J_d", rep.j_d);
    row.add("J_d_mean", rep.mean_j_d);
    row.add("h_d1", as_int(rep.h_d1));
    row.add("n_h_d1", static_cast<long long>(rd1.n_h));
    row.add("e_d1", rep.e_d1);
    row.add("q_d1", rep.q_d1);
    const bool second_row_usable = rd1.h_k > 0 && rd1.e > 0;
    if (second_row_usable) {
        row.add("J_d1", rep.j_d1);
        row.add("J_d1_mean", rep.mean_j_d1);
        row.add("A", rep.a_est);
    }
    row.add("alpha_d", rep.alpha_d);
    row.add("beta_d", rep.beta_d);
    row.add("alpha_d1", rep.alpha_d1);
    row.add("beta_d1", rep.beta_d1);
    row.add("B_prime", rep.b_prime);
    row.add("B_double_prime", rep.b_dprime);
    row.add("B", rep.b_est);
    if (truth) {
        const double n = static_cast<double>(*truth);
        row.add("h_na_d", rep.h_na_d);
        if (second_row_usable) {
            row.add("Delta_A", n - rep.a_est);
            row.add("delta_A", (n - rep.a_est) / n);
        }
        row.add("Delta_B", n - rep.b_est);
        row.add("delta_B", (n - rep.b_est) / n);
    }
    row.add("ranks_used", as_int(rep.ranks_used));
    return row;
}

inline ReportRow brown_row(const CitationProfile& p) {
    ReportRow row;
    add_identity(row, p);
    const Interval b = brown_interval(static_cast<double>(p.total()));
    row.add("h", as_int(h_index(p)));
    row.add("brown", b);
    row.add("brown_mean", b.mid());
    row.add("h_in_brown", std::string(b.contains(static_cast<double>(h_index(p))) ? "yes" : "no"));
    return row;
}

}  // namespace citest::report
