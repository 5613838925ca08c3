#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "citest/error.hpp"
#include "citest/indices.hpp"
#include "citest/profile.hpp"

namespace citest {

struct ShiftedRow {
    std::size_t k = 0;
    std::size_t h_k = 0;
    Count n_h = 0;                 // citations of ranks k+1 .. k+h_k
    Count head_sum = 0;            // citations of ranks 1 .. k
    std::optional<Count> n_cit;    // citations of ranks k+1 .. p; unknown for prefixes
    double e = 0;
    double q = std::numeric_limits<double>::quiet_NaN();
    std::optional<bool> delta;     // whether h_{k+1} == h_k; set once row k+1 is known

    Count excess() const noexcept { return n_h - static_cast<Count>(h_k * h_k); }
    Count h_squared() const noexcept { return static_cast<Count>(h_k * h_k); }
};

namespace detail {

inline ShiftedRow make_row(std::size_t k, std::size_t h, Count n_h, Count head_sum, std::optional<Count> n_cit) {
    ShiftedRow row{.k = k, .h_k = h, .n_h = n_h, .head_sum = head_sum, .n_cit = n_cit, .delta = std::nullopt};
    if (n_h < row.h_squared()) throw Error("inconsistent shifted row: core sum below h^2");
    row.e = std::sqrt(static_cast<double>(row.excess()));
    if (h > 0) row.q = 2.0 * static_cast<double>(n_h) / static_cast<double>(row.h_squared()) - 1.0;
    return row;
}

inline Count sum_ranks(std::span<const Count> cit, std::size_t first, std::size_t last) {
    Count s = 0;
    for (std::size_t r = first; r <= last && r <= cit.size(); ++r) s += cit[r - 1];
    return s;
}

inline std::optional<Count> suffix_total(const RankedView& v, std::size_t k) {
    if (!v.full()) return std::nullopt;
    return sum_ranks(v.cit, k + 1, v.size());
}

}  // namespace detail

// Row k from its definition. Prefix profiles must certify the window's h-index.
inline ShiftedRow shifted_row_direct(const RankedView& v, std::size_t k, std::size_t* ranks_used = nullptr) {
    const std::size_t m = v.size();
    if (v.full() && k > m) throw RankOutOfRange("shift " + std::to_string(k) + " beyond p = " + std::to_string(m));
    if (!v.full() && k >= m) throw InsufficientTail(m, k + 1);
    auto window = k < m ? v.cit.subspan(k) : std::span<const Count>{};
    const std::size_t h = h_index(window);
    if (!v.full()) {
        const bool certified = k + h < m || v.cit[m - 1] <= static_cast<Count>(h);
        if (!certified) throw InsufficientTail(m, k + h + 1);
    }
    if (ranks_used) *ranks_used = std::max(*ranks_used, std::min(k + h + 1, m));
    return detail::make_row(k, h, detail::sum_ranks(v.cit, k + 1, k + h), detail::sum_ranks(v.cit, 1, k),
                            detail::suffix_total(v, k));
}

inline std::size_t shifted_h(const RankedView& v, std::size_t k) {
    if (v.size() == 0 || k > v.size() - 1)
        throw RankOutOfRange("shift " + std::to_string(k) + " outside 0..p-1");
    return shifted_row_direct(v, k).h_k;
}

inline std::size_t shifted_h(const CitationProfile& p, std::size_t k) { return shifted_h(p.ranked(), k); }

// Advances row k to row k+1 with the fast recurrence; sets prev.delta.
inline ShiftedRow next_row(const RankedView& v, ShiftedRow& prev, std::size_t* ranks_used = nullptr) {
    const std::size_t m = v.size();
    const std::size_t k = prev.k;
    if (k + 1 > m && v.full()) throw IndexUnderflow("suffix after shift " + std::to_string(k + 1) + " is empty");
    if (k + 1 > m) throw InsufficientTail(m, k + 1);
    const Count leaving = v.cit[k];
    const std::size_t probe = prev.h_k + k + 1;
    const auto hk = static_cast<Count>(prev.h_k);
    bool keeps;
    Count entering = 0;
    if (probe <= m) {
        entering = v.cit[probe - 1];
        keeps = entering == hk;
        if (ranks_used) *ranks_used = std::max(*ranks_used, probe);
    } else if (v.full()) {
        keeps = hk == 0;
    } else if (v.cit[m - 1] < hk) {
        keeps = false;
        if (ranks_used) *ranks_used = std::max(*ranks_used, m);
    } else {
        throw InsufficientTail(m, probe);
    }
    prev.delta = keeps;
    const std::size_t h_next = keeps ? prev.h_k : prev.h_k - 1;
    const Count n_next = prev.n_h - leaving + (keeps ? entering : 0);
    std::optional<Count> n_cit;
    if (prev.n_cit) n_cit = *prev.n_cit - leaving;
    return detail::make_row(k + 1, h_next, n_next, prev.head_sum + leaving, n_cit);
}

inline std::vector<ShiftedRow> shifted_ladder(const RankedView& v, std::size_t k_max) {
    if (v.size() == 0 || k_max > v.size() - 1)
        throw RankOutOfRange("ladder depth " + std::to_string(k_max) + " outside 0..p-1");
    std::vector<ShiftedRow> rows;
    rows.reserve(k_max + 1);
    rows.push_back(shifted_row_direct(v, 0));
    while (rows.size() <= k_max) {
        auto next = next_row(v, rows.back());
        rows.push_back(next);
    }
    return rows;
}

inline std::vector<ShiftedRow> shifted_ladder(const CitationProfile& p, std::size_t k_max) {
    return shifted_ladder(p.ranked(), k_max);
}

enum class DefectCase { one_a, one_b, two, three_a, three_b, four };

inline std::string_view to_string(DefectCase c) {
    switch (c) {
        case DefectCase::one_a: return "1a";
        case DefectCase::one_b: return "1b";
        case DefectCase::two: return "2";
        case DefectCase::three_a: return "3a";
        case DefectCase::three_b: return "3b";
        case DefectCase::four: return "4";
    }
    return "?";
}

// When e < h, whether a later upward crossing reclassifies the profile as case 4.
enum class DefectPolicy { case_three_first, case_four_first };

struct DefectAnalysis {
    std::size_t d = 0;
    DefectCase case_tag = DefectCase::one_a;
    std::vector<ShiftedRow> rows;          // k = 0 .. d+1
    std::span<const Count> defect_core;    // ranks 1..d
    std::span<const Count> an_domain;      // ranks d+1 .. d+h_d
    std::size_t ranks_used = 0;            // largest rank the classification read

    const ShiftedRow& row_d() const { return rows.at(d); }
    const ShiftedRow& row_d1() const { return rows.at(d + 1); }
};

namespace detail {

inline bool at_or_above(const ShiftedRow& r) noexcept { return r.excess() >= r.h_squared(); }
inline bool strictly_above(const ShiftedRow& r) noexcept { return r.excess() > r.h_squared(); }

}  // namespace detail

inline DefectAnalysis h_defect(const RankedView& v, DefectPolicy policy = DefectPolicy::case_three_first) {
    DefectAnalysis out;
    std::size_t used = 0;
    std::vector<ShiftedRow> rows{shifted_row_direct(v, 0, &used)};
    const std::size_t h = rows[0].h_k;
    if (h == 0) throw EmptyCore();

    auto extend = [&](std::size_t upto) {
        while (rows.size() <= upto) {
            auto next = next_row(v, rows.back(), &used);
            rows.push_back(next);
        }
    };
    // First k in 0..h-1 whose successor fails `holds`, if any.
    auto first_break = [&](auto holds) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k < h; ++k) {
            extend(k + 1);
            if (!holds(rows[k + 1])) return k;
        }
        return std::nullopt;
    };

    const ShiftedRow r0 = rows[0];
    const auto hh = static_cast<Count>(h);
    if (detail::at_or_above(r0)) {
        if (auto k = first_break(detail::at_or_above)) {
            out.d = *k;
            out.case_tag = DefectCase::two;
        } else {
            out.case_tag = r0.excess() > (hh + 1) * (hh + 1) ? DefectCase::one_a : DefectCase::one_b;
        }
    } else {
        std::optional<std::size_t> k;
        if (policy == DefectPolicy::case_four_first)
            k = first_break([](const ShiftedRow& r) { return !detail::strictly_above(r); });
        if (k) {
            out.d = *k;
            out.case_tag = DefectCase::four;
        } else {
            out.case_tag = r0.excess() >= (hh - 1) * (hh - 1) ? DefectCase::three_a : DefectCase::three_b;
        }
    }
    extend(out.d + 1);
    rows.resize(out.d + 2);
    out.rows = std::move(rows);
    out.defect_core = v.cit.first(out.d);
    out.an_domain = v.cit.subspan(out.d, std::min(out.rows[out.d].h_k, v.size() - out.d));
    out.ranks_used = used;
    return out;
}

inline DefectAnalysis h_defect(const CitationProfile& p, DefectPolicy policy = DefectPolicy::case_three_first) {
    return h_defect(p.ranked(), policy);
}

struct TransitionPrediction {
    bool next_below;   // predicted e_{k+1} < h_{k+1}
    Count threshold;   // e_k^2 < threshold  <=>  next_below
};

// Predicts e_{k+1} vs h_{k+1} from row k alone plus cit_{k+1}; row.delta must be set.
inline TransitionPrediction check_transition(const ShiftedRow& row, Count cit_next) {
    if (!row.delta) throw Error("check_transition needs the row's delta (h_{k+1} == h_k) to be known");
    const auto h = static_cast<Count>(row.h_k);
    const Count threshold = *row.delta ? h * h - h + cit_next : h * h - 4 * h + 2 + cit_next;
    return {row.excess() < threshold, threshold};
}

}  // namespace citest
