#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>

#include "citest/error.hpp"
#include "citest/indices.hpp"
#include "citest/profile.hpp"
#include "citest/shifted.hpp"

namespace citest {

// sqrt(6) ln 2 / pi: most likely Durfee-square side per sqrt(n).
inline constexpr double kNormalConstant = 0.5404446394667307;
// Its reciprocal and square as used by the interval formulas.
inline constexpr double kIntervalScale = 1.85032828;
inline constexpr double kMeanScale = 3.42371438;
inline constexpr double kQuickACoefficient = 1.7118;
inline constexpr double kQuickAOffset = 30.8134;

struct Interval {
    double lo = 0;
    double hi = 0;

    double mid() const noexcept { return (lo + hi) / 2; }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    Interval shifted(double by) const noexcept { return {lo + by, hi + by}; }
};

inline double h_na(double n_cit) noexcept { return kNormalConstant * std::sqrt(n_cit); }

// ((scale h (1 -/+ q/e))^2); e = 0 makes the ratio undefined.
inline Interval interval_I(double h, double q, double e) {
    if (!(e > 0)) throw DegenerateCore("e = 0: every core paper has exactly h citations");
    const double x = q / e;
    const double lo = kIntervalScale * h * (1 - x);
    const double hi = kIntervalScale * h * (1 + x);
    return {lo * lo, hi * hi};
}

inline Interval interval_I(const ShiftedRow& row) {
    return interval_I(static_cast<double>(row.h_k), row.q, row.e);
}

inline Interval interval_J(const ShiftedRow& row) {
    return interval_I(row).shifted(static_cast<double>(row.head_sum));
}

struct CenteredInterval {
    Interval bounds;
    double mean = 0;   // closed-form mean; equals bounds.mid()
    double center = 0;
    double ratio = 0;
};

inline CenteredInterval centered_interval(double center, double ratio) {
    const double lo = kIntervalScale * (1 - ratio) * center;
    const double hi = kIntervalScale * (1 + ratio) * center;
    return {{lo * lo, hi * hi}, kMeanScale * (1 + ratio * ratio) * center * center, center, ratio};
}

struct VariantIntervals {
    CenteredInterval base;     // center h, ratio q/e
    CenteredInterval by_q;
    CenteredInterval by_r;
    CenteredInterval by_q_prime;
};

inline VariantIntervals interval_variants(const CoreIndices& ix) {
    if (!(ix.e_index > 0)) throw DegenerateCore("e = 0: interval variants are undefined");
    const double h = static_cast<double>(ix.h);
    const double e = ix.e_index;
    const double r = static_cast<double>(ix.r_floor);
    return {centered_interval(h, ix.q / e), centered_interval(h + ix.q, ix.q / e), centered_interval(h + r, r / e),
            centered_interval(h + ix.q_prime, ix.q_prime / e)};
}

enum class BoundRule { none, upper, weighted, lower };

struct EstimateReport {
    DefectCase case_tag = DefectCase::one_a;
    std::size_t d = 0;
    std::size_t h_d = 0, h_d1 = 0;
    double e_d = 0, e_d1 = 0, q_d = 0, q_d1 = 0;
    double h_na = 0;
    std::optional<double> h_na_d, h_na_d1;
    Interval i_d, i_d1, j_d, j_d1;
    double mean_i_d = 0, mean_i_d1 = 0, mean_j_d = 0, mean_j_d1 = 0;
    double a_prime = 0, a_est = 0;
    std::optional<double> alpha_d, beta_d, alpha_d1, beta_d1;
    std::optional<double> b_prime, b_dprime;
    double b_est = 0;
    BoundRule first_rule = BoundRule::none;   // 2a (upper) or 2b (weighted)
    BoundRule second_rule = BoundRule::none;  // 2c (lower) or 2d (weighted)
    Count head_sum_d = 0, head_sum_d1 = 0;
    std::size_t ranks_used = 0;

    std::string case_label() const {
        std::string base(to_string(case_tag));
        if (case_tag != DefectCase::two && case_tag != DefectCase::four) return base;
        std::string prefix = case_tag == DefectCase::two ? "2" : "4";
        std::string a = prefix + (first_rule == BoundRule::weighted ? "b" : "a");
        std::string b = prefix + (second_rule == BoundRule::weighted ? "d" : "c");
        return a + "/" + b;
    }
};

namespace detail {

inline double frac(double x) noexcept { return x - std::floor(x); }

inline void require_positive_e(const ShiftedRow& r) {
    if (!(r.e > 0) || r.h_k == 0)
        throw DegenerateCore("shifted row " + std::to_string(r.k) + " has e = 0 or h = 0");
}

}  // namespace detail

// A' from the I intervals and A from the J intervals of rows d and d+1.
inline std::pair<double, double> estimate_A(const DefectAnalysis& defect) {
    const auto& rd = defect.row_d();
    const auto& rd1 = defect.row_d1();
    detail::require_positive_e(rd);
    detail::require_positive_e(rd1);
    const double a_prime = (interval_I(rd).mid() + interval_I(rd1).mid()) / 2;
    const double a_est = (interval_J(rd).mid() + interval_J(rd1).mid()) / 2;
    return {a_prime, a_est};
}

// Closed form of A: K^2/2 (h_d^2 (1 + x_d^2) + h_{d+1}^2 (1 + x_{d+1}^2)) + head_d + cit_{d+1} / 2.
inline double estimate_A_closed_form(const DefectAnalysis& defect) {
    const auto& rd = defect.row_d();
    const auto& rd1 = defect.row_d1();
    const double coeff = std::numbers::pi * std::numbers::pi / (12 * std::numbers::ln2 * std::numbers::ln2);
    auto term = [](const ShiftedRow& r) {
        const double h = static_cast<double>(r.h_k);
        const double x = r.q / r.e;
        return h * h * (1 + x * x);
    };
    const double cit_next = static_cast<double>(rd1.head_sum - rd.head_sum);
    return coeff * (term(rd) + term(rd1)) + static_cast<double>(rd.head_sum) + cit_next / 2;
}

// Approximation assuming e ~ h on both rows; only meaningful in case 2.
inline double estimate_A_quick(const DefectAnalysis& defect) {
    if (defect.case_tag != DefectCase::two) throw WrongCase("quick A estimate applies to case 2 only");
    const auto& rd = defect.row_d();
    const auto& rd1 = defect.row_d1();
    const double hd = static_cast<double>(rd.h_k);
    const double hd1 = static_cast<double>(rd1.h_k);
    const double cit_next = static_cast<double>(rd1.head_sum - rd.head_sum);
    return kQuickACoefficient * (hd * hd + hd1 * hd1) + kQuickAOffset + static_cast<double>(rd.head_sum) + cit_next / 2;
}

inline EstimateReport estimate(const RankedView& v, const DefectAnalysis& defect) {
    EstimateReport rep;
    const auto& rd = defect.row_d();
    const auto& rd1 = defect.row_d1();
    rep.case_tag = defect.case_tag;
    rep.d = defect.d;
    rep.h_d = rd.h_k;
    rep.h_d1 = rd1.h_k;
    rep.e_d = rd.e;
    rep.e_d1 = rd1.e;
    rep.q_d = rd.q;
    rep.q_d1 = rd1.q;
    rep.head_sum_d = rd.head_sum;
    rep.head_sum_d1 = rd1.head_sum;
    rep.ranks_used = defect.ranks_used;
    if (v.full()) {
        rep.h_na = h_na(static_cast<double>(*defect.rows[0].n_cit));
        rep.h_na_d = h_na(static_cast<double>(*rd.n_cit));
        rep.h_na_d1 = h_na(static_cast<double>(*rd1.n_cit));
    }

    detail::require_positive_e(rd);
    rep.i_d = interval_I(rd);
    rep.j_d = interval_J(rd);
    rep.mean_i_d = rep.i_d.mid();
    rep.mean_j_d = rep.j_d.mid();
    const bool second_row_usable = rd1.h_k > 0 && rd1.e > 0;
    if (second_row_usable) {
        rep.i_d1 = interval_I(rd1);
        rep.j_d1 = interval_J(rd1);
        rep.mean_i_d1 = rep.i_d1.mid();
        rep.mean_j_d1 = rep.j_d1.mid();
        rep.a_prime = (rep.mean_i_d + rep.mean_i_d1) / 2;
        rep.a_est = (rep.mean_j_d + rep.mean_j_d1) / 2;
    }

    const auto hd = static_cast<Count>(rd.h_k);
    const auto hd1 = static_cast<Count>(rd1.h_k);
    switch (defect.case_tag) {
        case DefectCase::one_a: {
            // Second term is shifted by cit_1 like every other J-based bound.
            detail::require_positive_e(rd1);
            rep.b_est = (rep.j_d.hi + rep.j_d1.hi) / 2;
            break;
        }
        case DefectCase::one_b: {
            const double beta = detail::frac(rd.e);
            rep.beta_d = beta;
            rep.alpha_d = 1 - beta;
            rep.b_est = (1 - beta) * rep.i_d.lo + beta * rep.i_d.hi;
            break;
        }
        case DefectCase::three_a: {
            const double beta = detail::frac(rd.e);
            rep.beta_d = beta;
            rep.alpha_d = 1 - beta;
            rep.b_est = beta * rep.i_d.lo + (1 - beta) * rep.i_d.hi;
            break;
        }
        case DefectCase::three_b: {
            const double beta = detail::frac(rd.e);
            rep.beta_d = beta;
            rep.b_est = beta * rep.i_d.hi;
            break;
        }
        case DefectCase::two:
        case DefectCase::four: {
            detail::require_positive_e(rd1);
            const bool swap = defect.case_tag == DefectCase::four;
            // B' from J_d: upper bound when e_d > h_d + 1, else weighted.
            double alpha_d, beta_d;
            if (rd.excess() > (hd + 1) * (hd + 1)) {
                rep.first_rule = BoundRule::upper;
                beta_d = 1;
                alpha_d = 0;
            } else {
                rep.first_rule = BoundRule::weighted;
                beta_d = detail::frac(rd.e);
                alpha_d = 1 - beta_d;
            }
            // B'' from J_{d+1}: lower bound when h_{d+1} > e_{d+1} + 1, else weighted.
            double alpha_d1, beta_d1;
            if (hd1 >= 1 && rd1.excess() < (hd1 - 1) * (hd1 - 1)) {
                rep.second_rule = BoundRule::lower;
                beta_d1 = 0;
                alpha_d1 = 1;
            } else {
                rep.second_rule = BoundRule::weighted;
                beta_d1 = detail::frac(rd1.e);
                alpha_d1 = 1 - beta_d1;
            }
            rep.alpha_d = alpha_d;
            rep.beta_d = beta_d;
            rep.alpha_d1 = alpha_d1;
            rep.beta_d1 = beta_d1;
            if (swap) {
                std::swap(alpha_d, beta_d);
                std::swap(alpha_d1, beta_d1);
            }
            rep.b_prime = alpha_d * rep.j_d.lo + beta_d * rep.j_d.hi;
            rep.b_dprime = beta_d1 * rep.j_d1.lo + alpha_d1 * rep.j_d1.hi;
            // Keep exact endpoints in the unweighted subcases.
            if (rep.first_rule == BoundRule::upper) rep.b_prime = swap ? rep.j_d.lo : rep.j_d.hi;
            if (rep.second_rule == BoundRule::lower) rep.b_dprime = swap ? rep.j_d1.hi : rep.j_d1.lo;
            rep.b_est = (*rep.b_prime + *rep.b_dprime) / 2;
            break;
        }
    }
    return rep;
}

inline EstimateReport estimate(const CitationProfile& p, DefectPolicy policy = DefectPolicy::case_three_first) {
    return estimate(p.ranked(), h_defect(p.ranked(), policy));
}

inline EstimateReport estimate(const TruncatedProfile& t, DefectPolicy policy = DefectPolicy::case_three_first) {
    return estimate(t.ranked(), h_defect(t.ranked(), policy));
}

inline Interval brown_interval(double n_cit) noexcept {
    const double s = std::sqrt(n_cit);
    const double center = 0.54 * s;
    const double half = 1.96 * (0.57 + 0.045 * s);
    return {center - half, center + half};
}

inline double na_ratio_limit(double difference) noexcept {
    return kNormalConstant * (difference + 1) / std::sqrt(2 * difference);
}

struct RuleOfThumbSet {
    std::pair<double, double> hirsch_band;  // sqrt(N/5), sqrt(N/3)
    double durfee_mode = 0;
    double van_raan = 0;
    double mahmoudi_ncit = 0;
    std::optional<double> mahmoudi_d1;
    double radicchi_simple = 0;
    std::optional<double> radicchi_joint;
    double spruit = 0;
    double redner = 0;
    std::optional<double> glanzel_schubert;
};

inline RuleOfThumbSet rules_of_thumb(double n_cit, std::optional<double> papers = {},
                                     std::optional<double> career_years = {}, std::optional<double> lotka_a = {}) {
    RuleOfThumbSet r;
    const double s = std::sqrt(n_cit);
    r.hirsch_band = {std::sqrt(n_cit / 5), std::sqrt(n_cit / 3)};
    r.durfee_mode = kNormalConstant * s;
    r.van_raan = 0.42 * std::pow(n_cit, 0.45);
    r.mahmoudi_ncit = 0.600 * std::pow(n_cit, 0.476);
    if (career_years) r.mahmoudi_d1 = 0.667 * std::pow(*career_years, 1.041);
    r.radicchi_simple = std::pow(n_cit, 0.42);
    if (papers) r.radicchi_joint = std::pow(n_cit, 0.41) * std::pow(*papers, 0.18);
    r.spruit = 0.5 * (s + 1);
    r.redner = s / (2 * 1.045);
    if (papers && lotka_a) r.glanzel_schubert = std::pow(n_cit / *papers, *lotka_a / (1 + *lotka_a));
    return r;
}

struct ErrorMetrics {
    // (mean - N) / N for the h-core intervals I, I(q), I(r), I(q').
    double delta_1 = 0, delta_2 = 0, delta_3 = 0, delta_4 = 0;
    // (N - x) / N and N - x for the shifted estimators.
    double delta_d = 0, delta_a = 0, delta_b = 0;
    double cap_delta_a = 0, cap_delta_b = 0;
};

inline ErrorMetrics error_metrics(const RankedView& v, const VariantIntervals& variants, const EstimateReport& rep) {
    if (!v.full()) throw GroundTruthUnavailable();
    Count total = 0;
    for (Count c : v.cit) total += c;
    const double n = static_cast<double>(total);
    ErrorMetrics m;
    m.delta_1 = (variants.base.mean - n) / n;
    m.delta_2 = (variants.by_q.mean - n) / n;
    m.delta_3 = (variants.by_r.mean - n) / n;
    m.delta_4 = (variants.by_q_prime.mean - n) / n;
    m.delta_d = (n - rep.mean_j_d) / n;
    m.cap_delta_a = n - rep.a_est;
    m.cap_delta_b = n - rep.b_est;
    m.delta_a = m.cap_delta_a / n;
    m.delta_b = m.cap_delta_b / n;
    return m;
}

// Published h-index confidence intervals for uniform random partitions, keyed by total.
struct YongEntry {
    Count n_cit;
    int lo;
    int hi;
};

inline constexpr std::array<YongEntry, 19> kYongTable{{
    {300, 7, 11},    {500, 9, 14},    {750, 11, 17},   {1000, 13, 20},  {1250, 15, 22},
    {1500, 17, 24},  {2000, 20, 28},  {2500, 22, 31},  {3000, 25, 34},  {3500, 27, 36},
    {4000, 29, 39},  {4500, 31, 41},  {5500, 35, 45},  {6000, 36, 47},  {6500, 37, 49},
    {7000, 39, 51},  {7500, 40, 52},  {8000, 42, 54},  {10000, 47, 60},
}};

inline std::optional<YongEntry> yong_interval(Count n_cit) {
    for (const auto& e : kYongTable)
        if (e.n_cit == n_cit) return e;
    return std::nullopt;
}

// Closest tabulated total; totals above the grid use its largest entry.
inline YongEntry yong_nearest(Count n_cit) {
    const YongEntry* best = &kYongTable.front();
    for (const auto& e : kYongTable)
        if (std::llabs(e.n_cit - n_cit) < std::llabs(best->n_cit - n_cit)) best = &e;
    return *best;
}

}  // namespace citest
