// Acceptance run: one summary line per criterion, with the individual checks above it.
// Checks listed as known discrepancies are reported as FAIL (known) and do not change the
// exit status; any other failure does.

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "citest/estimators.hpp"
#include "citest/indices.hpp"
#include "citest/partitions.hpp"
#include "citest/profile.hpp"
#include "citest/shifted.hpp"
#include "expected_values.hpp"

namespace {

using namespace citest;

CitationProfile fixture(const std::string& stem) {
    const auto path = std::filesystem::path(CITEST_FIXTURE_DIR) / (stem + ".csv");
    std::ifstream in(path);
    if (!in) throw Error("missing fixture " + path.string());
    return load_profile(in, Format::csv);
}

class Criterion {
public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    // `known` names a documented discrepancy: failing is expected, passing is reported as XPASS.
    void check(const std::string& what, bool pass, const std::string& detail, const char* known = nullptr) {
        const char* tag = pass ? (known ? "XPASS" : "pass") : (known ? "FAIL (known)" : "FAIL");
        std::printf("    %-13s %s: %s", tag, what.c_str(), detail.c_str());
        if (known && !pass) std::printf("  [%s]", known);
        std::printf("\n");
        if (!pass) (known ? known_failures_ : unexpected_failures_)++;
        ++checks_;
    }

    void near(const std::string& what, double got, double want, double tol, const char* known = nullptr) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "got %.6f, want %.6f +/- %g", got, want, tol);
        check(what, std::abs(got - want) <= tol, buf, known);
    }

    void equal(const std::string& what, long long got, long long want, const char* known = nullptr) {
        check(what, got == want, "got " + std::to_string(got) + ", want " + std::to_string(want), known);
    }

    int finish() const {
        const char* status = unexpected_failures_ ? "FAIL" : known_failures_ ? "FAIL (known)" : "PASS";
        std::printf("%-30s %s  (%d checks, %d known, %d unexpected)\n\n", name_.c_str(), status, checks_,
                    known_failures_, unexpected_failures_);
        return unexpected_failures_;
    }

private:
    std::string name_;
    int checks_ = 0;
    int known_failures_ = 0;
    int unexpected_failures_ = 0;
};

constexpr const char* kRoundedRatio = "printed bounds use r/e rounded to 0.038";

int indices_row() {
    Criterion c("indices-row leydesdorff");
    const auto p = fixture("leydesdorff");
    const auto ix = compute_core_indices(p);
    const auto v = interval_variants(ix);
    c.equal("h", static_cast<long long>(ix.h), 79);
    c.near("h_NA", h_na(static_cast<double>(p.total())), 85.461, 0.005);
    c.near("e", ix.e_index, 105.447, 0.005);
    c.near("q", ix.q, 4.563, 0.001);
    c.near("mean of I", v.base.mean, 21407.42, 1);
    c.near("I(q) lo", v.by_q.bounds.lo, 21882.74, 0.5);
    c.near("I(q) hi", v.by_q.bounds.hi, 26020.85, 0.5);
    c.near("I(r) lo", v.by_r.bounds.lo, 21827.50, 0.5, kRoundedRatio);
    c.near("I(r) hi", v.by_r.bounds.hi, 25412.56, 0.5, kRoundedRatio);
    c.near("I(q') lo", v.by_q_prime.bounds.lo, 21706.44, 0.5);
    c.near("I(q') hi", v.by_q_prime.bounds.hi, 24122.62, 0.5);
    return c.finish();
}

int garfield_chain() {
    Criterion c("garfield-chain");
    const auto p = fixture("garfield");
    const auto defect = h_defect(p);
    const auto rep = estimate(p.ranked(), defect);
    c.equal("d", static_cast<long long>(rep.d), 25);
    c.equal("h_d", static_cast<long long>(rep.h_d), 21);
    c.near("e_d", rep.e_d, 21.448, 0.002);
    c.near("q_d", rep.q_d, 3.086, 0.002);
    c.near("J_d lo", rep.j_d.lo, 10939.5, 1);
    c.near("J_d hi", rep.j_d.hi, 11808.6, 1);
    c.near("B'", rep.b_prime.value_or(NAN), 11328.5, 1);
    c.near("B''", rep.b_dprime.value_or(NAN), 11700.5, 2);
    c.near("B", rep.b_est, 11515.45, 2);
    return c.finish();
}

int case_goldens() {
    Criterion c("case-goldens");
    {
        const auto p = fixture("schubert");
        const auto rep = estimate(p);
        c.check("schubert case", rep.case_label() == "2b/2c", "got " + rep.case_label() + ", want 2b/2c");
        c.check("schubert beta_d == 0", rep.beta_d && *rep.beta_d == 0.0,
                "got " + std::to_string(rep.beta_d.value_or(NAN)),
                "fixture defect-row core sum is 2592 + 42: e_d is not an integer");
        c.near("schubert B", rep.b_est, 7688.8, 2, "fixture defect-row core sum exceeds the printed one by 42");
    }
    {
        const auto p = fixture("rousseau");
        const auto rep = estimate(p);
        c.check("rousseau rule 2a", rep.first_rule == BoundRule::upper, "got " + rep.case_label());
        c.near("rousseau B' = hi(J_d)", rep.b_prime.value_or(NAN), 10003.4, 1,
               "printed bound adds the head sum twice; printed q_d disagrees with its own core sum");
    }
    const std::vector<std::tuple<const char*, const char*, double, double>> goldens{
        {"kalaj_gs", "3a", 1671.8, 2}, {"monkova", "3b", 689.2, 1}, {"mutafchiev_gs", "3b", 275.4, 1}};
    for (const auto& [stem, tag, want, tol] : goldens) {
        const auto rep = estimate(fixture(stem));
        c.check(std::string(stem) + " case", rep.case_label() == tag, "got " + rep.case_label() + ", want " + tag);
        c.near(std::string(stem) + " B", rep.b_est, want, tol);
    }
    const auto white = estimate(fixture("white"));
    c.check("white case", white.case_label() == "1a", "got " + white.case_label() + ", want 1a");
    c.near("white B (0.5%)", white.b_est, 2399.75, 0.005 * 2399.75);
    return c.finish();
}

int worked_examples() {
    Criterion c("worked-examples");
    constexpr const char* kEinstein = "worked-example window holds 89 ranks for h_59 = 87";
    constexpr const char* kKim = "worked-example windows hold one rank fewer than h_k";
    constexpr const char* kKessler = "transcribed profile has h = 327, core sum 435806; printed 329, 432109";
    {
        const auto p = fixture("einstein_gs");
        const auto row = shifted_row_direct(p.ranked(), 59);
        c.near("einstein e_59", row.e, 88.27230596285564, 1e-9, kEinstein);
        c.equal("einstein d", static_cast<long long>(h_defect(p).d), 59, kEinstein);
    }
    {
        const auto p = fixture("kim_gs");
        c.near("kim e_13", shifted_row_direct(p.ranked(), 13).e, 333.80383460949037, 1e-9, kKim);
        c.near("kim e_14", shifted_row_direct(p.ranked(), 14).e, 331.052865868882, 1e-9, kKim);
        c.equal("kim d", static_cast<long long>(h_defect(p).d), 13, kKim);
    }
    c.equal("kessler d", static_cast<long long>(h_defect(fixture("kessler_gs")).d), 94, kKessler);
    return c.finish();
}

int brown_intervals() {
    Criterion c("brown-intervals");
    // Cells whose printed text cannot be read as a pair of numbers.
    const std::map<std::string, std::string> malformed{{"martin", "(37.9, 56.2.7)"}, {"narin", "(39.554, 5)"}};
    const std::map<std::string, const char*> known{
        {"leydesdorff", "slope 0.0045"}, {"glanzel", "slope 0.0045"},  {"moed", "slope 0.0045"},
        {"rousseau", "slope 0.0045"},    {"schubert", "slope 0.0045"}, {"garfield", "slope 0.0045"},
        {"braun", "slope 0.0045"},       {"small", "slope 0.0045"},    {"egghe", "slope 0.0045"},
        {"white", "slope 0.0045"},       {"ingwersen", "no slope reproduces the pair"},
        {"gauss_gs", "no slope reproduces the pair"},    {"andrews_scopus", "no slope reproduces the pair"},
        {"spalevic_gs", "no slope reproduces the pair"}, {"yong_gs", "no slope reproduces the pair"},
    };
    for (const auto& cell : tables::kBrownExpected) {
        if (cell.quantity != "brown") continue;
        const std::string stem(cell.fixture);
        if (auto m = malformed.find(stem); m != malformed.end()) {
            std::printf("    %-13s %s: printed %s excluded\n", "skip", stem.c_str(), m->second.c_str());
            continue;
        }
        double lo = 0, hi = 0;
        if (std::sscanf(std::string(cell.printed).c_str(), "(%lf, %lf)", &lo, &hi) != 2)
            throw Error("unreadable printed pair for " + stem);
        const auto b = brown_interval(static_cast<double>(fixture(stem).total()));
        const bool pass = std::abs(b.lo - lo) <= 0.1 && std::abs(b.hi - hi) <= 0.1;
        char buf[160];
        std::snprintf(buf, sizeof buf, "got (%.2f, %.2f), printed (%.1f, %.1f)", b.lo, b.hi, lo, hi);
        auto k = known.find(stem);
        c.check(stem, pass, buf, k == known.end() ? nullptr : k->second);
    }
    return c.finish();
}

int partition_exactness() {
    Criterion c("partition-exactness");
    const auto p = partition_counts_upto(1000);
    c.check("p(5)", p[5] == 7, p[5].get_str());
    c.check("p(100)", p[100] == 190569292, p[100].get_str());
    const std::string digits = p[1000].get_str();
    // Seven significant digits, rounded.
    mpz_class scaled = p[1000];
    mpz_class unit;
    mpz_ui_pow_ui(unit.get_mpz_t(), 10, digits.size() - 7);
    mpz_class lead = (scaled + unit / 2) / unit;
    c.check("p(1000) leading digits", lead == 2406147, digits + " rounds to " + lead.get_str());
    const auto d11 = count_by_durfee(11);
    c.check("P(11,3)", d11.count(3) == 5, d11.count(3).get_str());
    bool sums = true;
    long first_bad = -1;
    for (long n = 0; n <= 500 && sums; ++n) {
        if (count_by_durfee(n).total != p[static_cast<std::size_t>(n)]) {
            sums = false;
            first_bad = n;
        }
    }
    c.check("sum_d P(n,d) = p(n), n <= 500", sums, sums ? "all equal" : "differs at n = " + std::to_string(first_bad));
    return c.finish();
}

std::size_t brute_h(std::span<const Count> cit) {
    for (std::size_t m = cit.size(); m > 0; --m) {
        std::size_t at_least = 0;
        for (Count x : cit) at_least += x >= static_cast<Count>(m);
        if (at_least >= m) return m;
    }
    return 0;
}

int oracle_equivalence() {
    Criterion c("oracle-equivalence");
    bool histograms = true;
    for (int n = 0; n <= 30; ++n) {
        std::vector<long> hist;
        for_each_partition(n, [&](std::span<const int> parts) {
            const auto d = durfee_size(parts);
            if (hist.size() <= d) hist.resize(d + 1);
            ++hist[d];
        });
        const auto dist = count_by_durfee(n);
        for (std::size_t d = 0; d < std::max(hist.size(), dist.counts.size()); ++d)
            histograms &= dist.count(d) == (d < hist.size() ? hist[d] : 0);
    }
    c.check("Durfee histogram, n <= 30", histograms, histograms ? "enumeration equals DP" : "mismatch");

    std::mt19937_64 rng(20240521);
    int ladder_mismatch = 0, h_mismatch = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto len = std::uniform_int_distribution<int>(1, 80)(rng);
        const auto top = std::uniform_int_distribution<int>(0, 120)(rng);
        std::vector<Count> raw(static_cast<std::size_t>(len));
        for (auto& x : raw) x = std::uniform_int_distribution<Count>(0, top)(rng);
        const auto p = CitationProfile::normalize(std::move(raw));
        if (h_index(p) != brute_h(p.citations())) ++h_mismatch;
        const auto ladder = shifted_ladder(p, p.size() - 1);
        for (std::size_t k = 0; k < ladder.size(); ++k) {
            const auto direct = shifted_row_direct(p.ranked(), k);
            if (ladder[k].h_k != direct.h_k || ladder[k].n_h != direct.n_h || ladder[k].n_cit != direct.n_cit ||
                ladder[k].head_sum != direct.head_sum)
                ++ladder_mismatch;
        }
    }
    c.equal("ladder vs direct, 200 profiles (mismatched rows)", ladder_mismatch, 0);
    c.equal("h_index vs brute force (mismatches)", h_mismatch, 0);
    return c.finish();
}

int normal_approximation() {
    Criterion c("normal-approximation");
    for (long n : {100L, 200L, 500L, 1000L, 2000L}) {
        const auto dist = count_by_durfee(n);
        c.near("mode n=" + std::to_string(n), static_cast<double>(dist.mode), 0.540445 * std::sqrt(double(n)), 1.5);
    }
    const auto dist = count_by_durfee(400);
    const auto est = durfee_moment_estimates(400);
    c.near("mean n=400", dist.mean.get_d(), est.mean, 0.05);
    c.near("variance n=400", dist.variance.get_d(), est.variance, 0.10 * est.variance);
    return c.finish();
}

int blind_sufficiency() {
    Criterion c("blind-sufficiency");
    for (const char* stem : {"garfield", "schubert", "leydesdorff"}) {
        const auto p = fixture(stem);
        const auto full = estimate(p);
        const std::size_t m = full.d + 1 + full.h_d1 + 1;
        const auto blind = estimate(truncate_head(p, m));
        char buf[160];
        std::snprintf(buf, sizeof buf, "m = %zu, B full %.6f, blind %.6f", m, full.b_est, blind.b_est);
        c.check(stem, std::bit_cast<std::uint64_t>(full.b_est) == std::bit_cast<std::uint64_t>(blind.b_est), buf);
    }
    return c.finish();
}

}  // namespace

int main() {
    int unexpected = 0;
    try {
        unexpected += indices_row();
        unexpected += garfield_chain();
        unexpected += case_goldens();
        unexpected += worked_examples();
        unexpected += brown_intervals();
        unexpected += partition_exactness();
        unexpected += oracle_equivalence();
        unexpected += normal_approximation();
        unexpected += blind_sufficiency();
    } catch (const std::exception& e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 2;
    }
    std::printf("unexpected failures: %d\n", unexpected);
    return unexpected == 0 ? 0 : 1;
}
