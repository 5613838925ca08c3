#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "citest/error.hpp"
#include "citest/indices.hpp"
#include "fixture_util.hpp"

namespace citest {
namespace {

// Definition-level scans, independent of the library's binary search and running sums.
std::size_t brute_h(const std::vector<Count>& cit) {
    std::size_t best = 0;
    for (std::size_t m = 1; m <= cit.size(); ++m)
        if (cit[m - 1] >= static_cast<Count>(m)) best = m;
    return best;
}

std::size_t brute_g(const std::vector<Count>& cit) {
    std::size_t best = 0;
    for (std::size_t k = 1; k <= cit.size(); ++k) {
        Count s = 0;
        for (std::size_t j = 0; j < k; ++j) s += cit[j];
        if (s >= static_cast<Count>(k * k)) best = k;
    }
    return best;
}

CitationProfile random_profile(std::mt19937_64& rng) {
    const std::size_t p = 1 + rng() % 150;
    std::uniform_real_distribution<double> u(0, 1);
    const double scale = 1 + u(rng) * 400;
    const double shape = 0.3 + u(rng) * 2.5;
    std::vector<Count> raw(p);
    for (auto& c : raw) c = static_cast<Count>(scale * std::pow(u(rng), shape));
    return CitationProfile::normalize(std::move(raw));
}

TEST(HIndex, SmallProfiles) {
    EXPECT_EQ(h_index(CitationProfile::normalize({0, 0, 0})), 0u);
    EXPECT_EQ(h_index(CitationProfile::normalize({})), 0u);
    EXPECT_EQ(h_index(CitationProfile::normalize({3, 2, 2})), 2u);
    EXPECT_EQ(h_index(CitationProfile::normalize({1})), 1u);
    EXPECT_EQ(h_index(CitationProfile::normalize({100, 100})), 2u);
}

TEST(HIndex, MatchesBruteForceOnRandomProfiles) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_profile(rng);
        const std::vector<Count> cit(p.citations().begin(), p.citations().end());
        ASSERT_EQ(h_index(p), brute_h(cit));
        ASSERT_EQ(g_index(p), brute_g(cit));
    }
}

TEST(CoreSum, PrefixSumsAndRange) {
    const auto p = CitationProfile::normalize({5, 4, 1});
    EXPECT_EQ(core_sum(p, 1), 5);
    EXPECT_EQ(core_sum(p, 3), 10);
    EXPECT_THROW((void)core_sum(p, 0), RankOutOfRange);
    EXPECT_THROW((void)core_sum(p, 4), RankOutOfRange);
}

TEST(GIndex, SmallProfilesCappedAtPaperCount) {
    EXPECT_EQ(g_index(CitationProfile::normalize({1, 1, 1})), 1u);
    EXPECT_EQ(g_index(CitationProfile::normalize({10, 5, 3, 1})), 4u);
    EXPECT_EQ(g_index(CitationProfile::normalize({2, 2})), 2u);
    EXPECT_EQ(g_index(CitationProfile::normalize({100})), 1u);
    EXPECT_EQ(g_index(CitationProfile::normalize({0, 0})), 0u);
}

TEST(CoreIndices, HandExample) {
    // h = 4, N_cit(h) = 27.
    const auto ix = compute_core_indices(CitationProfile::normalize({10, 8, 5, 4, 3}));
    EXPECT_EQ(ix.h, 4u);
    EXPECT_EQ(ix.g, 5u);
    EXPECT_EQ(ix.n_cit_h, 27);
    EXPECT_DOUBLE_EQ(ix.a_index, 27.0 / 4);
    EXPECT_DOUBLE_EQ(ix.r_index, std::sqrt(27.0));
    EXPECT_DOUBLE_EQ(ix.e_index, std::sqrt(11.0));
    EXPECT_EQ(ix.r_floor, 1);  // floor(54 / 20) - 1
    EXPECT_DOUBLE_EQ(ix.h_cap_index, 4.0);
    EXPECT_DOUBLE_EQ(ix.d_index, std::sqrt(38.0));
    EXPECT_DOUBLE_EQ(ix.q, 54.0 / 16 - 1);
    EXPECT_DOUBLE_EQ(ix.q_prime, 27.0 / 16);
}

TEST(CoreIndices, FlatCoreHasZeroExcess) {
    const auto ix = compute_core_indices(CitationProfile::normalize({3, 3, 3}));
    EXPECT_EQ(ix.h, 3u);
    EXPECT_DOUBLE_EQ(ix.e_index, 0.0);
    EXPECT_DOUBLE_EQ(ix.q, 1.0);
    EXPECT_DOUBLE_EQ(ix.q_prime, 1.0);
    EXPECT_DOUBLE_EQ(ix.a_index, 3.0);
    EXPECT_DOUBLE_EQ(ix.r_index, 3.0);
    EXPECT_DOUBLE_EQ(ix.d_index, 3.0);
}

TEST(CoreIndices, FloorAtExactQuotients) {
    // 2 * 12 / (3 * 4) = 2 exactly.
    EXPECT_EQ(compute_core_indices(CitationProfile::normalize({6, 3, 3})).r_floor, 1);
    // 2 * 25 / (5 * 6) = 1.67.
    EXPECT_EQ(compute_core_indices(CitationProfile::normalize({5, 5, 5, 5, 5})).r_floor, 0);
}

TEST(CoreIndices, EmptyCoreIsAnError) {
    EXPECT_THROW((void)compute_core_indices(CitationProfile::normalize({0, 0})), EmptyCore);
    EXPECT_THROW((void)compute_core_indices(CitationProfile::normalize({})), EmptyCore);
}

TEST(CoreIndices, InequalityChainsAndIdentities) {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto p = random_profile(rng);
        if (h_index(p) == 0) continue;
        const auto ix = compute_core_indices(p);
        const double h = static_cast<double>(ix.h);
        const double n = static_cast<double>(ix.n_cit_h);
        const double eps = 1e-9;
        ++checked;
        EXPECT_LE(ix.h, ix.g);
        EXPECT_LE(h, ix.r_index + eps);
        EXPECT_LE(ix.r_index, ix.d_index + eps);
        EXPECT_LE(ix.d_index, ix.a_index + eps * ix.a_index);
        EXPECT_LE(ix.h_cap_index, ix.d_index + eps);
        EXPECT_NEAR(ix.r_index * ix.r_index, h * ix.a_index, eps * n);
        EXPECT_NEAR(ix.d_index * ix.d_index, 2 * ix.r_index * ix.r_index - h * h, eps * n);
        EXPECT_NEAR(ix.e_index * ix.e_index + h * h, n, eps * n);
        EXPECT_NEAR(ix.q, 2 * ix.q_prime - 1, eps * ix.q_prime);
        EXPECT_GE(ix.q_prime, 1.0);
        if (ix.e_index > 0) {
            EXPECT_GE(h * ix.q / ix.e_index, 2 * std::sqrt(2.0) - eps);
            EXPECT_LE(h + ix.e_index, std::sqrt(2 * n) + eps);
        }
    }
    EXPECT_GT(checked, 300);
}

TEST(CoreIndices, PublishedGarfieldRow) {
    const auto ix = compute_core_indices(testing::load_fixture("garfield"));
    EXPECT_EQ(ix.h, 37u);
    EXPECT_EQ(ix.n_cit_h, 10509);
    EXPECT_NEAR(ix.e_index, 95.603, 0.0005);
    EXPECT_NEAR(ix.q, 14.353, 0.0005);
    EXPECT_EQ(ix.r_floor, 13);
}

TEST(CoreIndices, PublishedLeydesdorffRow) {
    const auto ix = compute_core_indices(testing::load_fixture("leydesdorff"));
    EXPECT_EQ(ix.h, 79u);
    // The transcribed core sums to 17361, one above the printed 17360, which moves q by 0.0003 and e by 0.004.
    EXPECT_EQ(ix.n_cit_h, 17361);
    EXPECT_NEAR(ix.q, 4.563, 0.001);
    EXPECT_NEAR(ix.q_prime, 2.782, 0.0005);
    EXPECT_NEAR(ix.e_index, 105.447, 0.005);
}

}  // namespace
}  // namespace citest
