#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <string>

#include "citest/indices.hpp"
#include "fixture_util.hpp"

namespace citest {
namespace {

// Published total citations per fixture.
const std::map<std::string, Count> kPublishedTotals{
    {"leydesdorff", 25005},    {"glanzel", 11766},          {"moed", 7606},          {"van_raan", 8308},
    {"rousseau", 8053},        {"schubert", 7587},          {"martin", 7598},        {"narin", 7209},
    {"garfield", 11515},       {"braun", 5680},             {"small", 7693},         {"egghe", 5640},
    {"ingwersen", 3606},       {"white", 2399},             {"freud_gs", 643730},    {"kim_gs", 518589},
    {"kessler_gs", 515591},    {"einstein_gs", 161009},     {"erdos_gs", 99866},     {"tao_gs", 90963},
    {"leydesdorff_gs", 70821}, {"meyer_gs", 49110},         {"tao_scopus", 46852},   {"andrews_gs", 32386},
    {"mcaleer_gs", 26266},     {"hirsch_scopus", 24451},    {"erdos_scopus", 18830}, {"edelman_gs", 13417},
    {"gauss_gs", 11606},       {"andrews_scopus", 6567},    {"papadimitriou_gs", 5407},
    {"zeilberger_scopus", 3158}, {"orovic_gs", 3082},       {"savage_gs", 3031},     {"spalevic_gs", 2832},
    {"ziarati_gs", 2123},      {"yong_gs", 1631},           {"kalaj_gs", 1577},      {"vukoslavcevic_gs", 912},
    {"monkova", 741},          {"mutafchiev_gs", 312},
};

TEST(Fixtures, EveryFileIsCovered) {
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(CITEST_FIXTURE_DIR)) {
        if (entry.path().extension() != ".csv") continue;
        ++files;
        EXPECT_TRUE(kPublishedTotals.contains(entry.path().stem().string())) << entry.path();
    }
    EXPECT_EQ(files, kPublishedTotals.size());
}

TEST(Fixtures, TotalsMatchPublishedValues) {
    for (const auto& [stem, total] : kPublishedTotals) {
        const auto p = testing::load_fixture(stem);
        EXPECT_EQ(p.total(), total) << stem;
        EXPECT_FALSE(p.meta().name.empty()) << stem;
        EXPECT_TRUE(std::ranges::is_sorted(p.citations(), std::greater<>{})) << stem;
        EXPECT_GE(h_index(p), 1u) << stem;
    }
}

TEST(Fixtures, FullTruncationIsIdentity) {
    for (const auto& [stem, total] : kPublishedTotals) {
        const auto p = testing::load_fixture(stem);
        const auto t = truncate_head(p, p.size());
        EXPECT_EQ(t.completeness(), Completeness::full) << stem;
        EXPECT_TRUE(std::ranges::equal(t.head(), p.citations())) << stem;
    }
}

TEST(Fixtures, PublishedGarfieldShape) {
    const auto p = testing::load_fixture("garfield");
    EXPECT_EQ(p.size(), 106u);
    EXPECT_EQ(p.total(), 11515);
    EXPECT_EQ(core_sum(p, 37), 10509);
    EXPECT_EQ(p.ranked().at_rank(47), 21);
}

TEST(Fixtures, PublishedLeydesdorffIndex) { EXPECT_EQ(h_index(testing::load_fixture("leydesdorff")), 79u); }

}  // namespace
}  // namespace citest
