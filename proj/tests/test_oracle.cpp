#include "expsieve/oracle.hpp"

#include <gtest/gtest.h>

using namespace expsieve;

TEST(Count, KnownTriples) {
    auto r = count_N(3, 5, 2, pow_ui(Int(2), 60));
    EXPECT_EQ(r.count, 3u);
    auto s = count_N(3, 10, 13, pow_ui(Int(13), 10));
    EXPECT_EQ(s.count, 2u);
    EXPECT_NE(std::find(s.solutions.begin(), s.solutions.end(), SolutionTriple{7, 1, 3}), s.solutions.end());
    EXPECT_EQ(count_N(2, 3, 11, pow_ui(Int(11), 20)).count, 2u);
    EXPECT_EQ(count_N(2, 3, 7, pow_ui(Int(7), 30)).count, 1u);
}

TEST(Count, SolutionsAreSortedAndExact) {
    auto r = count_N(2, 7, 3, pow_ui(Int(3), 40));
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        const auto& t = r.solutions[i];
        EXPECT_EQ(pow_ui(Int(2), t.x) + pow_ui(Int(7), t.y), pow_ui(Int(3), t.z));
        if (i) EXPECT_LE(r.solutions[i - 1].z, t.z);
    }
}

TEST(Pillai, ThirteenThreeTen) {
    auto r = pillai_solutions(13, 3, 10, pow_ui(Int(13), 10));
    EXPECT_EQ(r, (std::vector<PillaiPair>{{1, 1}, {3, 7}}));
}

TEST(Exceptional, AllHaveTwoSolutions) {
    auto r = verify_exceptional_set(pow_ui(Int(2), 60));
    EXPECT_TRUE(r.all_ok);
    bool saw_family = false;
    for (const auto& e : r.entries) {
        EXPECT_GE(e.result.count, 2u) << e.a << "," << e.b << "," << e.c;
        if (e.c == 33) saw_family = true;   // r = 5: (2, 31, 33)
    }
    EXPECT_TRUE(saw_family);
}

TEST(Mnq, SolutionsSatisfyEquation) {
    auto r = mnq_solutions(5, 1, 2, 100, 40);
    for (const auto& s : r)
        EXPECT_EQ(pow_ui(s.X, 5) - s.X, pow_ui(Int(2), s.y1) - pow_ui(Int(2), s.y2));
}

TEST(Cong, ChecksHoldOnKnownPairs) {
    auto r = count_N(3, 10, 13, pow_ui(Int(13), 10));
    ASSERT_EQ(r.solutions.size(), 2u);
    EXPECT_TRUE(lemma_cong_checks({3, 10, 13, r.solutions[0], r.solutions[1]}));
    auto t = count_N(2, 3, 11, pow_ui(Int(11), 10));
    ASSERT_EQ(t.solutions.size(), 2u);
    auto rep = lemma_cong_report({2, 3, 11, t.solutions[0], t.solutions[1]});
    EXPECT_TRUE(rep.ok());
    EXPECT_FALSE(rep.checks.empty());
}
