#include "expsieve/arith.hpp"
#include "expsieve/tables.hpp"

#include <gtest/gtest.h>

using namespace expsieve;

TEST(LebesgueNagell, EntriesSolveTheEquation) {
    const auto& t = lebesgue_nagell_table();
    EXPECT_FALSE(t.empty());
    for (const auto& e : t) {
        EXPECT_TRUE(verify_entry(e)) << e.label;
        Int lhs = e.X * e.X - pow_ui(Int(e.q), e.k);
        EXPECT_EQ(lhs, pow_ui(e.Y, e.n)) << e.label;
    }
}

TEST(LebesgueNagell, TamperedEntryFails) {
    auto e = lebesgue_nagell_table().front();
    e.X += 1;
    EXPECT_FALSE(verify_entry(e));
}

TEST(LebesgueNagell, LookupBySign) {
    for (const auto& e : lebesgue_lookup(7, -1)) EXPECT_LT(e.Y, 0);
    EXPECT_EQ(lebesgue_lookup(7).size() + lebesgue_lookup(97).size(), lebesgue_nagell_table().size());
}

TEST(Family, PrimesAndScan) {
    auto listed = family_primes(100);
    std::vector<unsigned> rs;
    for (const auto& f : listed) {
        EXPECT_EQ(f.c, 3 * pow_ui(Int(2), f.r) + 1);
        EXPECT_TRUE(is_probable_prime(f.c));
        rs.push_back(f.r);
    }
    EXPECT_EQ(rs, scan_family_r(100));
    EXPECT_FALSE(is_supported_r(3));   // 25
    EXPECT_TRUE(is_supported_r(6));
    EXPECT_EQ(family_c(6), 193);
}

TEST(Rows, YBoundsAndZCaps) {
    auto r6 = ybound_row(6);
    ASSERT_TRUE(r6);
    EXPECT_EQ(r6->Y_u1, 13264);
    EXPECT_EQ(r6->Y_u2, 2578);
    EXPECT_FALSE(ybound_row(3));
    auto z8 = zcap_row(8);
    ASSERT_TRUE(z8);
    EXPECT_EQ(z8->z_n, 1343597);
}
