#include "expsieve/bounds.hpp"
#include "expsieve/sieves.hpp"

#include <gtest/gtest.h>

using namespace expsieve;

namespace {
bool has_prefix(const std::vector<SieveCandidate>& v, const std::vector<Int>& prefix) {
    for (const auto& c : v)
        if (c.tuple.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), c.tuple.begin())) return true;
    return false;
}
}  // namespace

TEST(Step1, Checks) {
    EXPECT_EQ(step1_t_upper(7, 0), 1u);    // floor(1 + 1/sqrt 7 + 1/7)
    EXPECT_EQ(step1_t_upper(7, 1), 10u);   // floor(7 (1 + 1/sqrt 7 + 1/7))
    for (unsigned n = 0; n <= 3; ++n) {
        unsigned long tu = step1_t_upper(7, n);
        EXPECT_TRUE(step1_check5(7, tu, n, 1));
    }
}

TEST(Step123, C7CaseOneCounts) {
    Step1Config s1;
    auto l1 = step1(s1);
    EXPECT_EQ(l1.size(), 466u);
    auto l2 = step2(7, l1, 3);
    for (const auto& e : l2) {
        const auto& t = e.tuple;
        EXPECT_EQ(pow_ui(t[0], t[2].get_ui()) + pow_ui(t[1], t[3].get_ui()), pow_ui(Int(7), t[4].get_ui()));
    }
    EXPECT_TRUE(step3(7, l2, Step3Constants{}).empty());
}

TEST(Step123, PlantedInstanceSurvivesEveryStep) {
    Step1Config s1;
    s1.c = 13;
    auto l1 = step1(s1);
    EXPECT_TRUE(has_prefix(l1, {3, 2}));   // 3^7 + 10 = 13^3
    auto l2 = step2(13, l1, 1);
    EXPECT_TRUE(has_prefix(l2, {3, 10, 7, 1, 3}));
    SieveCandidate base{"list2", {3, 10, 1, 1, 1, 0}, {}};
    Step3Caps caps{20, 20, 40, 3};
    auto s3 = step3_entry(13, base, caps);
    EXPECT_TRUE(has_prefix(s3, {3, 10, 1, 1, 1, 7, 1, 3}));
    EXPECT_EQ(s3, step3_entry_literal(13, base, caps));
}

TEST(Lifted, CandidatesAreRootsModulo) {
    for (unsigned e = 0; e <= 2; ++e)
        for (const auto& b : lifted_b_candidates(7, 6, e)) {
            Int m = pow_ui(Int(7), 6 - e);
            EXPECT_EQ(mod_nonneg(b.b * b.b + b.b + 1, m), 0);
            EXPECT_EQ(b.e, e);
        }
}

TEST(Zgap, C7EmptyAndPlantedHit) {
    EXPECT_TRUE(zgap_scan(ZgapConfig{}).empty());
    ZgapConfig f;
    f.c = 13;
    f.z_lo = f.z_hi = 1;
    f.gap = 2;
    auto hits = zgap_scan(f);
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0].tuple[1], 3);   // Z = 3, b = 3
    EXPECT_EQ(zgap_probe(13, 1, 3, 3), 0);
}

TEST(Zfloor, C7EmptyAndPlantedHit) {
    ZfloorConfig cfg;
    cfg.z_hi = 10;
    ZfloorStats st;
    EXPECT_TRUE(zfloor_scan(cfg, {}, &st).empty());
    EXPECT_GT(st.tested, 0u);
    ZfloorConfig f;
    f.c = 13;
    f.z_lo = f.z_hi = 1;
    f.Y_list = {7};
    f.target_gap = 2;
    auto hits = zfloor_scan(f);
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0].tuple[2], 3);
}

TEST(Final, PrimeFactorFilter) {
    // 3 * 1 * 2 + 1 = 7: allowed; 3 * 1 * 4 + 1 = 13: allowed; 3 * 1 * 8 + 1 = 25: not.
    EXPECT_TRUE(prime_factor_ok(7, 1, 0, 2));
    EXPECT_TRUE(prime_factor_ok(7, 1, 0, 4));
    EXPECT_FALSE(prime_factor_ok(7, 1, 0, 8));
    FinalConfig cfg;
    cfg.Y_u = 100;
    EXPECT_EQ(final_Y_list(cfg).size(), 17u);
}

TEST(Final, SmallC7RunEmpty) {
    FinalConfig cfg;
    cfg.Y_u = 200;
    FinalStats st;
    EXPECT_TRUE(final_sieve(cfg, {}, &st).empty());
    EXPECT_EQ(st.Y_values, 33u);
}

TEST(Final, PlantedInstanceFound) {
    FinalConfig f;
    f.c = 13;
    f.Y_list = {7};
    f.T_range = std::make_pair(1ul, 1ul);
    f.T_step = 1;
    f.z2 = 1;
    f.z_hi = 1;
    auto s = final_sieve(f);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].tuple, (std::vector<Int>{7, 1, 1, 3, 169}));
    EXPECT_THROW(final_sieve(FinalConfig{.c = 11}), DomainError);
}

TEST(C97, DeskChecks) {
    C97Config cfg;
    cfg.Z_hi = 60;
    auto r = c97_even_delta_check(cfg);
    EXPECT_TRUE(r.table_matches);
    EXPECT_EQ(r.table.size(), 3u);
    EXPECT_TRUE(r.small_Z_empty);
    EXPECT_TRUE(r.V_ok);
    EXPECT_FALSE(r.min_component_ok);   // Z = 10 sits below 97^5
    EXPECT_EQ(r.min_component_first_fail, 10u);
    EXPECT_EQ(r.z_gt_Z_pairs.size(), 2u);
}

TEST(Nagell, OnlyKnownHits) {
    auto h = nagell_check(100000);
    ASSERT_EQ(h.size(), 1u);   // 18^2 + 18 + 1 = 7^3
    EXPECT_EQ(h[0].m, 18u);
    EXPECT_EQ(h[0].c, 7);
}

TEST(FamilyPipeline, DeskPipelineR6) {
    FamilyConfig cfg;
    cfg.r = 6;
    auto r = family_pipeline(cfg);
    EXPECT_EQ(r.c, 193);
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.stages.empty());
    cfg.r = 3;
    EXPECT_THROW(family_pipeline(cfg), ParamError);
}
