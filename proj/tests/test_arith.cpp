#include "expsieve/arith.hpp"
#include "expsieve/dlog.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace expsieve;

TEST(Valuation, IntegerAndRational) {
    EXPECT_EQ(valuation(7, Int(7 * 7 * 7 * 5)), 3);
    EXPECT_EQ(valuation(7, Int(5)), 0);
    EXPECT_EQ(valuation(7, Int(-49)), 2);
    EXPECT_EQ(valuation(6, Int(72)), 2);   // composite base: 72 = 6^2 * 2
    EXPECT_EQ(valuation(7, Rat(5, 343)), -3);
    EXPECT_EQ(valuation(97, Int(pow_ui(Int(97), 40) * 3)), 40);
}

TEST(Valuation, MatchesRepeatedDivision) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Int M = 2 + rng() % 50, x = 1 + rng() % 1000000;
        x *= pow_ui(M, rng() % 6);
        long v = 0;
        Int t = x;
        while (t % M == 0) t /= M, ++v;
        EXPECT_EQ(valuation(M, x), v) << M << " " << x;
    }
}

TEST(Orders, MultiplicativeAndSigned) {
    EXPECT_EQ(mult_order(7, 2), 3u);
    EXPECT_EQ(mult_order(49, 3), 42u);
    auto o = pm_order(13, 5);   // 5^2 = -1 mod 13
    EXPECT_EQ(o.e, 2u);
    EXPECT_EQ(o.sign, -1);
    auto p = pm_order(7, 2);    // 2^3 = 1
    EXPECT_EQ(p.e, 3u);
    EXPECT_EQ(p.sign, 1);
}

TEST(Factor, SmallAndPhi) {
    auto f = factor_small(Int(2) * 2 * 3 * 97 * 97);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].first, 2);
    EXPECT_EQ(f[0].second, 2u);
    EXPECT_EQ(f[2].first, 97);
    EXPECT_EQ(f[2].second, 2u);
    EXPECT_EQ(euler_phi(Int(49)), 42);
    EXPECT_EQ(euler_phi(Int(97 * 97)), 97 * 96);
}

TEST(Powers, RootsAndPerfectPowers) {
    EXPECT_EQ(*kth_root_exact(pow_ui(Int(13), 7), 7), 13);
    EXPECT_FALSE(kth_root_exact(Int(1000001), 3));
    auto pp = is_perfect_power(Int(2187));
    ASSERT_TRUE(pp);
    EXPECT_EQ(pp->first, 3);
    EXPECT_EQ(pp->second, 7u);
    auto sq = is_perfect_power(Int(4096));
    ASSERT_TRUE(sq);
    EXPECT_EQ(sq->first, 2);
    EXPECT_EQ(sq->second, 12u);
    EXPECT_FALSE(is_perfect_power(Int(10)));
    EXPECT_TRUE(is_square(Int(68) * 68));
    EXPECT_FALSE(is_square(Int(68) * 68 + 1));
    EXPECT_EQ(isqrt(Int(99)), 9);
}

TEST(Modular, PowmodAndNonneg) {
    EXPECT_EQ(powmod(3, 100, 97), powmod(3, 4, 97));   // order divides 96
    EXPECT_EQ(mod_nonneg(-5, 7), 2);
    EXPECT_EQ(mod_nonneg(14, 7), 0);
}

TEST(Primes, ProthAgreesWithMillerRabin) {
    for (unsigned n = 1; n <= 120; ++n) {
        Int N = 3 * pow_ui(Int(2), n) + 1;
        if (n >= 2) EXPECT_EQ(proth_is_prime(3, n), is_probable_prime(N)) << n;
    }
    EXPECT_TRUE(is_probable_prime(Int(97)));
    EXPECT_FALSE(is_probable_prime(Int(91)));
    auto ps = small_primes(30);
    EXPECT_EQ(ps, (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(Hensel, CubicRootsLift) {
    for (Int c : {Int(7), Int(13), Int(97), Int(193)}) {
        for (unsigned long l : {1ul, 2ul, 5ul, 20ul}) {
            auto h = hensel_cubic_roots(c, l);
            EXPECT_EQ(h.modulus, pow_ui(c, l));
            for (const Int& r : h.roots) EXPECT_EQ(mod_nonneg(r * r + r + 1, h.modulus), 0) << c << " " << l;
            EXPECT_LT(h.roots[0], h.roots[1]);
            EXPECT_EQ(mod_nonneg(h.sqrt_m3 * h.sqrt_m3 + 3, c), 0);
        }
    }
    EXPECT_THROW(hensel_cubic_roots(5, 3), std::exception);
}

TEST(Gauss, Beta97Components) {
    EXPECT_EQ(beta97().norm(), 97);
    auto z2 = gauss_pow(beta97(), 2);
    EXPECT_EQ(z2.re, 16 - 81);
    EXPECT_EQ(z2.im, 72);
    for (unsigned long Z = 1; Z <= 30; ++Z) {
        auto ab = beta_components(Z);
        EXPECT_EQ(ab, beta_components_from_power(gauss_pow(beta97(), Z), Z));
        // a^2 + b^2 = 97^Z up to the swap induced by (-conj beta)^Z.
        EXPECT_EQ(ab.first * ab.first + ab.second * ab.second, pow_ui(Int(97), Z)) << Z;
    }
    EXPECT_EQ(V_of_Z(1324), V_from_components(beta_components(1324), 1324));
}

TEST(Cubes, PlusMinusOneResidues) {
    auto r = cube_pm1_residues(7);
    for (auto h : r) {
        std::uint64_t h3 = h * h % 7 * h % 7;
        EXPECT_TRUE(h3 == 1 || h3 == 6);
        EXPECT_NE(h, 0u);
        EXPECT_NE(h, 1u);
        EXPECT_NE(h, 6u);
    }
    EXPECT_EQ(r.size(), 4u);   // 2, 4 (cube 1) and 3, 5 (cube -1)
}

TEST(Dlog, RoundTrip) {
    for (u64 c : {7ull, 13ull, 97ull}) {
        unsigned W = std::min(PrimePowerDlog::max_level(c), 6u);
        PrimePowerDlog d(c, W);
        std::mt19937_64 rng(c);
        for (int i = 0; i < 50; ++i) {
            u64 k = rng() % d.order();
            u64 h = powmod64(d.generator(), k, d.modulus());
            EXPECT_EQ(d.log(h), k);
        }
    }
}
