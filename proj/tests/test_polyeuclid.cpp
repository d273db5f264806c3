#include "expsieve/polyeuclid.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace expsieve;

TEST(RatPoly, ArithmeticAndDivision) {
    RatPoly a({Rat(1), Rat(0), Rat(1)});   // t^2 + 1
    RatPoly b({Rat(-1), Rat(1)});          // t - 1
    RatPoly q, r;
    divmod(a, b, q, r);
    EXPECT_EQ(q, RatPoly({Rat(1), Rat(1)}));
    EXPECT_EQ(r, RatPoly::constant(2));
    EXPECT_EQ(q * b + r, a);
    EXPECT_EQ((a - a).degree(), -1);
    EXPECT_EQ(a.eval(Rat(3)), 10);
    EXPECT_EQ(a.to_string(), "t^2 + 1");
}

TEST(RatPoly, ExtGcdCoprime) {
    RatPoly A = build_AE(3), B = build_IEN(3, 4);
    auto g = ext_gcd(A, B);
    EXPECT_EQ(g.g, RatPoly::constant(1));
    EXPECT_EQ(A * g.P + B * g.Q, g.g);
}

TEST(Builders, MatchDefinitions) {
    for (unsigned long E = 1; E <= 6; ++E)
        for (unsigned long N = 1; N <= 6; ++N)
            for (Int X : {Int(2), Int(3), Int(10)})
                EXPECT_EQ(build_IEN(E, N).eval_int(X), eval_IEN(X, E, N));
}

TEST(Witness, BezoutIdentityGrid) {
    for (unsigned long n = 1; n <= 5; ++n)
        for (unsigned long E = 1; E <= 6; ++E)
            for (unsigned long N = 1; N <= 9; ++N) {
                BezoutWitness w;
                try {
                    w = bezout_witness(n, E, N);
                } catch (const NoWitnessError&) {
                    continue;   // A_E and B I share a factor
                }
                EXPECT_TRUE(verify_witness(w)) << n << " " << E << " " << N;
                EXPECT_TRUE(w.lP.is_integral());
                EXPECT_TRUE(w.lQ.is_integral());
                EXPECT_GT(w.l, 0);
            }
}

TEST(Witness, CubicCase) {
    auto w = bezout_witness(1, 3, 5);
    EXPECT_EQ(w.lQ, RatPoly({Rat(1), Rat(2)}));
    EXPECT_EQ(w.l, 15);
}

TEST(Congruence, RejectsNonSolutions) {
    EXPECT_THROW(derive_congruence(3, 5, 3, 1, 2, 1), HypothesisError);
}

TEST(KRelation, Decomposes) {
    // b = 18, c = 7, Y = 22: 18^2 + 18 + 1 = 7^3, e = nu_7(7) = 1.
    auto k = krelation_decompose(18, 7, 4, 22);
    EXPECT_EQ(k.K, 1);
    EXPECT_EQ(k.e, 1u);
    EXPECT_THROW(krelation_decompose(3, 13, 1, 7), std::exception);   // Y = 7 is not 4 (mod 6)
}

TEST(Survey, SignsAndScale) {
    auto rows = leading_coeff_survey(1, 3, 5, 1, 4);
    EXPECT_EQ(rows.size(), 12u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.l, 5 * Int(r.N));
        EXPECT_TRUE(r.lead_sign == 1 || r.lead_sign == -1);
    }
}

TEST(DbIdentity, RandomRationals) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Rat b(static_cast<long>(rng() % 2000) - 1000, 1 + rng() % 50);
        Rat c(2 + rng() % 100, 1 + rng() % 7);
        Rat Y(static_cast<long>(rng() % 500) + 2, 1 + rng() % 5);
        long e = rng() % 3, z = e + rng() % 6;
        b.canonicalize();
        c.canonicalize();
        Y.canonicalize();
        EXPECT_EQ(db_identity_defect(b, c, z, Y, e), 0);
    }
    EXPECT_TRUE(db_identity_defect_poly(Rat(7), 5, Rat(10), 1).is_zero());
}
