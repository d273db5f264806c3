#include "expsieve/bounds.hpp"

#include <gtest/gtest.h>

using namespace expsieve;

namespace {
const BoundReport& row(const std::vector<BoundReport>& rows, const std::string& name) {
    for (const auto& r : rows)
        if (r.name == name) return r;
    throw std::out_of_range(name);
}
}  // namespace

TEST(Status, Window) {
    BoundReport b;
    b.value = 100;
    EXPECT_EQ(b.status(), "no-target");
    b.expected = 100;
    EXPECT_EQ(b.status(), "matched");
    b.expected = 102;
    EXPECT_EQ(b.status(), "mismatch-warning");
    b.expected = 98;
    EXPECT_EQ(b.status(), "mismatch-warning");
    b.expected = 103;
    EXPECT_EQ(b.status(), "mismatched");
    b.cap = true;
    EXPECT_TRUE(b.matched());
}

TEST(Rounding, FloorCeilUp) {
    EXPECT_EQ(floor_up(Real("2.9999")), 2);
    EXPECT_EQ(floor_up(Real(3)), 3);
    EXPECT_EQ(ceil_up(Real("2.1")), 3);
}

TEST(FixedPoint, SimpleLog) {
    // T = 10 log T + 5 converges near 43.4.
    auto fp = solve_fixed_point([](const Real& T) { return 10 * rlog(T) + 5; });
    EXPECT_NEAR(static_cast<double>(fp.value), 10 * std::log(static_cast<double>(fp.value)) + 5, 1e-9);
    EXPECT_EQ(fp.largest, static_cast<long long>(std::floor(static_cast<double>(fp.value))));
}

TEST(C7, KConstants) {
    auto rows = bounds_for_c7();
    for (const char* n : {"K1(m<c)", "K1(m>c)", "K2", "K3(m<c, z<=12)", "K3(m>c, z<=12)", "K3(z>=13)"})
        EXPECT_EQ(row(rows, n).status(), "matched") << n;
    EXPECT_EQ(row(rows, "K1(m<c)").value, 9937);
    EXPECT_EQ(row(rows, "K2").value, 18438);
}

TEST(C7, ZAndYCaps) {
    auto rows = bounds_for_c7();
    EXPECT_EQ(row(rows, "z(0)").value, 21789);
    EXPECT_EQ(row(rows, "z(5)").value, 108950);
    EXPECT_EQ(row(rows, "Y_u1").value, 4906);
    EXPECT_EQ(row(rows, "Y_u2").value, 2596);
}

TEST(Family, YBoundsAndZ1) {
    EXPECT_EQ(row(bounds_for_r(6), "Y_u1").value, 13264);
    EXPECT_EQ(row(bounds_for_r(8), "Y_u1").value, 16744);
    EXPECT_EQ(row(bounds_for_r(12), "Y_u1").value, 23728);
    for (unsigned r : {6u, 8u, 12u}) EXPECT_EQ(row(bounds_for_r(r), "Y_u2").value, 2578) << r;
    EXPECT_EQ(row(bounds_for_r(6), "z(1)").value, 337210);
    EXPECT_EQ(row(bounds_for_r(8), "z(1)").value, 1343597);
}

TEST(CalC, DefinedAboveZ0) {
    Int c = 7;
    long z0 = z0_of(4, Real(2), c, 0);
    EXPECT_FALSE(calC(z0 - 1, 4, Real(2), c, 0).has_value());
    ASSERT_TRUE(calC(z0, 4, Real(2), c, 0).has_value());
    EXPECT_GT(*calC(z0, 4, Real(2), c, 0), 0);
    auto [t1, t2] = T_upper_bounds(1500, 4, c, 0);
    EXPECT_LT(std::max(t1, t2), 2);   // early exit for Y = 4 at z2 = 1500
}

TEST(C97, Caps) {
    auto rows = bounds_for_c97();
    for (const auto& r : rows)
        if (r.expected) EXPECT_TRUE(r.matched()) << r.name;
    EXPECT_EQ(c97_constants(3).t1, 89);
}
