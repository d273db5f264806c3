#pragma once

#include "expsieve/arith.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace expsieve {

// 60 significant digits (about 200 bits).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>,
                                           boost::multiprecision::et_off>;

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Real to_real(const Int& x);
Real rlog(const Real& x);
Real rpow(const Real& base, const Real& exp);
// Conservative integer rounding of real bounds.
long long floor_up(const Real& x);    // floor of x nudged upward by a relative 1e-45
long long ceil_up(const Real& x);     // ceil of x nudged upward

// ---- linear forms in logarithms ----

// Lower bound for log|b2 log a2 - b1 log a1|, alpha_j > 1 rational.
struct TwoLogParams {
    Real H1, H2;
    Real b1, b2;
    Real h1 = 0, h2 = 0;                  // heights h(alpha_j)
    Real log_alpha1 = 0, log_alpha2 = 0;
};
Real eval_two_log(const TwoLogParams& p);

// Lower bound for log|alpha^k - 1|, |alpha| = 1.
struct OneLogUnitParams {
    unsigned D = 2;
    Real h;            // h(alpha)
    Real abs_log;      // |log alpha|, principal branch
    Real k;
};
Real one_log_H(const OneLogUnitParams& p);
Real one_log_B(const OneLogUnitParams& p);
Real eval_one_log_unit(const OneLogUnitParams& p);

// Upper bound for nu_M(a1^b1 - a2^b2).
struct MadicParams {
    Real M;
    Real g;
    Real H1, H2;
    Real b1, b2;
    Real h1 = 0, h2 = 0;
};
Real madic_B(const MadicParams& p);
Real eval_madic(const MadicParams& p);

// Upper bound for nu_pi(a1^b1 - a2^b2), pi above the rational prime p.
struct PrimeIdealParams {
    unsigned D = 2;
    unsigned f = 1;
    Real p;
    Real g;
    Real H1, H2;
    Real b1, b2;
    Real h1 = 0, h2 = 0;
};
Real prime_ideal_B(const PrimeIdealParams& p);
Real eval_prime_ideal(const PrimeIdealParams& p);

// ---- fixed points ----

struct FixedPoint {
    Real value;                  // limit of T <- RHS(T)
    long long largest = 0;       // largest integer n with n <= RHS(n)
    std::vector<std::string> trace;
};
// RHS must grow polylogarithmically. Starts from T_init (default e^10).
FixedPoint solve_fixed_point(const std::function<Real(const Real&)>& rhs,
                             std::optional<Real> T_init = std::nullopt, int max_iter = 2000);

// ---- reports ----

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> inputs;
    long long value = 0;
    std::optional<long long> expected;
    std::string real_value;      // unrounded quantity the integer came from
    std::vector<std::string> trace;
    std::string note;
    // Cap rows match when value <= expected instead of value == expected.
    bool cap = false;

    // "matched", "mismatch-warning" (|diff| <= 2), "mismatched" or "no-target".
    std::string status() const;
    bool matched() const { return !expected || (cap ? value <= *expected : value == *expected); }
};

// Z < K1 log a log b; m_lt_c selects f = log c / log 2.
BoundReport bound_K1(const Int& c, unsigned E, bool m_lt_c);
// zZ < K2 log a log b for z >= z_min, with log D > zeta z.
BoundReport bound_K2(const Int& c, unsigned E, unsigned z_min = 13, const char* zeta = "1.11");
// Delta caps; z_cap is the largest z the row applies to.
BoundReport bound_K3_small(const Int& c, long long K1, unsigned z_cap, const std::string& label);
BoundReport bound_K3_large(const Int& c, long long K2);
// z(n') = floor(z1*) + n'.
BoundReport bound_z_nprime(const Int& c, unsigned nprime);
// Largest Y = 4 (mod 6) admitted by the two-log inequality, e = nu_c((Y-1)/3) per Y.
BoundReport bound_Y_upper(const Int& c);
// Largest Y <= Y_max admitted by the refined inequality at z = z1, T = 2.
BoundReport bound_Y_refined(const Int& c, unsigned long z1, unsigned long Y_max);

// C(z,Y,T) for Y = 4 (mod 6), N = (Y-1)/3; nullopt when the radicand inequality fails.
std::optional<Real> calC(long z, unsigned long Y, const Real& T, const Int& c, unsigned e);
// Least z >= 1 for which C(z,Y,T) is a positive real.
long z0_of(unsigned long Y, const Real& T, const Int& c, unsigned e);
std::pair<Real, Real> T_upper_bounds(long z, unsigned long Y, const Int& c, unsigned e);
// (z_u1, z_u2); nullopt when C is undefined at z.
std::optional<std::pair<Real, Real>> z_upper_bounds(long z, unsigned long Y, const Real& T, const Int& c,
                                                    unsigned e);

// ---- c = 97, even Delta ----
struct C97Constants {
    unsigned E = 0;
    long long t1 = 0;          // table form
    long long t1_fixed = 0;    // fixed point of the displayed inequality
    Real t2, t3;
};
C97Constants c97_constants(unsigned E);

struct C97Caps {
    Real even_Z;        // Z even, z <= Z
    Real odd_z;         // z cap, z <= Z, Z odd
    Real Z_le_z;        // Z <= z
    Real odd_Z;         // Z odd, chi = 2.43
    Real odd_Z_8400;    // Z odd, chi = 8400
    std::vector<BoundReport> rows;
};
C97Caps c97_Z_caps();
// Z < 9/(1-2/chi) (1 + 22 pi / log c) max{log Z + 4.24, 17}^2 + 1.
Real complex_baker_cap(const Int& c, const Real& chi);

// Full row sets.
std::vector<BoundReport> bounds_for_c7();
std::vector<BoundReport> bounds_for_r(unsigned r);
std::vector<BoundReport> bounds_for_c97();

}  // namespace expsieve
