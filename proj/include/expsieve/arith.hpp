#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace expsieve {

using Int = mpz_class;
using Rat = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct CoprimalityError : std::domain_error {
    using std::domain_error::domain_error;
};
struct NoRootError : std::domain_error {
    using std::domain_error::domain_error;
};

// nu_M(x): exponent of M in x. For rationals p/q in lowest terms, nu_M(p) - nu_M(q).
long valuation(const Int& M, const Int& x);
long valuation(const Int& M, const Rat& x);

// Least e >= 1 with A^e = sign (mod M), sign in {+1,-1}.
struct PmOrder {
    Int modulus;
    std::uint64_t e = 0;
    int sign = 1;
};
PmOrder pm_order(const Int& M, const Int& A);

// Least k >= 1 with A^k = 1 (mod M).
std::uint64_t mult_order(const Int& M, const Int& A);

// Trial-division factorisation; intended for the small and smooth numbers met here.
std::vector<std::pair<Int, unsigned>> factor_small(Int n);
Int euler_phi(const Int& M);

std::optional<Int> kth_root_exact(const Int& A, unsigned long k);
// Maximal-exponent representation A = base^exp with exp >= 2, or none.
std::optional<std::pair<Int, unsigned long>> is_perfect_power(const Int& A);
bool is_square(const Int& A);
// floor(sqrt(A)) for A >= 0.
Int isqrt(const Int& A);

Int powmod(const Int& base, const Int& exp, const Int& mod);
Int pow_ui(const Int& base, unsigned long exp);
Int mod_nonneg(const Int& a, const Int& m);

bool is_probable_prime(const Int& n, int rounds = 40);
// Deterministic test for N = k*2^n + 1 with k < 2^n (Proth).
bool proth_is_prime(const Int& k, unsigned long n);

// The two roots of U^2+U+1 = 0 (mod c^l) for a prime c = 1 (mod 3).
struct HenselRootPair {
    Int c;
    unsigned long l = 0;
    Int modulus;      // c^l
    Int roots[2];     // ascending
    Int sqrt_m3;      // lift of the smaller positive sqrt(-3) mod c
    Int b_plus;       // (-1 + sqrt(-3)) / 2
    Int b_minus;      // (-1 - sqrt(-3)) / 2
};
HenselRootPair hensel_cubic_roots(const Int& c, unsigned long l);

// Gaussian integers.
struct GaussInt {
    Int re, im;
    GaussInt() = default;
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    Int norm() const { return re * re + im * im; }
    GaussInt conj() const { return {re, -im}; }
    friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussInt operator+(const GaussInt& x, const GaussInt& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussInt operator-(const GaussInt& x, const GaussInt& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend bool operator==(const GaussInt& x, const GaussInt& y) {
        return x.re == y.re && x.im == y.im;
    }
};
GaussInt gauss_pow(GaussInt base, unsigned long exp);

// beta = 4 + 9i, norm 97.
inline GaussInt beta97() { return {4, 9}; }
// (a(beta,Z), b(beta,Z)) = (|beta^Z + (-conj beta)^Z| / 2, |beta^Z - (-conj beta)^Z| / 2).
std::pair<Int, Int> beta_components(unsigned long Z);
// Same, from a precomputed beta^Z.
std::pair<Int, Int> beta_components_from_power(const GaussInt& betaZ, unsigned long Z);
unsigned E_of_Z(unsigned long Z);
// max{nu_97(h^E + 1), nu_97(h^E - 1)}, h = a(beta,Z) for even Z and b(beta,Z) for odd Z.
unsigned V_of_Z(unsigned long Z);
unsigned V_from_components(const std::pair<Int, Int>& ab, unsigned long Z);

// Residues h mod c with h^3 = +-1 (mod c), h not in {0, 1, c-1}.
std::vector<std::uint64_t> cube_pm1_residues(std::uint64_t c);

std::vector<std::uint32_t> small_primes(std::uint32_t limit);

std::string to_string(const Int& v);

}  // namespace expsieve
