#include "expsieve/arith.hpp"

#include <algorithm>
#include <numeric>

namespace expsieve {

namespace {

constexpr unsigned long kTrialBound = 1000000;

}  // namespace

long valuation(const Int& M, const Int& x) {
    if (M <= 1) throw DomainError("valuation: base must exceed 1");
    if (x == 0) throw DomainError("valuation: undefined at zero");
    Int t = abs(x);
    if (t < M) return 0;
    // mpz_remove strips every factor M, prime or not.
    return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), M.get_mpz_t()));
}

long valuation(const Int& M, const Rat& x) {
    if (M <= 1) throw DomainError("valuation: base must exceed 1");
    if (x == 0) throw DomainError("valuation: undefined at zero");
    return valuation(M, Int(x.get_num())) - valuation(M, Int(x.get_den()));
}

Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Int pow_ui(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

bool is_probable_prime(const Int& n, int rounds) {
    return mpz_probab_prime_p(n.get_mpz_t(), rounds) > 0;
}

std::vector<std::pair<Int, unsigned>> factor_small(Int n) {
    if (n <= 0) throw DomainError("factor_small: argument must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned k = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++k;
            }
            out.emplace_back(Int(p), k);
        }
    }
    if (n > 1) {
        if (is_probable_prime(n)) {
            out.emplace_back(n, 1);
        } else if (auto pp = is_perfect_power(n); pp && is_probable_prime(pp->first)) {
            out.emplace_back(pp->first, static_cast<unsigned>(pp->second));
        } else {
            throw DomainError("factor_small: cofactor beyond trial bound is not a prime power");
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Int euler_phi(const Int& M) {
    if (M <= 0) throw DomainError("euler_phi: argument must be positive");
    Int phi = 1;
    for (const auto& [p, k] : factor_small(M)) phi *= (p - 1) * pow_ui(p, k - 1);
    return phi;
}

std::uint64_t mult_order(const Int& M, const Int& A) {
    if (M <= 0) throw DomainError("mult_order: modulus must be positive");
    if (gcd(A, M) != 1) throw CoprimalityError("mult_order: base not coprime to modulus");
    if (M == 1) return 1;
    Int n = euler_phi(M);
    Int k = n;
    Int a = mod_nonneg(A, M);
    for (const auto& [p, e] : factor_small(n)) {
        for (unsigned i = 0; i < e; ++i) {
            Int cand = k / p;
            if (powmod(a, cand, M) == 1) {
                k = cand;
            } else {
                break;
            }
        }
    }
    if (!k.fits_ulong_p()) throw DomainError("mult_order: order exceeds 64 bits");
    return k.get_ui();
}

PmOrder pm_order(const Int& M, const Int& A) {
    if (M <= 0) throw DomainError("pm_order: modulus must be positive");
    if (gcd(A, M) != 1) throw CoprimalityError("pm_order: base not coprime to modulus");
    PmOrder out{M, 1, 1};
    if (M <= 2) return out;
    std::uint64_t k = mult_order(M, A);
    if (k % 2 == 0 && powmod(A, Int(static_cast<unsigned long>(k / 2)), M) == M - 1) {
        out.e = k / 2;
        out.sign = -1;
    } else {
        out.e = k;
    }
    return out;
}

std::optional<Int> kth_root_exact(const Int& A, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (A < 0 && k % 2 == 0) return std::nullopt;
    Int r;
    if (mpz_root(r.get_mpz_t(), A.get_mpz_t(), k) != 0) return r;
    return std::nullopt;
}

std::optional<std::pair<Int, unsigned long>> is_perfect_power(const Int& A) {
    if (A < 2) return std::nullopt;
    if (!mpz_perfect_power_p(A.get_mpz_t())) return std::nullopt;
    Int base = A;
    unsigned long exp = 1;
    // Peel prime-degree roots until none remains.
    bool progress = true;
    while (progress) {
        progress = false;
        unsigned long bits = mpz_sizeinbase(base.get_mpz_t(), 2);
        for (unsigned long p = 2; p <= bits; ++p) {
            if (!mpz_probab_prime_p(Int(p).get_mpz_t(), 10)) continue;
            if (auto r = kth_root_exact(base, p)) {
                base = *r;
                exp *= p;
                progress = true;
                break;
            }
        }
    }
    if (exp < 2) return std::nullopt;
    return std::make_pair(base, exp);
}

bool is_square(const Int& A) {
    if (A < 0) return false;
    return mpz_perfect_square_p(A.get_mpz_t()) != 0;
}

Int isqrt(const Int& A) {
    if (A < 0) throw DomainError("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), A.get_mpz_t());
    return r;
}

bool proth_is_prime(const Int& k, unsigned long n) {
    Int N = k * pow_ui(Int(2), n) + 1;
    if (N < 1000 || k >= pow_ui(Int(2), n)) return is_probable_prime(N, 50);
    Int half = (N - 1) / 2;
    for (unsigned long a = 3;; a += 2) {
        int j = mpz_jacobi(Int(a).get_mpz_t(), N.get_mpz_t());
        if (j == 0) return N == a;
        if (j == -1) return powmod(Int(a), half, N) == N - 1;
        if (a > 100000) return is_probable_prime(N, 50);
    }
}

HenselRootPair hensel_cubic_roots(const Int& c, unsigned long l) {
    if (l == 0) throw DomainError("hensel_cubic_roots: level must be positive");
    if (c < 7 || mod_nonneg(c, 3) != 1) throw NoRootError("hensel_cubic_roots: c must be a prime = 1 (mod 3)");
    Int third = (c - 1) / 3;
    Int omega;
    for (unsigned long g = 2;; ++g) {
        omega = powmod(Int(g), third, c);
        if (omega != 1) break;
        if (g > 1000) throw NoRootError("hensel_cubic_roots: no cube root of unity found");
    }
    Int s = mod_nonneg(2 * omega + 1, c);
    if (c - s < s) s = c - s;
    if (mod_nonneg(s * s + 3, c) != 0) throw NoRootError("hensel_cubic_roots: c is not prime");

    // Newton lift of s^2 = -3, doubling precision each step.
    Int modulus = pow_ui(c, l);
    unsigned long prec = 1;
    while (prec < l) {
        prec = std::min(2 * prec, l);
        Int m = pow_ui(c, prec);
        Int inv;
        Int two_s = 2 * s;
        mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), m.get_mpz_t());
        s = mod_nonneg(s - (s * s + 3) * inv, m);
    }
    HenselRootPair out;
    out.c = c;
    out.l = l;
    out.modulus = modulus;
    out.sqrt_m3 = s;
    Int inv2;
    Int two = 2;
    mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), modulus.get_mpz_t());
    out.b_plus = mod_nonneg((s - 1) * inv2, modulus);
    out.b_minus = mod_nonneg((-s - 1) * inv2, modulus);
    out.roots[0] = std::min(out.b_plus, out.b_minus);
    out.roots[1] = std::max(out.b_plus, out.b_minus);
    return out;
}

GaussInt gauss_pow(GaussInt base, unsigned long exp) {
    GaussInt acc{1, 0};
    while (exp) {
        if (exp & 1) acc = acc * base;
        exp >>= 1;
        if (exp) base = base * base;
    }
    return acc;
}

std::pair<Int, Int> beta_components_from_power(const GaussInt& bz, unsigned long Z) {
    // beta^Z = u + iv, (-conj beta)^Z = (-1)^Z (u - iv).
    if (Z % 2 == 0) return {abs(bz.re), abs(bz.im)};
    return {abs(bz.im), abs(bz.re)};
}

std::pair<Int, Int> beta_components(unsigned long Z) {
    if (Z == 0) throw DomainError("beta_components: Z must be positive");
    return beta_components_from_power(gauss_pow(beta97(), Z), Z);
}

unsigned E_of_Z(unsigned long Z) {
    if (Z == 0) throw DomainError("E_of_Z: Z must be positive");
    return static_cast<unsigned>(24 / std::gcd(8UL, 3 * Z - 1));
}

unsigned V_from_components(const std::pair<Int, Int>& ab, unsigned long Z) {
    const Int& h = (Z % 2 == 0) ? ab.first : ab.second;
    unsigned E = E_of_Z(Z);
    const Int c = 97;
    unsigned long K = 16;
    for (;;) {
        Int mod = pow_ui(c, K);
        Int r = powmod(h, Int(E), mod);
        long vp = (r + 1 == mod) ? static_cast<long>(K) : valuation(c, Int(r + 1));
        long vm = (r == 1) ? static_cast<long>(K) : valuation(c, Int(r - 1));
        long v = std::max(vp, vm);
        if (v < static_cast<long>(K)) return static_cast<unsigned>(v);
        K *= 2;
    }
}

unsigned V_of_Z(unsigned long Z) { return V_from_components(beta_components(Z), Z); }

std::vector<std::uint64_t> cube_pm1_residues(std::uint64_t c) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t h = 2; h + 1 < c; ++h) {
        unsigned __int128 h3 = static_cast<unsigned __int128>(h) * h % c * h % c;
        if (h3 == 1 || h3 == c - 1) out.push_back(h);
    }
    return out;
}

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace expsieve
