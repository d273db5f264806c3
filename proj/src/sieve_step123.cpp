#include "expsieve/bounds.hpp"
#include "expsieve/dlog.hpp"
#include "expsieve/sieves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

namespace expsieve {

namespace {

// t c^w  (<, <=)  c^(n'+w) + c^(n'+w/2) + c^n'.
bool below_cap(const Int& c, const Int& t, unsigned nprime, unsigned long w, bool strict) {
    Int cn = pow_ui(c, nprime);
    Int S = t * pow_ui(c, w) - cn * pow_ui(c, w) - cn;
    if (w % 2 == 0) {
        Int R = cn * pow_ui(c, w / 2);
        return strict ? S < R : S <= R;
    }
    if (S < 0) return true;
    // R = c^(n' + (w-1)/2) sqrt(c) is irrational, so strictness does not matter.
    return S * S < pow_ui(c, 2 * nprime + w);
}

// Quadratic-residue prefilter for 4 t c^k - 3 over a run of k.
struct SquareFilter {
    std::vector<std::uint32_t> primes;
    std::vector<std::vector<char>> qr;

    explicit SquareFilter(const Int& c) {
        for (std::uint32_t p : small_primes(400)) {
            if (p < 5 || Int(p) == c) continue;
            std::vector<char> t(p, 0);
            for (std::uint64_t x = 0; x < p; ++x) t[x * x % p] = 1;
            primes.push_back(p);
            qr.push_back(std::move(t));
            if (primes.size() == 40) break;
        }
    }
};

}  // namespace

unsigned long step1_t_upper(const Int& c, unsigned nprime) {
    unsigned long m = std::max(nprime, 1u);
    Int lo = 0, hi = 2 * pow_ui(c, nprime) + 2;   // below_cap(lo) holds, below_cap(hi) fails
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (below_cap(c, mid, nprime, m, false))
            lo = mid;
        else
            hi = mid;
    }
    return lo.get_ui();
}

bool step1_check4(unsigned long t) {
    if (t % 2 == 0 || t % 9 == 0) return false;
    for (auto& [p, k] : factor_small(Int(t))) {
        (void)k;
        if (p != 2 && p % 3 == 2) return false;
    }
    return true;
}

bool step1_check5(const Int& c, unsigned long t, unsigned nprime, unsigned long z) {
    // For z > 2n' the excess over c^n' lies in (0, 1).
    if (z > 2ul * nprime) return Int(t) <= pow_ui(c, nprime);
    // Non-strict: equality would need a = c^(z/2), so this only keeps extra candidates.
    return below_cap(c, Int(t), nprime, z, false);
}

std::vector<SieveCandidate> step1(const Step1Config& cfg, const ScanOptions& opt) {
    if (cfg.c < 7) throw DomainError("step1: c must be a prime >= 7");
    const Int& c = cfg.c;
    SquareFilter filt(c);
    std::vector<std::uint64_t> cmod(filt.primes.size());
    for (std::size_t i = 0; i < filt.primes.size(); ++i) cmod[i] = mpz_fdiv_ui(c.get_mpz_t(), filt.primes[i]);

    auto body = [&](std::uint64_t np) {
        std::vector<SieveCandidate> out;
        unsigned nprime = static_cast<unsigned>(np);
        unsigned long z_u = cfg.z_u_of.empty() ? cfg.z_u : cfg.z_u_of.at(nprime);
        unsigned long z_lo = std::max(1u, nprime);
        if (z_u < z_lo) return out;
        unsigned long t_u = step1_t_upper(c, nprime);
        for (unsigned long t = 1; t <= t_u; ++t) {
            if (!step1_check4(t)) continue;
            // residues of 4 t c^(z-n') mod each filter prime
            std::vector<std::uint64_t> r(filt.primes.size());
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::uint64_t p = filt.primes[i];
                r[i] = 4 * (t % p) % p * powmod64(cmod[i], z_lo - nprime, p) % p;
            }
            for (unsigned long z = z_lo; z <= z_u; ++z) {
                bool pass = true;
                for (std::size_t i = 0; i < r.size() && pass; ++i) {
                    std::uint64_t p = filt.primes[i];
                    pass = filt.qr[i][(r[i] + p - 3 % p) % p];
                }
                if (pass && step1_check5(c, t, nprime, z)) {
                    Int v = 4 * Int(t) * pow_ui(c, z - nprime) - 3;
                    if (is_square(v))
                        out.push_back({"list1", {Int(z), Int(nprime), Int(t)}, {"check3", "check4", "check5"}});
                }
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] * cmod[i] % filt.primes[i];
            }
        }
        return out;
    };
    auto res = run_scan("step1", 0, cfg.nprime_max + 1ull, body, opt);
    auto out = std::move(res.records);
    std::sort(out.begin(), out.end(), [](const SieveCandidate& a, const SieveCandidate& b) { return a.tuple < b.tuple; });
    return out;
}

std::vector<SieveCandidate> step2(const Int& c, const std::vector<SieveCandidate>& list1, unsigned long x_l,
                                  const ScanOptions& opt) {
    if (!c.fits_ulong_p()) throw DomainError("step2: c too large");
    const auto res_list = cube_pm1_residues(c.get_ui());
    const std::set<std::uint64_t> R(res_list.begin(), res_list.end());
    auto in_R = [&](const Int& h) { return R.count(mpz_fdiv_ui(h.get_mpz_t(), c.get_ui())) > 0; };

    auto body = [&](std::uint64_t idx) {
        std::vector<SieveCandidate> out;
        const auto& tp = list1.at(idx).tuple;
        unsigned long z = tp[0].get_ui(), nprime = tp[1].get_ui();
        const Int& t = tp[2];
        Int D = pow_ui(c, z - nprime);
        Int m_l = isqrt(D / 2);
        while (2 * m_l * m_l < D) ++m_l;
        if (m_l < 2) m_l = 2;
        Int A = isqrt(4 * t * D - 3);
        Int cz = pow_ui(c, z);
        Int a_max;
        mpz_root(a_max.get_mpz_t(), cz.get_mpz_t(), x_l);
        for (int da : {-1, 1}) {
            Int a = (A - da) / 2;
            if (a < m_l || a > a_max || !in_R(a)) continue;
            if ((a * a + da * a + 1) % D != 0) continue;
            unsigned long x_max = 0;
            for (Int p = a; p <= cz; p *= a) ++x_max;
            for (unsigned long x = x_l; x <= x_max; ++x) {
                Int v = cz - pow_ui(a, x);
                if (v <= 0) continue;
                for (unsigned long y = 1; y <= x; ++y) {
                    auto b = kth_root_exact(v, y);
                    if (!b) continue;
                    if (*b < m_l || !in_R(*b)) continue;
                    Int b3 = powmod(*b, Int(3), D);
                    if (b3 != 1 % D && b3 != mod_nonneg(Int(-1), D)) continue;
                    out.push_back({"list2",
                                   {a, *b, Int(x), Int(y), Int(z), Int(nprime)},
                                   {"a-range", "a-residue", "a-congruence", "b-power", "b-residue", "b-cube"}});
                }
            }
        }
        return out;
    };
    return run_scan("step2", 0, list1.size(), body, opt).records;
}

// ---- Step 3 ----

namespace {

long double ld_log(const Int& v) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(static_cast<long double>(m)) + static_cast<long double>(e) * std::log(2.0L);
}

const u64 kCheckPrimes[] = {2305843009213693951ull, 4611686018427387847ull, 4611686018427387817ull};

// Z with a^X + b^Y = c^Z, or none. Every rejection below is exact.
std::optional<unsigned long> power_of_c(const Int& a, unsigned long X, const Int& b, unsigned long Y, const Int& c) {
    long double A = X * ld_log(a), B = Y * ld_log(b);
    long double hi = std::max(A, B), lo = std::min(A, B);
    long double S = hi + std::log1p(std::exp(lo - hi));
    long double Zf = S / ld_log(c);
    long double Zr = std::round(Zf);
    if (std::fabs(Zf - Zr) > 1e-6L || Zr < 1) return std::nullopt;
    unsigned long Z = static_cast<unsigned long>(Zr);
    for (u64 p : kCheckPrimes) {
        u64 ap = mpz_fdiv_ui(a.get_mpz_t(), p), bp = mpz_fdiv_ui(b.get_mpz_t(), p), cp = mpz_fdiv_ui(c.get_mpz_t(), p);
        u64 lhs = (powmod64(ap, X, p) + powmod64(bp, Y, p)) % p;
        if (lhs != powmod64(cp, Z, p)) return std::nullopt;
    }
    if (pow_ui(a, X) + pow_ui(b, Y) != pow_ui(c, Z)) return std::nullopt;
    return Z;
}

struct Entry {
    Int a, b;
    unsigned long x, y, z, nprime;
};

Entry parse_entry(const SieveCandidate& e) {
    if (e.tuple.size() != 6) throw DomainError("step3: list2 entries are [a,b,x,y,z,n']");
    return {e.tuple[0], e.tuple[1], e.tuple[2].get_ui(), e.tuple[3].get_ui(), e.tuple[4].get_ui(), e.tuple[5].get_ui()};
}

long long floor_div(long long p, long long q) {
    long long r = p / q;
    if ((p % q != 0) && ((p < 0) != (q < 0))) --r;
    return r;
}
long long ceil_div(long long p, long long q) { return -floor_div(-p, q); }

// Case where Delta = s*T - r*S > 0 with S the outer variable and T the inner one:
// case 1 has (S, T, r, s) = (X, Y, y, x) with caps (X_u, Y_u); case 2 swaps the roles.
struct Branch {
    long long r, s, S_u, T_u;
};

long long branch_outer_max(const Branch& br, const Step3Caps& k) {
    long long v = floor_div(br.s * br.T_u - k.Delta_d, br.r);
    return std::min(br.S_u, v);
}

long long branch_kmax(const Branch& br, const Step3Caps& k, long long S) {
    long long lim = std::min(k.Delta_u, br.s * br.T_u - br.r * S);
    return floor_div(lim, k.Delta_d);
}

SieveCandidate survivor(const Entry& e, unsigned long X, unsigned long Y, unsigned long Z, const char* which) {
    return {"survivor",
            {e.a, e.b, Int(e.x), Int(e.y), Int(e.z), Int(X), Int(Y), Int(Z)},
            {which, "Delta=0 mod E c^n'", "a^X+b^Y=c^Z"}};
}

u64 gcd64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Inverse of a mod m (gcd 1), m >= 1.
u64 inv_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr) {
        __int128 q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

// Solutions of alpha*V = beta (mod M) as V = v (mod M/g), precomputed for fixed alpha.
struct LinCong {
    u64 M, g, Mg, inv;
    LinCong(u64 alpha, u64 M_) : M(M_) {
        g = gcd64(alpha % M, M);
        Mg = M / g;
        inv = inv_mod((alpha % M) / g, Mg);
    }
    std::optional<u64> solve(u64 beta) const {
        beta %= M;
        if (beta % g) return std::nullopt;
        return mulmod(beta / g, inv, Mg);
    }
};

std::mutex dlog_mu;
const PrimePowerDlog& dlog_for(u64 c) {
    static std::map<u64, std::unique_ptr<PrimePowerDlog>> cache;
    std::lock_guard<std::mutex> lk(dlog_mu);
    auto& p = cache[c];
    if (!p) p = std::make_unique<PrimePowerDlog>(c, PrimePowerDlog::max_level(c));
    return *p;
}

}  // namespace

Step3Caps step3_caps(const Int& c, const SieveCandidate& entry, const Step3Constants& k) {
    Entry e = parse_entry(entry);
    Int m = std::min(e.a, e.b);
    long long K1 = m < c ? k.K1_small : k.K1_large;
    long long K3 = e.z <= 12 ? (m < c ? k.K3_small : k.K3_large) : k.K3_z13;
    Real lc = rlog(to_real(c));
    Step3Caps caps;
    caps.X_u = floor_up(Real(K1) * rlog(to_real(e.b)) * lc);
    caps.Y_u = floor_up(Real(K1) * rlog(to_real(e.a)) * lc);
    caps.Delta_u = std::min<long long>(floor_up(Real(K1) * lc * lc * Real(e.z)), K3);
    caps.Delta_d = static_cast<long long>(k.E) * pow_ui(c, e.nprime).get_si();
    return caps;
}

std::vector<SieveCandidate> step3_entry_literal(const Int& c, const SieveCandidate& entry, const Step3Caps& k) {
    Entry e = parse_entry(entry);
    const long long x = e.x, y = e.y, Dd = k.Delta_d;
    std::vector<SieveCandidate> out;
    // Case Delta = xY - yX.
    long long Xmax = std::min(k.X_u, floor_div(x * k.Y_u - Dd, y));
    for (long long X = 1; X <= Xmax; ++X) {
        long long kmax = floor_div(std::min(k.Delta_u, x * k.Y_u - y * X), Dd);
        for (long long kk = 1; kk <= kmax; ++kk) {
            long long D1 = y * X + kk * Dd;
            if (D1 % x != 0) continue;
            long long Y = D1 / x;
            if (auto Z = power_of_c(e.a, X, e.b, Y, c)) out.push_back(survivor(e, X, Y, *Z, "Delta=xY-yX"));
        }
    }
    // Case Delta = yX - xY.
    long long Ymax = std::min(k.Y_u, floor_div(y * k.X_u - Dd, x));
    for (long long Y = 1; Y <= Ymax; ++Y) {
        long long kmax = floor_div(std::min(k.Delta_u, y * k.X_u - x * Y), Dd);
        for (long long kk = 1; kk <= kmax; ++kk) {
            long long D2 = x * Y + kk * Dd;
            if (D2 % y != 0) continue;
            long long X = D2 / y;
            if (auto Z = power_of_c(e.a, X, e.b, Y, c)) out.push_back(survivor(e, X, Y, *Z, "Delta=yX-xY"));
        }
    }
    return out;
}

std::vector<SieveCandidate> step3_entry(const Int& c, const SieveCandidate& entry, const Step3Caps& k) {
    if (!c.fits_ulong_p() || c < 3) throw DomainError("step3: c must be a small odd prime");
    Entry e = parse_entry(entry);
    const u64 cu = c.get_ui();
    const PrimePowerDlog& dl = dlog_for(cu);
    const u64 mod = dl.modulus(), phi = dl.order();
    const u64 la = dl.log(mpz_fdiv_ui(e.a.get_mpz_t(), mod));
    const u64 lb = dl.log(mpz_fdiv_ui(e.b.get_mpz_t(), mod));
    const u64 lm1 = phi / 2;
    const long long x = e.x, y = e.y, Dd = k.Delta_d;
    Int cW = pow_ui(c, dl.level());

    // (X, Y) -> which branch admitted it
    std::map<std::pair<long long, long long>, const char*> cand;

    auto in_case1 = [&](long long X, long long Y) {
        if (X < 1 || Y < 1 || X > k.X_u || Y > k.Y_u) return false;
        long long d = x * Y - y * X;
        return d > 0 && d % Dd == 0 && d <= k.Delta_u;
    };
    auto in_case2 = [&](long long X, long long Y) {
        if (X < 1 || Y < 1 || X > k.X_u || Y > k.Y_u) return false;
        long long d = y * X - x * Y;
        return d > 0 && d % Dd == 0 && d <= k.Delta_u;
    };

    // Small region: a^X < c^W and b^Y < c^W, so c^Z < 2 c^W and the congruence mod c^W is unavailable.
    {
        long long Xs = 0, Ys = 0;
        for (Int p = e.a; p < cW; p *= e.a) ++Xs;
        for (Int p = e.b; p < cW; p *= e.b) ++Ys;
        for (long long X = 1; X <= std::min(Xs, k.X_u); ++X)
            for (long long Y = 1; Y <= std::min(Ys, k.Y_u); ++Y) {
                if (in_case1(X, Y)) cand.emplace(std::make_pair(X, Y), "Delta=xY-yX");
                if (in_case2(X, Y)) cand.emplace(std::make_pair(X, Y), "Delta=yX-xY");
            }
    }

    // Large region: c^Z >= c^W forces X la = lm1 + Y lb (mod phi).
    auto run_branch = [&](bool first) {
        // Outer S, inner T: case 1 (S,T) = (X,Y), case 2 (S,T) = (Y,X).
        Branch br = first ? Branch{y, x, k.X_u, k.Y_u} : Branch{x, y, k.Y_u, k.X_u};
        const u64 lS = first ? la : lb, lT = first ? lb : la;
        // first: T lb = S la - lm1; second: T la = S lb + lm1.
        LinCong dlc(lT, phi);
        // s T = r S (mod Dd)
        LinCong dd(static_cast<u64>(br.s), static_cast<u64>(Dd));
        const u64 m1 = dlc.Mg, m2 = dd.Mg;
        const u64 g12 = gcd64(m1 % m2 == 0 ? m2 : m1 % m2, m2);
        const u64 m2g = m2 / g12;
        const u64 inv12 = inv_mod((m1 / g12) % m2g, m2g);
        const u128 L = static_cast<u128>(m1 / g12) * m2;

        long long Smax = branch_outer_max(br, k);
        u64 beta = first ? (phi - lm1) % phi : lm1 % phi;   // value at S = 0
        for (long long S = 1; S <= Smax; ++S) {
            beta = (beta + lS) % phi;
            long long kmax = branch_kmax(br, k, S);
            if (kmax < 1) continue;
            long long lo = ceil_div(br.r * S + Dd, br.s);
            long long hi = floor_div(br.r * S + kmax * Dd, br.s);
            if (lo > hi) continue;
            auto v1 = dlc.solve(beta);
            if (!v1) continue;
            u64 rS = static_cast<u64>((br.r % Dd) * (S % Dd) % Dd);
            auto v2 = dd.solve(rS);
            if (!v2) continue;
            // CRT: V = v1 (mod m1), V = v2 (mod m2).
            u64 diff = (*v2 % m2 + m2 - *v1 % m2) % m2;
            if (diff % g12) continue;
            u64 t = mulmod(diff / g12, inv12, m2g);
            u128 v = static_cast<u128>(*v1) + static_cast<u128>(m1) * t;
            v %= L;
            u128 ulo = static_cast<u128>(lo);
            u128 first_v = v >= ulo ? v : v + ((ulo - v + L - 1) / L) * L;
            for (u128 T = first_v; T <= static_cast<u128>(hi); T += L) {
                long long Tv = static_cast<long long>(T);
                auto key = first ? std::make_pair(S, Tv) : std::make_pair(Tv, S);
                cand.emplace(key, first ? "Delta=xY-yX" : "Delta=yX-xY");
            }
        }
    };
    run_branch(true);
    run_branch(false);

    std::vector<SieveCandidate> out;
    for (const auto& [xy, which] : cand) {
        if (auto Z = power_of_c(e.a, xy.first, e.b, xy.second, c)) out.push_back(survivor(e, xy.first, xy.second, *Z, which));
    }
    return out;
}

std::vector<SieveCandidate> step3(const Int& c, const std::vector<SieveCandidate>& list2, const Step3Constants& k,
                                  const ScanOptions& opt) {
    auto body = [&](std::uint64_t idx) {
        const auto& e = list2.at(idx);
        return step3_entry(c, e, step3_caps(c, e, k));
    };
    return run_scan("step3", 0, list2.size(), body, opt).records;
}

}  // namespace expsieve
