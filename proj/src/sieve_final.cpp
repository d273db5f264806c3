#include "expsieve/bounds.hpp"
#include "expsieve/dlog.hpp"
#include "expsieve/sieves.hpp"

#include <cmath>

namespace expsieve {

std::vector<unsigned long> final_Y_list(const FinalConfig& cfg) {
    if (!cfg.Y_list.empty()) return cfg.Y_list;
    std::vector<unsigned long> Ys;
    for (unsigned long Y = 4; Y <= cfg.Y_u; Y += 6) Ys.push_back(Y);
    return Ys;
}

bool prime_factor_ok(const Int& c, unsigned long N0, unsigned e, unsigned long T) {
    Int v = 3 * Int(N0) * T + pow_ui(c, e);
    for (auto& [p, k] : factor_small(v)) {
        (void)k;
        if (p != c && p % 3 != 1) return false;
    }
    return true;
}

namespace {

// Quadratic-residue tables and the cycle of c^2 powers for each filter prime.
struct ResidueFilter {
    struct Prime {
        u64 p;
        std::vector<char> qr;
        std::vector<u64> c2pow;   // (c^2)^j mod p over one period
        u64 cmod;
    };
    std::vector<Prime> primes;

    explicit ResidueFilter(const Int& c) {
        for (std::uint32_t p : small_primes(2000)) {
            if (p < 5 || mpz_fdiv_ui(c.get_mpz_t(), p) == 0) continue;
            Prime pr;
            pr.p = p;
            pr.qr.assign(p, 0);
            for (u64 x = 0; x < p; ++x) pr.qr[x * x % p] = 1;
            pr.cmod = mpz_fdiv_ui(c.get_mpz_t(), p);
            u64 c2 = pr.cmod * pr.cmod % p, v = 1;
            do {
                pr.c2pow.push_back(v);
                v = v * c2 % p;
            } while (v != 1);
            primes.push_back(std::move(pr));
            if (primes.size() == 48) break;
        }
    }
};

// T values 2, 4, ... (or the override) whose 3 N0 T + c^e has no prime factor = 2 (mod 3).
// Every such factor below sqrt(max value) is sieved out; the cofactor left is 1 or a single
// prime, and it is then 1 (mod 3) because the whole value is.
std::vector<unsigned long> sieve_T(const Int& c, unsigned long N0, unsigned e, unsigned long T0, unsigned long step,
                                   unsigned long count, bool filter) {
    std::vector<unsigned long> out;
    if (!filter) {
        for (unsigned long j = 0; j < count; ++j) out.push_back(T0 + j * step);
        return out;
    }
    Int ce = pow_ui(c, e);
    Int vmax = 3 * Int(N0) * (T0 + (count - 1) * step) + ce;
    std::vector<char> dead(count, 0);
    Int root = isqrt(vmax);
    if (!root.fits_ulong_p() || root > 200000000) {
        // Too large for the table sieve; factor each value.
        for (unsigned long j = 0; j < count; ++j)
            if (prime_factor_ok(c, N0, e, T0 + j * step)) out.push_back(T0 + j * step);
        return out;
    }
    // v(j) = A + j B
    for (std::uint32_t p : small_primes(static_cast<std::uint32_t>(root.get_ui()))) {
        if (p % 3 != 2) continue;
        u64 A = mpz_fdiv_ui(Int(3 * Int(N0) * T0 + ce).get_mpz_t(), p);
        u64 B = mpz_fdiv_ui(Int(3 * Int(N0) * step).get_mpz_t(), p);
        if (B == 0) {
            if (A == 0) std::fill(dead.begin(), dead.end(), 1);
            continue;
        }
        // j = -A / B (mod p)
        u64 Binv = powmod64(B, p - 2, p);
        u64 j0 = (p - A) % p * Binv % p;
        for (u64 j = j0; j < count; j += p) dead[j] = 1;
    }
    for (unsigned long j = 0; j < count; ++j)
        if (!dead[j]) out.push_back(T0 + j * step);
    return out;
}

}  // namespace

std::vector<SieveCandidate> final_sieve(const FinalConfig& cfg, const ScanOptions& opt, FinalStats* stats) {
    const Int& c = cfg.c;
    if (mod_nonneg(c, 3) != 1) throw DomainError("final_sieve: c must be 1 (mod 3)");
    const std::vector<unsigned long> Ys = final_Y_list(cfg);
    const ResidueFilter filt(c);
    const Real lc = rlog(to_real(c));
    const Real ltau = rlog(1 / (1 - 1 / to_real(c)));
    std::vector<FinalStats> per(Ys.size());

    auto body = [&](std::uint64_t idx) {
        std::vector<SieveCandidate> out;
        FinalStats& st = per[idx];
        const unsigned long Y = Ys[idx];
        if (Y < 4 || (Y - 1) % 3 != 0) throw DomainError("final_sieve: Y must be 1 (mod 3) and >= 4");
        ++st.Y_values;
        const unsigned long N = (Y - 1) / 3;
        const unsigned e = static_cast<unsigned>(valuation(c, Int(N)));
        const unsigned long N0 = Int(Int(N) / pow_ui(c, e)).get_ui();
        const unsigned long z2 = std::max<unsigned long>(cfg.z2, e + 1);

        unsigned long T0 = 2, T_step = cfg.T_step.value_or(2), T_count = 0;
        if (cfg.T_range) {
            T0 = cfg.T_range->first;
            if (cfg.T_range->second >= T0) T_count = (cfg.T_range->second - T0) / T_step + 1;
        } else {
            auto [u1, u2] = T_upper_bounds(static_cast<long>(cfg.z2), Y, c, e);
            long long T_u = floor_up(u1 > u2 ? u1 : u2);
            st.T_u_max = std::max<std::uint64_t>(st.T_u_max, T_u > 0 ? T_u : 0);
            if (T_u < 2) {
                ++st.Y_early_exit;
                return out;
            }
            T_count = (static_cast<unsigned long>(T_u) - T0) / T_step + 1;
        }
        if (T_count == 0) return out;
        std::vector<unsigned long> Ts = sieve_T(c, N0, e, T0, T_step, T_count, cfg.prime_factor_filter);
        st.T_values += T_count;
        st.T_filtered += T_count - Ts.size();

        const Int Ym1 = Y - 1;
        const Int c2e = pow_ui(c, 2 * e);
        const Int ce = pow_ui(c, e);
        std::vector<std::uint32_t> alive;
        for (unsigned long T : Ts) {
            unsigned long z_u;
            if (cfg.z_hi) {
                z_u = *cfg.z_hi;
            } else {
                auto C = calC(static_cast<long>(z2), Y, Real(T), c, e);
                if (!C) throw std::logic_error("final_sieve: C(z2, Y, T) undefined");
                Real zu1 = (rlog(6000 * *C) + Real(Y) * ltau) / lc;
                Real zu2 = Real(Y) * rlog(*C) / lc;
                long long zu = floor_up(zu1 > zu2 ? zu1 : zu2);
                if (zu < static_cast<long long>(z2)) continue;
                z_u = static_cast<unsigned long>(zu);
            }
            if (z_u < z2) continue;
            const unsigned long Lz = z_u - z2 + 1;
            st.z_pairs += Lz;

            // D_b(z) = 4 ((Y-1)T + c^2e) c^(2z-2e) - 3 (Y-1)^2, z = z2 + j.
            const Int lead = 4 * (Ym1 * T + c2e);
            const Int tail = 3 * Ym1 * Ym1;
            alive.clear();
            for (std::size_t pi = 0; pi < filt.primes.size(); ++pi) {
                const auto& P = filt.primes[pi];
                const u64 p = P.p, len = P.c2pow.size();
                u64 base = mpz_fdiv_ui(lead.get_mpz_t(), p) * powmod64(P.cmod, 2 * (z2 - e), p) % p;
                u64 neg = (p - mpz_fdiv_ui(tail.get_mpz_t(), p)) % p;
                if (pi == 0) {
                    u64 r = 0;
                    for (std::uint32_t j = 0; j < Lz; ++j) {
                        if (P.qr[(base * P.c2pow[r] + neg) % p]) alive.push_back(j);
                        if (++r == len) r = 0;
                    }
                } else {
                    std::size_t w = 0;
                    for (std::uint32_t j : alive)
                        if (P.qr[(base * P.c2pow[j % len] + neg) % p]) alive[w++] = j;
                    alive.resize(w);
                }
                if (alive.empty()) break;
            }
            st.z_residue_pass += alive.size();

            for (std::uint32_t j : alive) {
                const unsigned long z = z2 + j;
                const Int cz = pow_ui(c, z);
                Int Db = lead * pow_ui(c, 2 * (z - e)) - tail;
                if (Db < 0 || !is_square(Db)) continue;
                ++st.squares;
                Int Bn = isqrt(Db) - (2 * cz + Ym1);
                Int twoY = 2 * Ym1;
                if (Bn <= 0 || Bn % twoY != 0) continue;
                Int b = Bn / twoY;
                Int q = b * b + b + 1;
                if (q % c != 0) continue;
                if (valuation(c, q) != static_cast<long>(z - e)) continue;
                Int K = q / pow_ui(c, z - e);
                // I_b = N (mod c^(z-e)), so I_b / c^e = N0 (mod c); W mod c decides most cases.
                Int Wmod = mod_nonneg(b * (b - 1) * N0 * K + 1, c);
                if (Wmod != 0) continue;
                Int b3 = b * b * b;
                Int Ib = (pow_ui(b, 3 * N) - 1) / (b3 - 1);
                if (Ib % ce != 0) continue;
                Int W = b * (b - 1) * (Ib / ce) * K + 1;
                Int rest = W;
                while (rest % c == 0) rest /= c;
                if (rest != 1) continue;
                out.push_back({"final",
                               {Int(Y), Int(T), Int(z), b, W},
                               {"T<=T_u", "prime factors of 3N0T+c^e = 1 mod 3", "z<=z_u", "D_b square",
                                "2(Y-1) | B_n", "b^2+b+1 = 0 mod c", "nu_c(b^2+b+1)=z-e", "W power of c"}});
            }
        }
        return out;
    };
    auto res = run_scan("final", 0, Ys.size(), body, opt);
    if (stats) {
        *stats = {};
        for (const auto& s : per) {
            stats->Y_values += s.Y_values;
            stats->Y_early_exit += s.Y_early_exit;
            stats->T_values += s.T_values;
            stats->T_filtered += s.T_filtered;
            stats->z_pairs += s.z_pairs;
            stats->z_residue_pass += s.z_residue_pass;
            stats->squares += s.squares;
            stats->T_u_max = std::max(stats->T_u_max, s.T_u_max);
        }
    }
    return res.records;
}

}  // namespace expsieve
