#include "expsieve/dlog.hpp"

#include <numeric>
#include <stdexcept>

namespace expsieve {

u64 powmod64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

unsigned PrimePowerDlog::max_level(u64 c) {
    unsigned W = 0;
    u128 p = 1;
    while (p * c < (static_cast<u128>(1) << 62)) {
        p *= c;
        ++W;
    }
    return W;
}

PrimePowerDlog::PrimePowerDlog(u64 c, unsigned W) : c_(c), W_(W) {
    if (c < 3 || c % 2 == 0) throw std::invalid_argument("PrimePowerDlog: c must be an odd prime");
    if (W < 1 || W > max_level(c)) throw std::invalid_argument("PrimePowerDlog: c^W must stay below 2^62");
    mod_ = 1;
    for (unsigned i = 0; i < W; ++i) mod_ *= c;
    phi_ = mod_ / c * (c - 1);

    u64 n = c - 1;
    for (u64 p = 2; p * p <= n; ++p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k) fac_.push_back({p, k});
    }
    if (n > 1) fac_.push_back({n, 1});
    if (W > 1) fac_.push_back({c, W - 1});

    // Primitive root mod c that stays primitive mod c^2, hence mod every c^W.
    u64 c2 = c * c;
    for (u64 g = 2;; ++g) {
        bool prim = true;
        for (auto [p, k] : fac_) {
            if (p == c) continue;
            if (powmod64(g, (c - 1) / p, c) == 1) {
                prim = false;
                break;
            }
        }
        if (!prim) continue;
        if (W > 1 && powmod64(g, c - 1, c2) == 1) continue;
        g_ = g % mod_;
        break;
    }
}

u64 PrimePowerDlog::log(u64 h) const {
    h %= mod_;
    if (h % c_ == 0) throw std::invalid_argument("PrimePowerDlog::log: argument not coprime to c");
    // Residues x_i mod p_i^k_i, combined by CRT.
    u64 x = 0, M = 1;
    for (auto [p, k] : fac_) {
        u64 pk = 1;
        for (unsigned i = 0; i < k; ++i) pk *= p;
        u64 cof = phi_ / pk;
        u64 gp = powmod64(g_, cof, mod_);          // order p^k
        u64 hp = powmod64(h, cof, mod_);
        u64 gamma = powmod64(gp, pk / p, mod_);    // order p
        u64 xi = 0, pj = 1;
        for (unsigned j = 0; j < k; ++j) {
            // (gp^-xi * hp)^(p^(k-1-j)) lies in <gamma>.
            u64 inv = powmod64(gp, pk - xi % pk, mod_);
            u64 t = mulmod(inv, hp, mod_);
            u64 e = 1;
            for (unsigned i = 0; i + 1 + j < k; ++i) e *= p;
            t = powmod64(t, e, mod_);
            u64 d = 0, acc = 1;
            while (acc != t) {
                acc = mulmod(acc, gamma, mod_);
                if (++d >= p) throw std::logic_error("PrimePowerDlog::log: digit not found");
            }
            xi += d * pj;
            pj *= p;
        }
        // x = x mod M, xi mod pk  ->  mod M*pk
        u64 Minv = 0;
        {
            // M is coprime to pk; invert M mod pk by extended Euclid.
            long long a = static_cast<long long>(M % pk), m = static_cast<long long>(pk), u = 1, v = 0;
            while (m) {
                long long q = a / m;
                a -= q * m;
                std::swap(a, m);
                u -= q * v;
                std::swap(u, v);
            }
            Minv = static_cast<u64>((u % static_cast<long long>(pk) + static_cast<long long>(pk)) % static_cast<long long>(pk));
        }
        u64 diff = (xi + pk - x % pk) % pk;
        u64 tstep = mulmod(diff, Minv, pk);
        x += M * tstep;
        M *= pk;
    }
    return x % phi_;
}

}  // namespace expsieve
