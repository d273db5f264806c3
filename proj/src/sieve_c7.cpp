#include "expsieve/sieves.hpp"

#include <algorithm>

namespace expsieve {

std::vector<BCandidate> lifted_b_candidates(const Int& c, unsigned long z, unsigned e) {
    if (e >= z) throw DomainError("lifted_b_candidates: need e < z");
    HenselRootPair hr = hensel_cubic_roots(c, z - e);
    Int step = hr.modulus;      // c^(z-e)
    Int kmax = pow_ui(c, e);
    std::vector<BCandidate> out;
    for (int eps : {-1, 1}) {
        const Int& base = eps > 0 ? hr.b_plus : hr.b_minus;
        for (Int k = 0; k < kmax; ++k) out.push_back({base + k * step, eps, e, k});
    }
    return out;
}

Int zgap_probe(const Int& c, unsigned long z, unsigned long Z, const Int& b) {
    Int b2 = b * b;
    Int a = pow_ui(c, z) - b;
    return mod_nonneg(powmod(c, Int(Z), b2) - a, b2);
}

std::vector<SieveCandidate> zgap_scan(const ZgapConfig& cfg, const ScanOptions& opt) {
    const Int& c = cfg.c;
    auto body = [&](std::uint64_t z) {
        std::vector<SieveCandidate> out;
        Int cz = pow_ui(c, z);
        // Candidates per e, built once per z.
        std::vector<std::vector<BCandidate>> cands;
        unsigned e_top = static_cast<unsigned>(std::min<std::uint64_t>(z - 1, cfg.e_max));
        for (unsigned e = 0; e <= e_top; ++e) cands.push_back(lifted_b_candidates(c, z, e));
        for (unsigned long Z = z + 1; Z <= z + cfg.gap; ++Z) {
            Int cZ = pow_ui(c, Z);
            for (const auto& per_e : cands)
                for (const auto& bc : per_e) {
                    Int a = cz - bc.b;
                    Int B = cZ - a;
                    if (B % (bc.b * bc.b) == 0)
                        out.push_back({"zgap",
                                       {Int(z), Int(Z), bc.b, Int(bc.e), Int(bc.eps)},
                                       {"b=b_eps+k c^(z-e)", "B=0 mod b^2"}});
                }
        }
        return out;
    };
    if (cfg.z_lo < 1 || cfg.z_hi < cfg.z_lo) throw DomainError("zgap_scan: empty or invalid z range");
    return run_scan("zgap", cfg.z_lo, cfg.z_hi + 1, body, opt).records;
}

bool zfloor_order_ok(const Int& b, const Int& c, unsigned long z, unsigned e) {
    // ord(b mod c) = 3 first; then ord(b mod c^z) = 3 c^f with f = z - min(z, nu_c(b^3 - 1)).
    Int r = mod_nonneg(b, c);
    if (r == 1 || powmod(r, Int(3), c) != 1) return false;
    Int cz = pow_ui(c, z);
    Int t = mod_nonneg(powmod(b, Int(3), cz) - 1, cz);
    unsigned long v = t == 0 ? z : static_cast<unsigned long>(valuation(c, t));
    return z - std::min(z, v) <= e;
}

std::vector<SieveCandidate> zfloor_scan(const ZfloorConfig& cfg, const ScanOptions& opt, ZfloorStats* stats) {
    const Int& c = cfg.c;
    std::vector<unsigned long> Ys = cfg.Y_list;
    if (Ys.empty())
        for (unsigned long Y = 4; Y <= cfg.Y_u; Y += 6) Ys.push_back(Y);
    if (cfg.z_lo < 1 || cfg.z_hi < cfg.z_lo) throw DomainError("zfloor_scan: empty or invalid z range");

    std::vector<ZfloorStats> per_z(cfg.z_hi - cfg.z_lo + 1);
    auto body = [&](std::uint64_t z) {
        std::vector<SieveCandidate> out;
        ZfloorStats& st = per_z[z - cfg.z_lo];
        Int cz = pow_ui(c, z);
        Int mod = pow_ui(c, z + cfg.target_gap);
        for (unsigned long Y : Ys) {
            if (Y < 4 || (Y - 1) % 3 != 0) throw DomainError("zfloor_scan: Y must be 1 (mod 3) and >= 4");
            unsigned e = static_cast<unsigned>(valuation(c, Int((Y - 1) / 3)));
            if (e >= z) continue;   // the lifted form needs z > e
            for (const auto& bc : lifted_b_candidates(c, z, e)) {
                ++st.pairs;
                if (!zfloor_order_ok(bc.b, c, z, e)) {
                    ++st.order_skipped;
                    continue;
                }
                ++st.tested;
                Int a = cz - bc.b;
                Int C = mod_nonneg(a + powmod(bc.b, Int(Y), mod), mod);
                if (C == 0)
                    out.push_back({"zfloor",
                                   {Int(z), Int(Y), bc.b, Int(e), Int(bc.eps)},
                                   {"b=b_eps+k c^(z-e)", "order 3c^f, f<=e", "C=0 mod c^(z+gap)"}});
            }
        }
        return out;
    };
    auto res = run_scan("zfloor", cfg.z_lo, cfg.z_hi + 1, body, opt);
    if (stats) {
        *stats = {};
        for (const auto& s : per_z) {
            stats->pairs += s.pairs;
            stats->order_skipped += s.order_skipped;
            stats->tested += s.tested;
        }
    }
    return res.records;
}

}  // namespace expsieve
