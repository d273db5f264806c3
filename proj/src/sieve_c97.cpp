#include "expsieve/oracle.hpp"
#include "expsieve/sieves.hpp"

#include <array>

namespace expsieve {

namespace {

// Odd k >= 1 with A a perfect k-th power, with the root.
std::vector<std::pair<unsigned long, Int>> odd_roots(const Int& A) {
    std::vector<std::pair<unsigned long, Int>> out{{1, A}};
    for (unsigned long k = 3; pow_ui(Int(3), k) <= A; k += 2)
        if (auto r = kth_root_exact(A, k)) out.push_back({k, *r});
    return out;
}

// a^x + b^y = 97^z with z <= z_max, (x, y, z) != skip.
std::vector<std::string> first_equation(const Int& a, const Int& b, unsigned long z_max,
                                        const std::array<unsigned long, 3>& skip) {
    std::vector<std::string> out;
    const Int c = 97;
    for (unsigned long z = 1; z <= z_max; ++z) {
        Int cz = pow_ui(c, z);
        unsigned long x = 1;
        for (Int ax = a; ax < cz; ax *= a, ++x) {
            Int v = cz - ax;
            unsigned long y = 0;
            Int p = 1;
            while (p < v) {
                p *= b;
                ++y;
            }
            if (p == v && y > 0 && std::array<unsigned long, 3>{x, y, z} != skip)
                out.push_back(std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
        }
    }
    return out;
}

}  // namespace

C97Report c97_even_delta_check(const C97Config& cfg) {
    if (cfg.Z_lo < 1 || cfg.Z_hi < cfg.Z_lo) throw DomainError("c97_even_delta_check: empty or invalid Z range");
    C97Report rep;
    const Int floor_c = pow_ui(Int(97), cfg.min_power);
    GaussInt bz = gauss_pow(beta97(), cfg.Z_lo);
    const std::pair<Int, Int> expected[] = {{9, 4}, {65, 72}, {297, 908}};
    unsigned table_seen = 0;
    rep.table_matches = true;

    for (unsigned long Z = cfg.Z_lo; Z <= cfg.Z_hi; ++Z) {
        if (Z > cfg.Z_lo) bz = bz * beta97();
        auto ab = beta_components_from_power(bz, Z);
        if (Z <= 3) {
            rep.table.push_back({Z, ab.first, ab.second});
            rep.table_matches = rep.table_matches && ab == expected[Z - 1];
            ++table_seen;
        }
        const bool below_floor = std::min(ab.first, ab.second) < floor_c;
        if (Z >= cfg.Z_min_check && below_floor && rep.min_component_ok) {
            rep.min_component_ok = false;
            rep.min_component_first_fail = Z;
        }
        unsigned V = V_from_components(ab, Z);
        if (V > rep.max_V) {
            rep.max_V = V;
            rep.max_V_at = Z;
        }
        // Brute force wherever the component floor does not already exclude z <= 5.
        if (Z >= 4 && (Z < cfg.Z_min_check || below_floor)) {
            // a^X' = a(beta,Z), b^Y' = b(beta,Z); X' = 1 for even Z, Y' = 1 for odd Z.
            const Int& root_of = Z % 2 == 0 ? ab.second : ab.first;
            for (auto& [k, r] : odd_roots(root_of)) {
                C97SmallZ s;
                s.Z = Z;
                s.a = Z % 2 == 0 ? ab.first : r;
                s.b = Z % 2 == 0 ? r : ab.second;
                s.Xp = Z % 2 == 0 ? 1 : k;
                s.Yp = Z % 2 == 0 ? k : 1;
                if (gcd(s.a, s.b) != 1) continue;
                s.first_eq_solutions = first_equation(s.a, s.b, std::min<unsigned long>(Z, 5), {2 * s.Xp, 2 * s.Yp, Z});
                if (!s.first_eq_solutions.empty()) rep.small_Z_empty = false;
                rep.small_Z.push_back(std::move(s));
            }
        }
        if (Z == 4 || Z == 5) {
            rep.z_gt_Z_pairs.push_back(ab);
            rep.z_gt_Z_counts.push_back(count_N(ab.first, ab.second, Int(97), pow_ui(Int(97), rep.z_gt_Z_cap)).count);
        }
    }
    rep.table_matches = rep.table_matches && table_seen == 3;
    rep.V_ok = rep.max_V <= cfg.V_max;
    return rep;
}

}  // namespace expsieve
