#pragma once

#include "expsieve/arith.hpp"
#include "expsieve/scan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace expsieve {

// ---- Steps 1-3: x > 1 or y > 1 ----

// [z, n', t] with 4 t c^(z-n') - 3 a square, t passing the parity / mod 9 / prime-class sieve
// and the per-z cap t <= (1 + c^(-z/2) + c^(-z)) c^n'. Outer index n'.
// z_u_of: per-n' z cap (case (ii)); otherwise z_u for every n'.
struct Step1Config {
    Int c = 7;
    unsigned long z_u = 15;
    unsigned nprime_max = 5;
    std::vector<unsigned long> z_u_of;   // indexed by n' when non-empty
};
std::vector<SieveCandidate> step1(const Step1Config& cfg, const ScanOptions& opt = {});

// t <= floor((1 + c^(-m/2) + c^(-m)) c^n'), m = max(n', 1), decided exactly.
unsigned long step1_t_upper(const Int& c, unsigned nprime);
bool step1_check4(unsigned long t);
// t <= (1 + c^(-z/2) + c^(-z)) c^n', decided exactly.
bool step1_check5(const Int& c, unsigned long t, unsigned nprime, unsigned long z);

// [a, b, x, y, z, n'] with a^x + b^y = c^z. Outer index: position in list1.
std::vector<SieveCandidate> step2(const Int& c, const std::vector<SieveCandidate>& list1, unsigned long x_l = 3,
                                  const ScanOptions& opt = {});

struct Step3Caps {
    long long X_u = 0, Y_u = 0;
    long long Delta_u = 0, Delta_d = 0;
};
struct Step3Constants {
    long long K1_small = 9937;   // m < c
    long long K1_large = 2875;   // m > c
    long long K3_small = 225762; // m < c, z <= 12
    long long K3_large = 130636; // m > c, z <= 12
    long long K3_z13 = 69816;    // z >= 13
    unsigned E = 3;
};
Step3Caps step3_caps(const Int& c, const SieveCandidate& entry, const Step3Constants& k);

// Both Delta-sign branches; returns [a, b, x, y, z, X, Y, Z] whenever a^X + b^Y = c^Z.
// The fast path reduces a^X = -b^Y (mod c^W) to discrete logs and tests small powers exactly.
std::vector<SieveCandidate> step3_entry(const Int& c, const SieveCandidate& entry, const Step3Caps& caps);
// The reference loop as stated, with an exact power test for every (X, Y). Only for small caps.
std::vector<SieveCandidate> step3_entry_literal(const Int& c, const SieveCandidate& entry, const Step3Caps& caps);
std::vector<SieveCandidate> step3(const Int& c, const std::vector<SieveCandidate>& list2, const Step3Constants& k,
                                  const ScanOptions& opt = {});

// ---- lifted roots ----

// b = b_eps + k c^(z-e), k < c^e, for e = 0..e_max and both roots of U^2+U+1 mod c^(z-e).
struct BCandidate {
    Int b;
    int eps = 0;         // +1: 2b+1 = sqrt(-3), -1: 2b+1 = -sqrt(-3) (mod c^(z-e))
    unsigned e = 0;
    Int k;
};
std::vector<BCandidate> lifted_b_candidates(const Int& c, unsigned long z, unsigned e);

// ---- Z gap and z floor scans (c = 7 system a + b = c^z, a + b^Y = c^Z) ----

struct ZgapConfig {
    Int c = 7;
    unsigned long z_lo = 5, z_hi = 30;   // inclusive
    unsigned gap = 10;
    unsigned e_max = 3;
};
// Reports [z, Z, b, e, eps] with c^Z - (c^z - b) = 0 mod b^2. Outer index z.
std::vector<SieveCandidate> zgap_scan(const ZgapConfig& cfg, const ScanOptions& opt = {});
// (c^Z - (c^z - b)) mod b^2.
Int zgap_probe(const Int& c, unsigned long z, unsigned long Z, const Int& b);

struct ZfloorConfig {
    Int c = 7;
    unsigned long z_lo = 5, z_hi = 30;
    unsigned long Y_u = 4906;
    std::vector<unsigned long> Y_list;   // overrides Y = 4, 10, ..., Y_u when non-empty
    unsigned target_gap = 11;
};
struct ZfloorStats {
    std::uint64_t pairs = 0, order_skipped = 0, tested = 0;
};
// Reports [z, Y, b, e, eps] with a + b^Y = 0 mod c^(z+gap). Outer index z.
std::vector<SieveCandidate> zfloor_scan(const ZfloorConfig& cfg, const ScanOptions& opt = {},
                                        ZfloorStats* stats = nullptr);
// ord(b mod c^z) = 3 c^f with f <= e.
bool zfloor_order_ok(const Int& b, const Int& c, unsigned long z, unsigned e);

// ---- final sieve ----

struct FinalConfig {
    Int c = 7;
    unsigned long Y_u = 2596;
    unsigned long z2 = 1500;
    std::vector<unsigned long> Y_list;            // overrides Y = 4, 10, ..., Y_u
    std::optional<std::pair<unsigned long, unsigned long>> T_range;   // overrides [2, T_u] (step 2 kept)
    std::optional<unsigned long> T_step;          // default 2
    std::optional<unsigned long> z_hi;            // overrides z_u
    bool prime_factor_filter = true;
};
struct FinalStats {
    std::uint64_t Y_values = 0, Y_early_exit = 0;
    std::uint64_t T_values = 0, T_filtered = 0;
    std::uint64_t z_pairs = 0, z_residue_pass = 0, squares = 0;
    std::uint64_t T_u_max = 0;
};
// Survivors [Y, T, z, b, W] where W is a power of c. Outer index: position in the Y list.
std::vector<SieveCandidate> final_sieve(const FinalConfig& cfg, const ScanOptions& opt = {},
                                        FinalStats* stats = nullptr);
// Y = 4, 10, ..., Y_u or the override list.
std::vector<unsigned long> final_Y_list(const FinalConfig& cfg);
// Every prime factor of 3 N0 T + c^e other than c is 1 (mod 3).
bool prime_factor_ok(const Int& c, unsigned long N0, unsigned e, unsigned long T);

// ---- c = 97, even Delta ----

struct C97Config {
    unsigned long Z_lo = 1, Z_hi = 2000;
    unsigned min_power = 5;       // min component >= 97^min_power once Z >= Z_min_check
    unsigned long Z_min_check = 10;
    unsigned V_max = 3;
};
struct C97Row {
    unsigned long Z = 0;
    Int a, b;
};
struct C97SmallZ {
    unsigned long Z = 0;
    Int a, b;            // bases with a^X' = a(beta,Z), b^Y' = b(beta,Z)
    unsigned long Xp = 0, Yp = 0;
    std::vector<std::string> first_eq_solutions;   // a^x + b^y = 97^z, z <= 5, other than (2X', 2Y', Z)
};
struct C97Report {
    std::vector<C97Row> table;                  // Z = 1, 2, 3
    bool table_matches = false;                 // all three rows present and equal to the known values
    bool min_component_ok = true;
    unsigned long min_component_first_fail = 0;
    unsigned max_V = 0;
    unsigned long max_V_at = 0;
    bool V_ok = true;
    std::vector<C97SmallZ> small_Z;             // Z in [4, 9] and any later Z below the component floor
    std::vector<std::pair<Int, Int>> z_gt_Z_pairs;   // Z in {4, 5}
    std::vector<std::size_t> z_gt_Z_counts;          // solutions of a^x + b^y = 97^z below 97^z_gt_Z_cap
    unsigned long z_gt_Z_cap = 40;
    bool small_Z_empty = true;
};
C97Report c97_even_delta_check(const C97Config& cfg);

// ---- family pipeline ----

struct NagellHit {
    unsigned long m = 0;
    Int c;
    unsigned long z = 0;
};
// m^2 + m + 1 = c^z with c prime and z >= 2, m <= m_max.
std::vector<NagellHit> nagell_check(unsigned long m_max = 1000000);

struct StageRow {
    std::string stage;
    std::string status;    // "passed", "failed", "warning", "skipped", "trusted-external"; only "failed" fails
    std::string detail;
};
struct FamilyConfig {
    unsigned r = 6;
    bool full = false;
    unsigned long z_scan_lo = 5, z_scan_hi = 12;
    unsigned long Y_desk_cap = 400;
    unsigned long nagell_m_max = 1000000;
};
struct FamilyReport {
    unsigned r = 0;
    Int c;
    std::vector<StageRow> stages;
    std::vector<SieveCandidate> survivors;
    bool ok() const;
};
FamilyReport family_pipeline(const FamilyConfig& cfg, const ScanOptions& opt = {});

}  // namespace expsieve
