#pragma once

#include "expsieve/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace expsieve {

// X^2 - q^k = Y^n with X > 0, gcd(X, Y) = 1, k >= 1, n >= 3.
struct LebesgueNagellEntry {
    unsigned q = 0;
    Int X, Y;
    unsigned k = 0, n = 0;
    std::string label;
};
struct TableIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool verify_entry(const LebesgueNagellEntry& e);
// Embedded lists for q = 7 and q = 97, re-verified on first access.
const std::vector<LebesgueNagellEntry>& lebesgue_nagell_table();
// Entries for q, optionally restricted to the sign of Y.
std::vector<LebesgueNagellEntry> lebesgue_lookup(unsigned q, std::optional<int> Y_sign = std::nullopt);

// Primes c = 3 * 2^r + 1 with r in the supported list.
struct FamilyPrime {
    unsigned r = 0;
    Int c;
};
const std::vector<unsigned>& family_r_list();
bool is_supported_r(unsigned r);
Int family_c(unsigned r);
// Every listed r <= r_max with c primality-checked; r_max <= 3912.
std::vector<FamilyPrime> family_primes(unsigned r_max);
// Independent check: all r in [1, r_max] with 3 * 2^r + 1 prime.
std::vector<unsigned> scan_family_r(unsigned r_max);

// Per-r sieve parameters: Y bounds and the z lower bound used by the final sieve.
struct YBoundRow {
    unsigned r = 0;
    long long Y_u1 = 0, Y_u2 = 0;
    unsigned z2 = 0;
};
const std::vector<YBoundRow>& ybound_rows();
std::optional<YBoundRow> ybound_row(unsigned r);

// Per-r z caps for the max{x,y} >= 2 branch.
struct ZCapRow {
    unsigned r = 0;
    unsigned nprime = 0;
    unsigned z_u3 = 0;
    long long z_n = 0;
};
const std::vector<ZCapRow>& zcap_rows();
std::optional<ZCapRow> zcap_row(unsigned r);

}  // namespace expsieve
