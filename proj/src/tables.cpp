#include "expsieve/tables.hpp"

#include <algorithm>

namespace expsieve {

bool verify_entry(const LebesgueNagellEntry& e) {
    if (e.X <= 0 || e.k < 1 || e.n < 3) return false;
    if (gcd(e.X, e.Y) != 1) return false;
    return e.X * e.X - pow_ui(Int(e.q), e.k) == pow_ui(e.Y, e.n);
}

const std::vector<LebesgueNagellEntry>& lebesgue_nagell_table() {
    static const std::vector<LebesgueNagellEntry> table = [] {
        std::vector<LebesgueNagellEntry> t = {
            {7, 7792, 393, 5, 3, "q=7 #1"},
            {7, 10, -3, 3, 5, "q=7 #2"},
            {7, 76, 15, 4, 3, "q=7 #3"},
            {7, 9, 2, 2, 5, "q=7 #4"},
            {97, 175784, 3135, 4, 3, "q=97 #1"},
            {97, 15, 2, 1, 7, "q=97 #2"},
            {97, 77, 18, 1, 3, "q=97 #3"},
        };
        for (const auto& e : t)
            if (!verify_entry(e)) throw TableIntegrityError("Lebesgue-Nagell entry fails: " + e.label);
        return t;
    }();
    return table;
}

std::vector<LebesgueNagellEntry> lebesgue_lookup(unsigned q, std::optional<int> Y_sign) {
    if (q != 7 && q != 97) throw DomainError("lebesgue_lookup: only q = 7 and q = 97 are tabulated");
    std::vector<LebesgueNagellEntry> out;
    for (const auto& e : lebesgue_nagell_table()) {
        if (e.q != q) continue;
        if (Y_sign && sgn(e.Y) != *Y_sign) continue;
        out.push_back(e);
    }
    return out;
}

const std::vector<unsigned>& family_r_list() {
    static const std::vector<unsigned> r = {1,   2,   5,   6,   8,   12,  18,   30,   36,   41,   66,   189,
                                            201, 209, 276, 353, 408, 438, 534, 2208, 2816, 3168, 3189, 3912};
    return r;
}

bool is_supported_r(unsigned r) {
    const auto& l = family_r_list();
    return std::binary_search(l.begin(), l.end(), r);
}

Int family_c(unsigned r) { return 3 * pow_ui(Int(2), r) + 1; }

std::vector<FamilyPrime> family_primes(unsigned r_max) {
    if (r_max > 3912) throw DomainError("family_primes: r_max must not exceed 3912");
    std::vector<FamilyPrime> out;
    for (unsigned r : family_r_list()) {
        if (r > r_max) break;
        Int c = family_c(r);
        if (!proth_is_prime(Int(3), r)) throw TableIntegrityError("listed family value is composite: r=" + std::to_string(r));
        out.push_back({r, c});
    }
    return out;
}

std::vector<unsigned> scan_family_r(unsigned r_max) {
    std::vector<unsigned> out;
    for (unsigned r = 1; r <= r_max; ++r)
        if (proth_is_prime(Int(3), r)) out.push_back(r);
    return out;
}

const std::vector<YBoundRow>& ybound_rows() {
    static const std::vector<YBoundRow> rows = {
        {6, 13264, 2578, 300},     {8, 16744, 2578, 650},     {12, 23728, 2578, 100},
        {18, 34210, 2584, 50},     {30, 55168, 2590, 50},     {36, 65650, 2590, 40},
        {41, 74386, 2584, 40},     {66, 118054, 2590, 40},    {189, 332902, 2578, 15},
        {201, 353860, 2578, 15},   {209, 367834, 2578, 15},   {276, 484846, 2578, 10},
        {353, 619366, 2572, 10},   {408, 715432, 2572, 10},   {438, 767836, 2602, 8},
        {534, 935524, 2578, 5},    {2208, 3859552, 2578, 1},  {2816, 4921564, 2578, 1},
        {3168, 5536408, 2578, 1},  {3189, 5573092, 2572, 1},  {3912, 6835978, 2572, 1},
    };
    return rows;
}

std::optional<YBoundRow> ybound_row(unsigned r) {
    for (const auto& row : ybound_rows())
        if (row.r == r) return row;
    return std::nullopt;
}

const std::vector<ZCapRow>& zcap_rows() {
    static const std::vector<ZCapRow> rows = {
        {6, 1, 3, 337210},
        {8, 1, 3, 1343597},
    };
    return rows;
}

std::optional<ZCapRow> zcap_row(unsigned r) {
    for (const auto& row : zcap_rows())
        if (row.r == r) return row;
    return std::nullopt;
}

}  // namespace expsieve
