#pragma once

#include "expsieve/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace expsieve {

// a^x + b^y = c^z.
struct SolutionTriple {
    unsigned long x = 0, y = 0, z = 0;
    friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
    friend auto operator<=>(const SolutionTriple&, const SolutionTriple&) = default;
};

struct CountResult {
    std::size_t count = 0;
    std::vector<SolutionTriple> solutions;  // ascending in (z, x, y)
};

// All solutions with c^z <= cap. Bases pairwise coprime and > 1; cap >= c.
CountResult count_N(const Int& a, const Int& b, const Int& c, const Int& cap);

// a^x - b^y = c with a^x <= cap, x, y >= 1.
struct PillaiPair {
    unsigned long x = 0, y = 0;
    friend bool operator==(const PillaiPair&, const PillaiPair&) = default;
};
std::vector<PillaiPair> pillai_solutions(const Int& a, const Int& b, const Int& c, const Int& cap);

// X^m - X^n = q^y1 - q^y2.
struct MnqSolution {
    Int X;
    unsigned long y1 = 0, y2 = 0;
    unsigned long E = 0;               // e_q(X)
    std::optional<unsigned long> N;    // (m - n) / E when E | m - n
    unsigned long e = 0;               // nu_q(N)
    bool hypotheses_hold = false;      // congruence derivation went through
    std::string hypothesis_note;       // failing hypothesis or the branch taken
};
std::vector<MnqSolution> mnq_solutions(unsigned long m, unsigned long n, const Int& q, const Int& X_cap,
                                       unsigned long y_cap);

struct ExceptionalEntry {
    Int a, b, c;
    std::string label;
    CountResult result;
    bool ok = false;   // >= 2 solutions, or exactly 3 for the (3,5,2) pair
};
struct ExceptionalReport {
    std::vector<ExceptionalEntry> entries;
    bool all_ok = false;
};
// Listed triples with entries <= entry_max, plus (2, 2^r - 1, 2^r + 1) for each r in family_r.
ExceptionalReport verify_exceptional_set(const Int& cap, const Int& entry_max = 100,
                                         const std::vector<unsigned>& family_r = {2, 4, 5});

// Two solutions of a^x + b^y = c^z.
struct SolutionPair {
    Int a, b, c;
    SolutionTriple s1, s2;
};
struct CongCheck {
    std::string name;
    bool applicable = false;
    bool holds = false;
    std::string detail;
};
struct CongReport {
    unsigned long Delta = 0;
    std::optional<unsigned long> E;
    std::vector<CongCheck> checks;
    bool ok() const;   // every applicable check holds
};
CongReport lemma_cong_report(const SolutionPair& p);
bool lemma_cong_checks(const SolutionPair& p);

}  // namespace expsieve
