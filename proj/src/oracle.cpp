#include "expsieve/oracle.hpp"

#include "expsieve/polyeuclid.hpp"

#include <algorithm>

namespace expsieve {

namespace {

// Exponent k >= 1 with v = base^k, if any.
std::optional<unsigned long> exact_log(Int v, const Int& base) {
    if (v < base) return std::nullopt;
    unsigned long k = 0;
    while (v % base == 0) {
        v /= base;
        ++k;
    }
    if (v != 1) return std::nullopt;
    return k;
}

void require_bases(const Int& a, const Int& b, const Int& c) {
    if (a <= 1 || b <= 1 || c <= 1) throw DomainError("bases must exceed 1");
    if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
        throw CoprimalityError("bases must be pairwise coprime");
}

}  // namespace

CountResult count_N(const Int& a, const Int& b, const Int& c, const Int& cap) {
    require_bases(a, b, c);
    if (cap < c) throw DomainError("count_N: cap must be at least c");
    CountResult out;
    Int cz = c;
    for (unsigned long z = 1; cz <= cap; ++z, cz *= c) {
        Int ax = a;
        for (unsigned long x = 1; ax < cz; ++x, ax *= a) {
            if (auto y = exact_log(cz - ax, b)) out.solutions.push_back({x, *y, z});
        }
    }
    out.count = out.solutions.size();
    return out;
}

std::vector<PillaiPair> pillai_solutions(const Int& a, const Int& b, const Int& c, const Int& cap) {
    if (a <= 1 || b <= 1) throw DomainError("pillai_solutions: bases must exceed 1");
    if (c <= 0) throw DomainError("pillai_solutions: c must be positive");
    std::vector<PillaiPair> out;
    Int ax = a;
    for (unsigned long x = 1; ax <= cap; ++x, ax *= a) {
        if (ax <= c) continue;
        if (auto y = exact_log(ax - c, b)) out.push_back({x, *y});
    }
    return out;
}

std::vector<MnqSolution> mnq_solutions(unsigned long m, unsigned long n, const Int& q, const Int& X_cap,
                                       unsigned long y_cap) {
    if (!(m > n && n >= 1)) throw DomainError("mnq_solutions: need m > n >= 1");
    if (q <= 1) throw DomainError("mnq_solutions: q must exceed 1");
    std::vector<MnqSolution> out;
    for (Int X = 2; X <= X_cap; ++X) {
        if (gcd(X, q) != 1) continue;
        Int D = pow_ui(X, m) - pow_ui(X, n);
        long y2 = valuation(q, D);
        if (y2 < 1) continue;
        Int rest = D / pow_ui(q, static_cast<unsigned long>(y2)) + 1;
        auto k = exact_log(rest, q);
        if (!k) continue;
        unsigned long y1 = static_cast<unsigned long>(y2) + *k;
        if (y1 > y_cap) continue;
        MnqSolution s;
        s.X = X;
        s.y1 = y1;
        s.y2 = static_cast<unsigned long>(y2);
        s.E = pm_order(q, X).e;
        if ((m - n) % s.E == 0) {
            s.N = (m - n) / s.E;
            s.e = static_cast<unsigned long>(valuation(q, Int(*s.N)));
        }
        try {
            auto w = derive_congruence(X, q, m, n, s.y1, s.y2);
            s.hypotheses_hold = true;
            s.hypothesis_note = "branch " + w.branch + ", kappa " + std::to_string(w.kappa);
        } catch (const HypothesisError& e) {
            s.hypothesis_note = e.what();
        }
        out.push_back(std::move(s));
    }
    return out;
}

ExceptionalReport verify_exceptional_set(const Int& cap, const Int& entry_max, const std::vector<unsigned>& family_r) {
    struct Listed {
        int a, b, c;
    };
    static const Listed listed[] = {{3, 5, 2},    {3, 13, 2},   {2, 5, 3},     {2, 7, 3},
                                    {2, 3, 11},   {3, 10, 13},  {2, 3, 35},    {2, 89, 91},
                                    {2, 5, 133},  {2, 3, 259},  {3, 13, 2200}, {2, 91, 8283}};
    ExceptionalReport rep;
    auto run = [&](const Int& a, const Int& b, const Int& c, std::string label, std::size_t need_exact) {
        ExceptionalEntry e;
        e.a = a;
        e.b = b;
        e.c = c;
        e.label = std::move(label);
        e.result = count_N(a, b, c, cap);
        e.ok = need_exact ? e.result.count == need_exact : e.result.count >= 2;
        rep.entries.push_back(std::move(e));
    };
    for (const auto& t : listed) {
        if (t.a > entry_max || t.b > entry_max || t.c > entry_max) continue;
        std::size_t exact = (t.a == 3 && t.b == 5 && t.c == 2) ? 3 : 0;
        run(t.a, t.b, t.c, "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")",
            exact);
        if (exact) run(t.b, t.a, t.c, "(5,3,2)", 3);
    }
    for (unsigned r : family_r) {
        Int p = pow_ui(Int(2), r);
        run(2, p - 1, p + 1, "family r=" + std::to_string(r), 0);
    }
    rep.all_ok = std::all_of(rep.entries.begin(), rep.entries.end(), [](const auto& e) { return e.ok; });
    return rep;
}

bool CongReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CongCheck& c) { return !c.applicable || c.holds; });
}

CongReport lemma_cong_report(const SolutionPair& p) {
    require_bases(p.a, p.b, p.c);
    auto holds = [&](const SolutionTriple& s) {
        return pow_ui(p.a, s.x) + pow_ui(p.b, s.y) == pow_ui(p.c, s.z);
    };
    if (!holds(p.s1) || !holds(p.s2)) throw DomainError("lemma_cong_report: not a pair of solutions");
    CongReport rep;
    long d = static_cast<long>(p.s1.x * p.s2.y) - static_cast<long>(p.s2.x * p.s1.y);
    rep.Delta = static_cast<unsigned long>(d < 0 ? -d : d);
    unsigned long zmin = std::min(p.s1.z, p.s2.z);
    Int cz = pow_ui(p.c, zmin);

    PmOrder oa = pm_order(p.c, p.a), ob = pm_order(p.c, p.b);
    CongCheck cE{"Delta = 0 mod E", oa.e == ob.e, false, ""};
    if (cE.applicable) {
        rep.E = oa.e;
        cE.holds = rep.Delta % oa.e == 0;
        cE.detail = "E = " + std::to_string(oa.e);
    } else {
        cE.detail = "e_c(a) != e_c(b)";
    }
    rep.checks.push_back(cE);

    for (const Int* h : {&p.a, &p.b}) {
        CongCheck ch{"h^Delta = +-1 mod c^min(z,Z), h=" + h->get_str(), rep.Delta > 0, false, ""};
        if (ch.applicable) {
            Int r = powmod(*h, Int(rep.Delta), cz);
            ch.holds = r == 1 % cz || r == cz - 1;
            ch.detail = "residue " + r.get_str();
        }
        rep.checks.push_back(ch);
    }

    // Shape a + b = c^z, a + b^Y = c^Z with z <= Z, after renaming a <-> b if needed.
    std::optional<std::pair<Int, Int>> ab;
    unsigned long z = 0, Y = 0, Z = 0;
    for (int order = 0; order < 2 && !ab; ++order) {
        const SolutionTriple& s = order ? p.s2 : p.s1;
        const SolutionTriple& t = order ? p.s1 : p.s2;
        if (s.x != 1 || s.y != 1 || s.z > t.z) continue;
        if (t.x == 1) {
            ab = {p.a, p.b};
            Y = t.y;
        } else if (t.y == 1) {
            ab = {p.b, p.a};
            Y = t.x;
        } else {
            continue;
        }
        z = s.z;
        Z = t.z;
    }
    CongCheck c1{"a^(Y-1) = -1 mod c^z", ab && Y % 2 == 0, false, ""};
    CongCheck c2{"c^(Yz-Z) = 1 mod a", ab.has_value() && Y * z >= Z, false, ""};
    if (!ab) {
        c1.detail = c2.detail = "pair is not of the form a+b=c^z, a+b^Y=c^Z";
    } else {
        const Int& a = ab->first;
        Int cz1 = pow_ui(p.c, z);
        if (c1.applicable) {
            c1.holds = powmod(a, Int(Y - 1), cz1) == cz1 - 1;
        } else {
            c1.detail = "Y odd";
        }
        if (c2.applicable) c2.holds = powmod(p.c, Int(Y * z - Z), a) == 1 % a;
        c1.detail += (c1.detail.empty() ? "" : "; ") + std::string("a=") + a.get_str() + ", Y=" + std::to_string(Y);
    }
    rep.checks.push_back(c1);
    rep.checks.push_back(c2);
    return rep;
}

bool lemma_cong_checks(const SolutionPair& p) { return lemma_cong_report(p).ok(); }

}  // namespace expsieve
