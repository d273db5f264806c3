#include <algorithm>
#include "expsieve/bounds.hpp"

#include "expsieve/tables.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <sstream>

namespace expsieve {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::ceil;
using boost::multiprecision::exp;
using boost::multiprecision::floor;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

const Real kNudge("1e-45");

std::string fmt(const Real& x, int digits = 20) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

Real rmax(const Real& a, const Real& b) { return a > b ? a : b; }
Real rmax(const Real& a, const Real& b, const Real& c) { return rmax(rmax(a, b), c); }

void need(bool ok, const char* what) {
    if (!ok) throw ParamError(what);
}

unsigned nu_N(const Int& c, unsigned long Y) {
    return static_cast<unsigned>(valuation(c, Int((Y - 1) / 3)));
}

}  // namespace

Real to_real(const Int& x) { return Real(x.get_str()); }
Real rlog(const Real& x) { return log(x); }
Real rpow(const Real& base, const Real& e) { return pow(base, e); }

long long floor_up(const Real& x) {
    Real y = x + abs(x) * kNudge + kNudge;
    return floor(y).convert_to<long long>();
}

long long ceil_up(const Real& x) {
    Real y = x + abs(x) * kNudge + kNudge;
    return ceil(y).convert_to<long long>();
}

// ---- linear forms ----

Real eval_two_log(const TwoLogParams& p) {
    need(p.b1 > 0 && p.b2 > 0, "two_log: exponents must be positive");
    need(p.H1 >= rmax(p.h1, p.log_alpha1, Real(1)), "two_log: H1 below its floor");
    need(p.H2 >= rmax(p.h2, p.log_alpha2, Real(1)), "two_log: H2 below its floor");
    Real bp = p.b1 / p.H2 + p.b2 / p.H1;
    Real B = rmax(log(bp) + Real("0.38"), Real(10));
    return -Real("25.2") * p.H1 * p.H2 * B * B;
}

Real one_log_H(const OneLogUnitParams& p) {
    return rmax(Real(p.D) * p.h + 22 * p.abs_log, Real(40));
}

Real one_log_B(const OneLogUnitParams& p) {
    Real D(p.D);
    return rmax(log(p.k / 25) + Real("2.35") + Real("10.2") / D, Real(34) / D, Real("0.1") / sqrt(D / 2));
}

Real eval_one_log_unit(const OneLogUnitParams& p) {
    need(p.D >= 1 && p.k >= 1 && p.h >= 0 && p.abs_log >= 0, "one_log_unit: invalid parameters");
    Real D(p.D);
    Real B = one_log_B(p);
    return -Real(9) / 8 * D * D * one_log_H(p) * B * B;
}

Real madic_B(const MadicParams& p) {
    Real bp = p.b1 / p.H2 + p.b2 / p.H1;
    return rmax(log(bp) + log(log(p.M)) + Real("0.64"), 4 * log(p.M));
}

Real eval_madic(const MadicParams& p) {
    need(p.M > 1, "madic: M must exceed 1");
    need(p.g > 0 && p.b1 > 0 && p.b2 > 0, "madic: g, b1, b2 must be positive");
    Real lM = log(p.M);
    need(p.H1 >= rmax(p.h1, lM) && p.H2 >= rmax(p.h2, lM), "madic: heights below max{h, log M}");
    Real B = madic_B(p);
    return Real("53.6") * p.g * p.H1 * p.H2 / pow(lM, 4) * B * B;
}

Real prime_ideal_B(const PrimeIdealParams& p) {
    Real bp = p.b1 / p.H2 + p.b2 / p.H1;
    Real lp = log(p.p);
    return rmax(log(bp) + log(lp) + Real("0.4"), Real(8 * p.f) / Real(p.D) * lp, Real(10));
}

Real eval_prime_ideal(const PrimeIdealParams& p) {
    need(p.p >= 2 && p.D >= 1 && p.f >= 1, "prime_ideal: invalid field data");
    need(p.g > 0 && p.b1 > 0 && p.b2 > 0, "prime_ideal: g, b1, b2 must be positive");
    Real lp = log(p.p);
    Real Df = Real(p.D) / Real(p.f);
    need(p.H1 >= rmax(Df * p.h1, lp) && p.H2 >= rmax(Df * p.h2, lp), "prime_ideal: heights below floor");
    Real D(p.D), f(p.f);
    Real B = prime_ideal_B(p);
    return Real("27.3") * D * D * p.p * p.g * p.H1 * p.H2 / (f * f * (p.p - 1) * pow(lp, 4)) * B * B;
}

// ---- fixed points ----

FixedPoint solve_fixed_point(const std::function<Real(const Real&)>& rhs, std::optional<Real> T_init,
                             int max_iter) {
    FixedPoint out;
    Real T = T_init ? *T_init : exp(Real(10));
    const Real tol("1e-40");
    bool done = false;
    for (int i = 0; i < max_iter; ++i) {
        Real next = rhs(T);
        if (out.trace.size() < 64) out.trace.push_back("iter " + std::to_string(i) + ": " + fmt(next));
        if (abs(next - T) <= tol * rmax(Real(1), abs(T))) {
            T = next;
            done = true;
            break;
        }
        T = next;
    }
    if (!done) throw NonConvergence("solve_fixed_point: no convergence within iteration cap");
    out.value = T;
    long long n0 = floor(T).convert_to<long long>();
    bool found = false;
    for (long long n = n0 + 2; n >= n0 - 2; --n) {
        if (n < 0) break;
        if (Real(n) <= rhs(Real(n))) {
            out.largest = n;
            found = true;
            break;
        }
    }
    if (!found) throw NonConvergence("solve_fixed_point: no admissible integer near the fixed point");
    if (Real(out.largest + 1) <= rhs(Real(out.largest + 1)))
        throw NonConvergence("solve_fixed_point: admissible region extends past the scan window");
    out.trace.push_back("fixed point " + fmt(T, 30) + ", largest admissible integer " + std::to_string(out.largest));
    return out;
}

// ---- reports ----

std::string BoundReport::status() const {
    if (!expected) return "no-target";
    if (matched()) return "matched";
    long long d = value - *expected;
    if (d >= -2 && d <= 2) return "mismatch-warning";
    return "mismatched";
}

BoundReport bound_K1(const Int& c, unsigned E, bool m_lt_c) {
    Real lc = log(to_real(c));
    Real f = m_lt_c ? lc / log(Real(2)) : Real(1);
    Real C = f * Real("53.6") * 2 * E / pow(lc, 4);
    Real cap4 = pow(to_real(c), 4);
    Real k = 4 * exp(Real("0.64")) * lc * lc;
    auto rhs = [&](const Real& T) {
        Real B = log(rmax(k * T, cap4));
        return C * B * B;
    };
    FixedPoint fp = solve_fixed_point(rhs);
    BoundReport r;
    r.name = m_lt_c ? "K1(m<c)" : "K1(m>c)";
    r.inputs = {{"c", c.get_str()}, {"E", std::to_string(E)}, {"f", m_lt_c ? "log c/log 2" : "1"}};
    r.value = ceil_up(fp.value);
    r.real_value = fmt(fp.value, 30);
    r.trace = fp.trace;
    return r;
}

BoundReport bound_K2(const Int& c, unsigned E, unsigned z_min, const char* zeta_s) {
    Real zeta(zeta_s);
    Real z(z_min);
    Real a = 1 / (zeta * zeta);
    Real d = zeta * z - log(Real(2));
    Real b = 4 * z * z / (d * d);   // z^2 / log^2 m with log m > (zeta z - log 2) / 2
    Real v = Real("53.611") * 2 * E * rmax(a, b) * 16;
    BoundReport r;
    r.name = "K2";
    r.inputs = {{"c", c.get_str()}, {"E", std::to_string(E)}, {"z_min", std::to_string(z_min)}, {"zeta", zeta_s}};
    r.value = ceil_up(v);
    r.real_value = fmt(v, 30);
    r.trace = {"max{1/zeta^2, 4z^2/(zeta z - log 2)^2} = " + fmt(rmax(a, b))};
    r.note = "coefficient 53.611 inside the fixed point";
    return r;
}

namespace {

// Largest integer strictly below v.
long long strict_floor(const Real& v) {
    Real f = floor(v);
    long long n = f.convert_to<long long>();
    if (f == v) --n;
    return n;
}

}  // namespace

BoundReport bound_K3_small(const Int& c, long long K1, unsigned z_cap, const std::string& label) {
    Real lc = log(to_real(c));
    Real v = Real(K1) * lc * lc * z_cap;
    BoundReport r;
    r.name = "K3(" + label + ")";
    r.inputs = {{"c", c.get_str()}, {"K1", std::to_string(K1)}, {"z_cap", std::to_string(z_cap)}};
    r.value = strict_floor(v);
    r.real_value = fmt(v, 30);
    return r;
}

BoundReport bound_K3_large(const Int& c, long long K2) {
    Real lc = log(to_real(c));
    Real v = Real(K2) * lc * lc;
    BoundReport r;
    r.name = "K3(z>=13)";
    r.inputs = {{"c", c.get_str()}, {"K2", std::to_string(K2)}};
    r.value = strict_floor(v);
    r.real_value = fmt(v, 30);
    return r;
}

BoundReport bound_z_nprime(const Int& c, unsigned nprime) {
    Real cr = to_real(c);
    Real lc = log(cr);
    Real H1 = lc;
    Real H2 = Real(nprime > 1 ? nprime : 1) * lc;
    PrimeIdealParams p;
    p.D = 2;
    p.f = 1;
    p.p = cr;
    p.g = cr - 1;
    p.H1 = H1;
    p.H2 = H2;
    p.b2 = 1;
    auto rhs = [&](const Real& z1) {
        PrimeIdealParams q = p;
        q.b1 = z1 > 1 ? z1 : Real(1);
        return eval_prime_ideal(q);
    };
    FixedPoint fp = solve_fixed_point(rhs);
    BoundReport r;
    r.name = "z(" + std::to_string(nprime) + ")";
    r.inputs = {{"c", c.get_str()}, {"n'", std::to_string(nprime)}};
    r.value = fp.largest + nprime;
    r.real_value = fmt(fp.value, 30);
    r.trace = fp.trace;
    return r;
}

namespace {

// Powers c^k as reals, computed once per k.
class RealPowers {
public:
    explicit RealPowers(const Int& c) : cr_(to_real(c)) {}
    const Real& base() const { return cr_; }
    const Real& operator()(unsigned k) {
        while (cache_.size() <= k) cache_.push_back(cache_.empty() ? Real(1) : cache_.back() * cr_);
        return cache_[k];
    }

private:
    Real cr_;
    std::vector<Real> cache_;
};

bool y_upper_admits(const Int& c, RealPowers& cp, const Real& lc, unsigned long Y) {
    unsigned e = nu_N(c, Y);
    Real lhs = Real(Y) - 2 - log(2 * cp(e)) / log(Real(2));
    Real B = rmax(log(2 * Real(Y) / lc + 1) + Real("0.38"), Real(10));
    Real rhs = Real("25.2") * lc * B * B;
    return lhs < rhs;
}

// calC with c^z and c^(2e) supplied.
std::optional<Real> calC_with(unsigned long Y, const Real& T, const Real& cz, const Real& c2e) {
    Real N = Real(Y - 1) / 3;
    Real rad = 4 * (3 * N * T / c2e + 1) - 27 * N * N / (cz * cz);
    if (rad <= 0) return std::nullopt;
    Real den = -2 - 3 * N / cz + sqrt(rad);
    if (den <= 0) return std::nullopt;
    return 6 * N / den;
}

}  // namespace

// Both Y scans decide most Y in long double and fall back to the 200-bit evaluation whenever the
// long double margin is below 1e-9 relative.
namespace {
constexpr long double kScreen = 1e-9L;
bool clear_margin(long double a, long double b) {
    return std::isfinite(a) && std::isfinite(b) && fabsl(a - b) > kScreen * std::max({fabsl(a), fabsl(b), 1.0L});
}
}  // namespace

BoundReport bound_Y_upper(const Int& c) {
    RealPowers cp(c);
    Real lc = log(cp.base());
    const long double lcd = lc.convert_to<long double>();
    const long double ln2 = logl(2.0L);
    unsigned long best = 0;
    unsigned long stop = 0;
    for (unsigned long Y = 4;; Y += 6) {
        unsigned e = nu_N(c, Y);
        long double lhs = Y - 2.0L - (1.0L + e * lcd / ln2);
        long double B = std::max(logl(2.0L * Y / lcd + 1) + 0.38L, 10.0L);
        long double rhs = 25.2L * lcd * B * B;
        bool admits = clear_margin(lhs, rhs) ? lhs < rhs : y_upper_admits(c, cp, lc, Y);
        if (admits) best = Y;
        // Past this point c^e <= Y cannot rescue the inequality any more.
        long double floor_d = Y - 2.0L - logl(2.0L * Y) / ln2;
        bool past;
        if (clear_margin(floor_d, rhs)) {
            past = floor_d >= rhs;
        } else {
            Real Br = rmax(log(2 * Real(Y) / lc + 1) + Real("0.38"), Real(10));
            past = Real(Y) - 2 - log(Real(2 * Y)) / log(Real(2)) >= Real("25.2") * lc * Br * Br;
        }
        if (past && Y > best + 12) {
            stop = Y;
            break;
        }
    }
    BoundReport r;
    r.name = "Y_u1";
    r.inputs = {{"c", c.get_str()}, {"e", "nu_c((Y-1)/3) per Y"}};
    r.value = static_cast<long long>(best);
    r.trace = {"scan over Y = 4 (mod 6) stopped at " + std::to_string(stop)};
    return r;
}

BoundReport bound_Y_refined(const Int& c, unsigned long z1, unsigned long Y_max) {
    RealPowers cp(c);
    Real lc = log(cp.base());
    const Real cz = pow(cp.base(), static_cast<long>(z1));
    const long double lcd = lc.convert_to<long double>();
    const long double icz = expl(-static_cast<long double>(z1) * lcd);
    unsigned long best = 0;
    unsigned long degenerate = 0;
    for (unsigned long Y = 4; Y <= Y_max; Y += 6) {
        unsigned e = nu_N(c, Y);
        if (e >= z1) {
            best = Y;
            ++degenerate;
            continue;
        }
        // Long double screen; anything close to a branch point goes to the exact path.
        {
            long double N = (Y - 1) / 3.0L;
            long double c2e = expl(2.0L * e * lcd);
            long double rad = 4 * (3 * N * 2 / c2e + 1) - 27 * N * N * icz * icz;
            long double den = rad > 0 ? -2 - 3 * N * icz + sqrtl(rad) : -1;
            if (std::isfinite(c2e) && rad > 1e-3L && den > 1e-3L) {
                long double lC = logl(6 * N / den);
                long double zl = z1 * lcd;
                if (lC > 0 && clear_margin(lC, zl) && lC < zl) {
                    long double bound = 1 / (1 - lC / zl) * (857.6L * 3 * z1 / (z1 - e) + 1);
                    if (clear_margin(Y, bound)) {
                        if (Y < bound) best = Y;
                        continue;
                    }
                }
            }
        }
        auto C = calC_with(Y, Real(2), cz, cp(2 * e));
        if (!C || *C <= 0 || log(*C) >= Real(z1) * lc) {
            best = Y;
            ++degenerate;
            continue;
        }
        Real bound = 1 / (1 - log(*C) / (Real(z1) * lc)) * (Real("857.6") * 3 * z1 / Real(z1 - e) + 1);
        if (Real(Y) < bound) best = Y;
    }
    BoundReport r;
    r.name = "Y_u2";
    r.inputs = {{"c", c.get_str()}, {"z1", std::to_string(z1)}, {"Y_max", std::to_string(Y_max)}};
    r.value = static_cast<long long>(best);
    r.trace = {"degenerate Y kept as admissible: " + std::to_string(degenerate)};
    return r;
}

std::optional<Real> calC(long z, unsigned long Y, const Real& T, const Int& c, unsigned e) {
    if (Y % 6 != 4) throw ParamError("calC: Y must be 4 (mod 6)");
    Real cr = to_real(c);
    Real N = Real(Y - 1) / 3;
    Real cz = pow(cr, z);
    Real rad = 4 * (3 * pow(cr, -2 * static_cast<long>(e)) * N * T + 1) - 27 * N * N / (cz * cz);
    if (rad <= 0) return std::nullopt;
    Real den = -2 - 3 * N / cz + sqrt(rad);
    if (den <= 0) return std::nullopt;
    return 6 * N / den;
}

long z0_of(unsigned long Y, const Real& T, const Int& c, unsigned e) {
    for (long z = 1; z <= 1000000; ++z)
        if (calC(z, Y, T, c, e)) return z;
    throw ParamError("z0_of: no admissible z below 10^6");
}

std::pair<Real, Real> T_upper_bounds(long z, unsigned long Y, const Int& c, unsigned e) {
    Real cr = to_real(c);
    Real N = Real(Y - 1) / 3;
    Real tau = 1 / (1 - 1 / cr);
    Real tY = pow(tau, Real(Y));
    long e2 = 2 * static_cast<long>(e);
    Real u1 = (Real(6000) * 6000 * tY * tY + 6000 * tY + 1) / pow(cr, Real(2 * z - e2)) * 3 * N +
              (12000 * tY + 1) / pow(cr, Real(z - e2));
    Real zr(z), Yr(Y);
    Real u2 = (1 + pow(cr, -(1 - 1 / Yr) * zr) + pow(cr, -(2 - 2 / Yr) * zr)) / pow(cr, 2 * zr / Yr - e2) * 3 * N +
              2 / pow(cr, zr / Yr - e2) + 1 / pow(cr, Real(z - e2));
    return {u1, u2};
}

std::optional<std::pair<Real, Real>> z_upper_bounds(long z, unsigned long Y, const Real& T, const Int& c,
                                                    unsigned e) {
    auto C = calC(z, Y, T, c, e);
    if (!C) return std::nullopt;
    Real cr = to_real(c);
    Real lc = log(cr);
    Real tau = 1 / (1 - 1 / cr);
    Real u1 = (log(6000 * *C) + Real(Y) * log(tau)) / lc;
    Real u2 = Real(Y) * log(*C) / lc;
    return std::make_pair(u1, u2);
}

// ---- c = 97 ----

C97Constants c97_constants(unsigned E) {
    if (E != 3 && E != 6 && E != 12 && E != 24) throw ParamError("c97_constants: E must be 3, 6, 12 or 24");
    const Real c(97);
    Real lc = log(c);
    Real l2 = log(Real(2));
    C97Constants k;
    k.E = E;
    k.t1 = ceil_up(Real("53.6") * 8 * E / (l2 * lc * lc));
    Real C = lc / l2 * Real("53.6") * 2 * E / pow(lc, 4);
    Real kk = 4 * exp(Real("0.64")) * lc * lc;
    Real c4 = pow(c, 4);
    auto rhs = [&](const Real& T) {
        Real B = log(rmax(kk * T, c4));
        return C * B * B;
    };
    k.t1_fixed = ceil_up(solve_fixed_point(rhs).value);
    k.t2 = Real("53.7") * 2 * 16 * Real("2.25") * E;
    k.t3 = Real("1.5") * Real("27.3") * 4 * 16;
    return k;
}

Real complex_baker_cap(const Int& c, const Real& chi) {
    if (chi <= 2) throw ParamError("complex_baker_cap: chi must exceed 2");
    Real lc = log(to_real(c));
    Real pi = boost::math::constants::pi<Real>();
    Real K = 9 / (1 - 2 / chi) * (1 + 22 * pi / lc);
    auto rhs = [&](const Real& Z) {
        Real B = rmax(log(Z) + Real("4.24"), Real(17));
        return K * B * B + 1;
    };
    return solve_fixed_point(rhs).value;
}

C97Caps c97_Z_caps() {
    const Real c(97);
    Real lc = log(c);
    Real t3 = c97_constants(3).t3;
    Real t3c = t3 * c / (c - 1);
    Real lead = t3c / (lc * lc);
    Real e04 = exp(Real("0.4"));
    C97Caps caps;
    caps.even_Z = 0;
    caps.odd_z = 0;
    caps.Z_le_z = 0;
    for (unsigned E : {3u, 6u, 12u, 24u}) {
        Real t2 = c97_constants(E).t2;
        auto zfix = [&](const Real& T) {
            auto rhs = [&](const Real& z) {
                Real L = log(2 * e04 * E * T * z);
                return lead * L * L;
            };
            return solve_fixed_point(rhs).value;
        };
        caps.even_Z = rmax(caps.even_Z, 4 * 16 * t3c, 4 * zfix(Real(4)));
        caps.odd_z = rmax(caps.odd_z, 16 * t3c, zfix(t2));
        auto Zrhs = [&](const Real& Z) {
            Real L = log(2 * e04 * E * (Z + 1));
            return lead * L * L;
        };
        Real small = 16 * t3c;
        Real alt = pow(c, 4) / (2 * e04 * E) - 1;
        if (alt < small) small = alt;
        caps.Z_le_z = rmax(caps.Z_le_z, small, solve_fixed_point(Zrhs).value);
    }
    Real chi("2.43");
    caps.odd_Z = rmax(complex_baker_cap(Int(97), chi), chi * caps.odd_z);
    caps.odd_Z_8400 = complex_baker_cap(Int(97), Real(8400));

    auto row = [](const std::string& name, const Real& v, long long target) {
        BoundReport r;
        r.name = name;
        r.inputs = {{"c", "97"}};
        r.value = ceil_up(v);
        r.real_value = fmt(v, 20);
        r.expected = target;
        r.cap = true;
        return r;
    };
    caps.rows.push_back(row("c97 Z cap (Z even)", caps.even_Z, 170000));
    caps.rows.push_back(row("c97 z cap (Z odd)", caps.odd_z, 96000));
    caps.rows.push_back(row("c97 Z cap (Z<=z)", caps.Z_le_z, 43000));
    caps.rows.push_back(row("c97 Z cap (Z odd)", caps.odd_Z, 240000));
    caps.rows.push_back(row("c97 Z cap (chi=8400)", caps.odd_Z_8400, 42000));
    return caps;
}

// ---- row sets ----

std::vector<BoundReport> bounds_for_c7() {
    const Int c(7);
    std::vector<BoundReport> rows;
    BoundReport k1a = bound_K1(c, 3, true);
    k1a.expected = 9937;
    BoundReport k1b = bound_K1(c, 3, false);
    k1b.expected = 2875;
    BoundReport k2 = bound_K2(c, 3);
    k2.expected = 18438;
    rows.push_back(k1a);
    rows.push_back(k1b);
    rows.push_back(k2);
    // Delta caps use the tabulated constants so each row can be checked on its own.
    BoundReport k3a = bound_K3_small(c, 9937, 6, "m<c, z<=12");
    k3a.expected = 225762;
    BoundReport k3b = bound_K3_small(c, 2875, 12, "m>c, z<=12");
    k3b.expected = 130636;
    BoundReport k3c = bound_K3_large(c, 18438);
    k3c.expected = 69816;
    rows.push_back(k3a);
    rows.push_back(k3b);
    rows.push_back(k3c);
    const long long zt[] = {21789, 21790, 43580, 65370, 87160, 108950};
    for (unsigned n = 0; n <= 5; ++n) {
        BoundReport z = bound_z_nprime(c, n);
        z.expected = zt[n];
        rows.push_back(z);
    }
    BoundReport y1 = bound_Y_upper(c);
    y1.expected = 4906;
    rows.push_back(y1);
    BoundReport y2 = bound_Y_refined(c, 200, static_cast<unsigned long>(y1.value));
    y2.expected = 2596;
    rows.push_back(y2);
    return rows;
}

std::vector<BoundReport> bounds_for_r(unsigned r) {
    if (!is_supported_r(r)) throw ParamError("bounds_for_r: r not in the supported list");
    if (r == 1) return bounds_for_c7();
    Int c = family_c(r);
    if (!proth_is_prime(Int(3), r)) throw ParamError("bounds_for_r: 3*2^r+1 is composite");
    std::vector<BoundReport> rows;
    auto yrow = ybound_row(r);
    BoundReport y1 = bound_Y_upper(c);
    if (yrow) y1.expected = yrow->Y_u1;
    rows.push_back(y1);
    BoundReport y2 = bound_Y_refined(c, 200, static_cast<unsigned long>(y1.value));
    if (yrow) y2.expected = yrow->Y_u2;
    y2.note = "evaluated at z1 = 200";
    rows.push_back(y2);
    if (auto zr = zcap_row(r)) {
        BoundReport z = bound_z_nprime(c, zr->nprime);
        z.expected = zr->z_n;
        rows.push_back(z);
    }
    return rows;
}

std::vector<BoundReport> bounds_for_c97() {
    std::vector<BoundReport> rows;
    const long long t1_table[] = {89, 178, 355, 710};
    unsigned i = 0;
    for (unsigned E : {3u, 6u, 12u, 24u}) {
        C97Constants k = c97_constants(E);
        BoundReport r;
        r.name = "t1(E=" + std::to_string(E) + ")";
        r.inputs = {{"c", "97"}, {"E", std::to_string(E)}};
        r.value = k.t1;
        r.expected = t1_table[i++];
        r.note = "fixed point of the displayed inequality gives " + std::to_string(k.t1_fixed);
        rows.push_back(r);
        BoundReport t2;
        t2.name = "t2(E=" + std::to_string(E) + ")";
        t2.inputs = {{"E", std::to_string(E)}};
        t2.value = ceil_up(k.t2);
        t2.real_value = fmt(k.t2, 20);
        rows.push_back(t2);
    }
    BoundReport t3;
    t3.name = "t3";
    C97Constants k = c97_constants(3);
    t3.value = ceil_up(k.t3);
    t3.real_value = fmt(k.t3, 20);
    rows.push_back(t3);
    for (auto& r : c97_Z_caps().rows) rows.push_back(r);
    return rows;
}

}  // namespace expsieve
