#include "expsieve/polyeuclid.hpp"

#include <sstream>
#include <stdexcept>

namespace expsieve {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t deg) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    Rat inv = 1 / lead();
    return inv * *this;
}

Rat RatPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Int RatPoly::eval_int(const Int& t) const {
    if (!is_integral()) throw DomainError("eval_int: non-integral coefficients");
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Int(it->get_num());
    return acc;
}

bool RatPoly::is_integral() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

Int RatPoly::denominator_lcm() const {
    Int l = 1;
    for (const auto& x : c_) l = lcm(l, Int(x.get_den()));
    return l;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x = -x;
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(v));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
    std::vector<Rat> v(a.c_);
    for (auto& x : v) x *= s;
    return RatPoly(std::move(v));
}

std::string RatPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Rat c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || i == 0) {
            if (mag.get_den() != 1 && i > 0)
                os << "(" << mag.get_str() << ")";
            else
                os << mag.get_str();
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw DomainError("divmod: division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    long db = b.degree();
    long da = a.degree();
    std::vector<Rat> quo(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, Rat(0));
    Rat inv = 1 / b.lead();
    for (long k = da; k >= db; --k) {
        Rat f = rem[static_cast<std::size_t>(k)] * inv;
        if (f == 0) continue;
        quo[static_cast<std::size_t>(k - db)] = f;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    q = RatPoly(std::move(quo));
    if (rem.size() > static_cast<std::size_t>(std::max(db, 0L))) rem.resize(static_cast<std::size_t>(std::max(db, 0L)));
    r = RatPoly(std::move(rem));
}

ExtGcd ext_gcd(const RatPoly& A, const RatPoly& B) {
    if (A.is_zero() && B.is_zero()) throw DomainError("ext_gcd: both inputs are zero");
    RatPoly r0 = A, r1 = B;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        RatPoly q, r;
        divmod(r0, r1, q, r);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat inv = 1 / r0.lead();
    return {inv * r0, inv * s0, inv * t0};
}

RatPoly build_AE(unsigned long E) {
    if (E == 0) throw DomainError("build_AE: E must be positive");
    if (E == 1) return RatPoly({Rat(-1), Rat(1)});
    return RatPoly(std::vector<Rat>(E, Rat(1)));
}

RatPoly build_BnE(unsigned long n, unsigned long E) {
    if (E == 0) throw DomainError("build_BnE: E must be positive");
    RatPoly tn = RatPoly::monomial(1, n);
    if (E == 1) return tn;
    return tn * RatPoly({Rat(-1), Rat(1)});
}

RatPoly build_IEN(unsigned long E, unsigned long N) {
    if (E == 0 || N == 0) throw DomainError("build_IEN: E and N must be positive");
    std::vector<Rat> v(E * (N - 1) + 1, Rat(0));
    for (unsigned long k = 0; k < N; ++k) v[k * E] = 1;
    return RatPoly(std::move(v));
}

Int eval_IEN(const Int& X, unsigned long E, unsigned long N) {
    Int xe = pow_ui(X, E);
    if (xe == 1) return Int(static_cast<unsigned long>(N));
    Int num = pow_ui(xe, N) - 1;
    Int den = xe - 1;
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BezoutWitness bezout_witness(unsigned long n, unsigned long E, unsigned long N) {
    RatPoly A = build_AE(E);
    RatPoly BI = build_BnE(n, E) * build_IEN(E, N);
    ExtGcd g = ext_gcd(A, BI);
    if (g.g.degree() != 0) throw NoWitnessError("bezout_witness: A_E and B*I share a factor");
    // Normalise to deg Q < deg A_E.
    RatPoly qd, qr;
    divmod(g.Q, A, qd, qr);
    RatPoly P = g.P + qd * BI;
    RatPoly Q = qr;
    Int l = lcm(P.denominator_lcm(), Q.denominator_lcm());
    BezoutWitness w;
    w.n = n;
    w.E = E;
    w.N = N;
    w.l = l;
    w.lP = Rat(l) * P;
    w.lQ = Rat(l) * Q;
    return w;
}

bool verify_witness(const BezoutWitness& w) {
    RatPoly lhs = build_AE(w.E) * w.lP + build_BnE(w.n, w.E) * build_IEN(w.E, w.N) * w.lQ;
    return lhs == RatPoly::constant(Rat(w.l)) && w.lP.is_integral() && w.lQ.is_integral() &&
           w.lQ.degree() < build_AE(w.E).degree();
}

Int congruence_residue(const BezoutWitness& w, const Int& X, const Int& q, unsigned long y2,
                       unsigned long kappa) {
    Int mod = pow_ui(q, kappa);
    Int v = pow_ui(q, y2) * w.lQ.eval_int(X) + w.l * build_AE(w.E).eval_int(X);
    return mod_nonneg(v, mod);
}

CongruenceWitness derive_congruence(const Int& X, const Int& q, unsigned long m, unsigned long n,
                                    unsigned long y1, unsigned long y2) {
    using K = HypothesisError::Kind;
    if (m < 3 || m <= n || n < 1 || X <= 1 || y1 <= y2 || y2 < 1)
        throw HypothesisError(K::Precondition, "need m >= 3, m > n >= 1, X > 1, y1 > y2 >= 1");
    if (q < 3 || mod_nonneg(q, 2) == 0 || !is_probable_prime(q))
        throw HypothesisError(K::Precondition, "q must be an odd prime");
    if (gcd(X, q) != 1) throw HypothesisError(K::Precondition, "gcd(X, q) must be 1");
    if (pow_ui(X, m) - pow_ui(X, n) != pow_ui(q, y1) - pow_ui(q, y2))
        throw HypothesisError(K::NotASolution, "X^m - X^n != q^y1 - q^y2");

    CongruenceWitness out;
    out.X = X;
    out.q = q;
    out.m = m;
    out.n = n;
    out.y1 = y1;
    out.y2 = y2;
    out.E = pm_order(q, X).e;
    if ((m - n) % out.E != 0)
        throw HypothesisError(K::EUndefined, "m != n (mod e_q(X))");
    out.N = (m - n) / out.E;
    if (out.N % 2 == 0) throw HypothesisError(K::NEven, "N = (m-n)/E is even");
    out.e = static_cast<unsigned long>(valuation(q, Int(out.N)));
    if (y2 <= out.e) throw HypothesisError(K::Y2LeE, "y2 <= e");
    const unsigned long d = y2 - out.e;
    const unsigned long E = out.E;

    if (E == 1) {
        out.kappa = 2 * d;
        out.branch = "E=1";
    } else {
        out.cond_I = build_AE(E).eval_int(X) != pow_ui(q, d);
        bool delta = pow_ui(X, m) > pow_ui(q, y1);
        long num = static_cast<long>(d) * (static_cast<long>(m) - 2 * static_cast<long>(E) + 2) +
                   static_cast<long>(E) - 1;
        unsigned long den = m + (delta ? E - 1 : 0);
        out.cond_II = num >= 0 && pow_ui(q, static_cast<unsigned long>(num)) >= pow_ui(Int(2), den);
        if (!out.cond_I && !out.cond_II)
            throw HypothesisError(K::NeitherCondition, "neither condition (I) nor (II) holds");
        unsigned long k_I = 0, k_II = 0;
        if (out.cond_I) {
            unsigned long ceil_frac = (m * d + (E - 2)) / (E - 1);
            k_I = std::min(2 * d, ceil_frac);
        }
        if (out.cond_II) k_II = 2 * d;
        out.kappa = std::max(k_I, k_II);
        out.branch = out.cond_I && out.cond_II ? "I+II" : (out.cond_I ? "I" : "II");
    }
    out.witness = bezout_witness(n, E, out.N);
    out.modulus = pow_ui(q, out.kappa);
    if (congruence_residue(out.witness, X, q, y2, out.kappa) != 0)
        throw std::logic_error("derive_congruence: derived congruence failed re-verification");
    return out;
}

KRelation krelation_decompose(const Int& b, const Int& c, unsigned long z, unsigned long Y) {
    if (Y % 6 != 4) throw DomainError("krelation_decompose: Y must be 4 (mod 6)");
    if (gcd(b, c) != 1 || pm_order(c, b).e != 3) throw DomainError("krelation_decompose: e_c(b) != 3");
    KRelation out;
    out.e = static_cast<unsigned long>(valuation(c, Int((Y - 1) / 3)));
    if (z <= out.e) throw RejectSignal("z <= e");
    Int v = b * b + b + 1;
    Int M = pow_ui(c, z - out.e);
    if (!mpz_divisible_p(v.get_mpz_t(), M.get_mpz_t())) throw RejectSignal("b^2+b+1 not divisible by c^(z-e)");
    out.K = v / M;
    if (mpz_divisible_p(out.K.get_mpz_t(), c.get_mpz_t())) throw RejectSignal("gcd(K, c) > 1");
    return out;
}

std::vector<SurveyRow> leading_coeff_survey(unsigned long y_lo, unsigned long y_hi, unsigned long q,
                                            unsigned long N_lo, unsigned long N_hi) {
    if (q < 3 || q % 2 == 0 || !is_probable_prime(Int(q))) throw DomainError("leading_coeff_survey: q must be an odd prime");
    std::vector<SurveyRow> rows;
    for (unsigned long y = y_lo; y <= y_hi; ++y) {
        for (unsigned long N = N_lo; N <= N_hi; ++N) {
            BezoutWitness w = bezout_witness(y, q, N);
            SurveyRow r;
            r.y = y;
            r.q = q;
            r.N = N;
            r.deg_Q = w.lQ.degree();
            r.lead_sign = w.lQ.is_zero() ? 0 : sgn(w.lQ.lead());
            r.l = w.l;
            r.lQ = w.lQ.to_string();
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

namespace {

Rat rpow(const Rat& c, long k) {
    Rat out = 1;
    Rat base = k >= 0 ? c : Rat(1) / c;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) out *= base;
    return out;
}

}  // namespace

Rat db_identity_defect(const Rat& b, const Rat& c, long z, const Rat& Y, long e) {
    Rat cz = rpow(c, z);
    Rat T = (cz * (2 * b + 1) + (Y - 1) * (b * b + b + 1)) / rpow(c, 2 * (z - e));
    Rat lhs = 2 * (Y - 1) * b + 2 * cz + Y - 1;
    lhs *= lhs;
    Rat Db = 4 * ((Y - 1) * T + rpow(c, 2 * e)) * rpow(c, 2 * z - 2 * e) - 3 * (Y - 1) * (Y - 1);
    return lhs - Db;
}

RatPoly db_identity_defect_poly(const Rat& c, long z, const Rat& Y, long e) {
    Rat cz = rpow(c, z);
    Rat inv = 1 / rpow(c, 2 * (z - e));
    Rat Y1 = Y - 1;
    RatPoly t = RatPoly::monomial(1, 1);
    RatPoly one = RatPoly::constant(1);
    RatPoly T = inv * (cz * (Rat(2) * t + one) + Y1 * (t * t + t + one));
    RatPoly lin = Rat(2) * Y1 * t + RatPoly::constant(2 * cz + Y1);
    RatPoly Db = Rat(4) * rpow(c, 2 * z - 2 * e) * (Y1 * T + RatPoly::constant(rpow(c, 2 * e))) -
                 RatPoly::constant(3 * Y1 * Y1);
    return lin * lin - Db;
}

}  // namespace expsieve
