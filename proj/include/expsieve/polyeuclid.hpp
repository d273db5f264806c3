#pragma once

#include "expsieve/arith.hpp"

#include <string>
#include <vector>

namespace expsieve {

// Dense polynomial over Q; coeffs[i] multiplies t^i.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly constant(const Rat& c);
    static RatPoly monomial(const Rat& c, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& lead() const { return c_.back(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    RatPoly monic() const;
    Rat eval(const Rat& t) const;
    Int eval_int(const Int& t) const;  // requires integral coefficients
    bool is_integral() const;
    // Least positive l with l * P integral.
    Int denominator_lcm() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rat& s, const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    RatPoly operator-() const;

    std::string to_string(const char* var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// a = q*b + r with deg r < deg b.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);

struct ExtGcd {
    RatPoly g, P, Q;  // A*P + B*Q = g, g monic
};
ExtGcd ext_gcd(const RatPoly& A, const RatPoly& B);

RatPoly build_AE(unsigned long E);
RatPoly build_BnE(unsigned long n, unsigned long E);
RatPoly build_IEN(unsigned long E, unsigned long N);
// I_{E,N}(X) = (X^{EN} - 1) / (X^E - 1) by exact division.
Int eval_IEN(const Int& X, unsigned long E, unsigned long N);

struct BezoutWitness {
    unsigned long n = 0, E = 0, N = 0;
    RatPoly lP, lQ;  // integral
    Int l;
};
struct NoWitnessError : std::domain_error {
    using std::domain_error::domain_error;
};
BezoutWitness bezout_witness(unsigned long n, unsigned long E, unsigned long N);
// A_E*lP + B*I*lQ - l == 0 as a polynomial.
bool verify_witness(const BezoutWitness& w);

struct HypothesisError : std::domain_error {
    enum class Kind { Precondition, NotASolution, EUndefined, NEven, Y2LeE, NeitherCondition };
    Kind kind;
    HypothesisError(Kind k, const std::string& what) : std::domain_error(what), kind(k) {}
};

struct CongruenceWitness {
    Int X, q;
    unsigned long m = 0, n = 0, y1 = 0, y2 = 0;
    unsigned long E = 0, N = 0;
    unsigned long e = 0;
    bool cond_I = false, cond_II = false;
    unsigned long kappa = 0;
    std::string branch;  // "E=1", "I", "II" or "I+II"
    Int modulus;         // q^kappa
    BezoutWitness witness;
};
CongruenceWitness derive_congruence(const Int& X, const Int& q, unsigned long m, unsigned long n,
                                    unsigned long y1, unsigned long y2);
// q^{y2} lQ(X) + l A_E(X) mod q^kappa.
Int congruence_residue(const BezoutWitness& w, const Int& X, const Int& q, unsigned long y2,
                       unsigned long kappa);

struct KRelation {
    Int K;
    unsigned long e = 0;
};
struct RejectSignal : std::domain_error {
    using std::domain_error::domain_error;
};
// b^2+b+1 = K c^{z-e}, e = nu_c((Y-1)/3), gcd(K,c) = 1.
KRelation krelation_decompose(const Int& b, const Int& c, unsigned long z, unsigned long Y);

struct SurveyRow {
    unsigned long y = 0, q = 0, N = 0;
    int lead_sign = 0;
    long deg_Q = -1;
    Int l;
    std::string lQ;
};
std::vector<SurveyRow> leading_coeff_survey(unsigned long y_lo, unsigned long y_hi, unsigned long q,
                                            unsigned long N_lo, unsigned long N_hi);

// (2(Y-1)b + 2c^z + Y - 1)^2 - [4((Y-1)T + c^{2e})c^{2z-2e} - 3(Y-1)^2] where T is
// defined by c^z(2b+1) + (Y-1)(b^2+b+1) = T c^{2(z-e)}; zero for every rational input.
Rat db_identity_defect(const Rat& b, const Rat& c, long z, const Rat& Y, long e);
// Same defect with b kept as the indeterminate t; the zero polynomial when the identity holds.
RatPoly db_identity_defect_poly(const Rat& c, long z, const Rat& Y, long e);

}  // namespace expsieve
