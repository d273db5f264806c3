#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace expsieve {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod64(u64 b, u64 e, u64 m);

// Discrete logarithms in the cyclic group (Z/c^W)^*, c an odd prime, c^W < 2^62.
// Pohlig-Hellman over the prime powers of (c-1) c^(W-1).
class PrimePowerDlog {
public:
    PrimePowerDlog(u64 c, unsigned W);
    // Largest W with c^W < 2^62.
    static unsigned max_level(u64 c);

    u64 modulus() const { return mod_; }
    u64 order() const { return phi_; }
    u64 generator() const { return g_; }
    unsigned level() const { return W_; }
    // log_g(h) in [0, phi); h must be coprime to c.
    u64 log(u64 h) const;

private:
    u64 c_, mod_, phi_, g_;
    unsigned W_;
    std::vector<std::pair<u64, unsigned>> fac_;  // prime factorisation of phi
};

}  // namespace expsieve
