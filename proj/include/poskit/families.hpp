#pragma once

#include <cstdint>

#include "poskit/group.hpp"
#include "poskit/spectrum.hpp"

namespace poskit {

// Z_4 semidirect Z_{2*5^n} with the inversion action (u = 3 = -1 mod 4).
// Group order 8*5^n. n >= 1.
GroupSpec inversion_family_spec(std::uint64_t n);

// Exact spectrum of the inversion family, no enumeration:
//   {1:1, 2:5, 4:2}
//   plus, for every 1 <= m <= n,
//   {5^m: 4*5^(m-1), 2*5^m: 4*5^m, 4*5^m: 8*5^(m-1)}.
OrderSpectrum inversion_family_closed_form(std::uint64_t n);

// True iff the closed form equals the brute-force spectrum entry for entry
// and the group has perfect order subsets.
bool verify_inversion_family(std::uint64_t n, unsigned jobs = 1,
                             std::uint64_t max_order = Group::default_max_order);

// Z_p semidirect Z_{p-1} acting through the smallest primitive root mod p,
// the Frobenius group of order p(p-1). p an odd prime (p = 3 gives S3).
GroupSpec frobenius_spec(std::uint64_t p);

// Z_{p^k} semidirect Z_{2^l} for a Fermat prime p, k >= 1, 2^l >= p-1.
// The action is u = g^(p^(k-1)) for g the smallest primitive root mod p^k,
// so u has multiplicative order exactly p-1, a power of 2 dividing 2^l.
GroupSpec fermat_family_spec(std::uint64_t p, std::uint64_t k, std::uint64_t l);

} // namespace poskit
