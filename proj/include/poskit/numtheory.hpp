#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace poskit {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Product with overflow check; throws IntegerOverflowError.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);
bool is_power_of_two(std::uint64_t n);

/// Prime factorization by trial division, (prime, exponent) pairs with
/// ascending primes. factorize(1) is empty.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Moebius function: 0 unless n is squarefree, else (-1)^(#prime factors).
int mobius(std::uint64_t n);

/// Order of u in the unit group mod m; requires gcd(u, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t m);

/// Smallest g >= 1 generating the unit group mod m; DomainError when the
/// unit group is not cyclic. Intended for m = p^k with p an odd prime
/// (plus the trivial m = 2, 4 cases).
std::uint64_t smallest_primitive_root(std::uint64_t m);

} // namespace poskit
