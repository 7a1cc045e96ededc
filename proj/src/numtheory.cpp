#include "poskit/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "poskit/errors.hpp"

namespace poskit {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw IntegerOverflowError("integer overflow in " + std::to_string(a)
                                   + " * " + std::to_string(b));
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

bool is_power_of_two(std::uint64_t n)
{
    return n != 0 && (n & (n - 1)) == 0;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> factors;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p)
            continue;
        int e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        factors.emplace_back(p, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    return factors;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = divs.size();
        std::uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

int mobius(std::uint64_t n)
{
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t m)
{
    if (m == 0)
        throw DomainError("multiplicative_order: modulus must be positive");
    u %= m;
    if (std::gcd(u, m) != 1)
        throw DomainError("multiplicative_order: " + std::to_string(u)
                          + " is not a unit mod " + std::to_string(m));
    // The order divides phi(m); peel primes off while the power stays 1.
    std::uint64_t e = euler_phi(m);
    for (const auto& [q, k] : factorize(e)) {
        (void)k;
        while (e % q == 0 && pow_mod(u, e / q, m) == 1 % m)
            e /= q;
    }
    return e;
}

std::uint64_t smallest_primitive_root(std::uint64_t m)
{
    if (m < 2)
        throw DomainError("smallest_primitive_root: modulus must be >= 2");
    const std::uint64_t phi = euler_phi(m);
    const auto phi_factors = factorize(phi);
    for (std::uint64_t g = 1; g < m; ++g) {
        if (std::gcd(g, m) != 1)
            continue;
        bool generates = true;
        for (const auto& [q, k] : phi_factors) {
            (void)k;
            if (pow_mod(g, phi / q, m) == 1) {
                generates = false;
                break;
            }
        }
        if (generates)
            return g;
    }
    throw DomainError("no primitive root mod " + std::to_string(m));
}

} // namespace poskit
