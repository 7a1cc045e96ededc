#include "poskit/families.hpp"

#include <string>

#include "poskit/errors.hpp"
#include "poskit/numtheory.hpp"

namespace poskit {

namespace {

std::uint64_t pow5(std::uint64_t m)
{
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < m; ++i)
        v = checked_mul(v, 5);
    return v;
}

} // namespace

GroupSpec inversion_family_spec(std::uint64_t n)
{
    if (n < 1)
        throw DomainError("family parameter n must be >= 1");
    return GroupSpec::semidirect(4, checked_mul(2, pow5(n)), 3);
}

OrderSpectrum inversion_family_closed_form(std::uint64_t n)
{
    if (n < 1)
        throw DomainError("family parameter n must be >= 1");
    OrderSpectrum s;
    s.group_order = checked_mul(8, pow5(n));
    s.entries[1] = 1;
    s.entries[2] = 5;
    s.entries[4] = 2;
    for (std::uint64_t m = 1; m <= n; ++m) {
        const std::uint64_t p = pow5(m);
        s.entries[p] = checked_mul(4, p / 5);
        s.entries[checked_mul(2, p)] = checked_mul(4, p);
        s.entries[checked_mul(4, p)] = checked_mul(8, p / 5);
    }
    return s;
}

bool verify_inversion_family(std::uint64_t n, unsigned jobs, std::uint64_t max_order)
{
    const Group g(inversion_family_spec(n), max_order);
    const OrderSpectrum brute = order_spectrum(g, jobs);
    const OrderSpectrum closed = inversion_family_closed_form(n);
    return brute == closed && pos_check(closed).is_pos;
}

GroupSpec frobenius_spec(std::uint64_t p)
{
    if (!is_prime(p))
        throw NotPrimeError(std::to_string(p) + " is not prime");
    if (p < 3)
        throw DomainError("frobenius_spec needs an odd prime");
    return GroupSpec::semidirect(p, p - 1, smallest_primitive_root(p));
}

GroupSpec fermat_family_spec(std::uint64_t p, std::uint64_t k, std::uint64_t l)
{
    if (p != 3 && p != 5 && p != 17 && p != 257 && p != 65537)
        throw DomainError(std::to_string(p) + " is not a known Fermat prime");
    if (k < 1)
        throw DomainError("exponent k must be >= 1");
    if (l >= 64 || (std::uint64_t{1} << l) < p - 1)
        throw DomainError("need 2^l >= p - 1 (and 2^l within 64 bits)");

    std::uint64_t pk = 1;
    for (std::uint64_t i = 0; i < k; ++i)
        pk = checked_mul(pk, p);
    const std::uint64_t g = smallest_primitive_root(pk);
    const std::uint64_t u = pow_mod(g, pk / p, pk);
    return GroupSpec::semidirect(pk, std::uint64_t{1} << l, u);
}

} // namespace poskit
