#include "doctest.h"

#include <cstdint>
#include <map>
#include <vector>

#include "poskit/errors.hpp"
#include "poskit/families.hpp"
#include "poskit/numtheory.hpp"
#include "poskit/spectrum.hpp"

using namespace poskit;

namespace {

using Entries = std::map<std::uint64_t, std::uint64_t>;

OrderSpectrum brute(const GroupSpec& spec)
{
    return order_spectrum(Group(spec));
}

} // namespace

TEST_CASE("inversion family specs")
{
    CHECK(inversion_family_spec(1) == GroupSpec::semidirect(4, 10, 3));
    CHECK(inversion_family_spec(2) == GroupSpec::semidirect(4, 50, 3));
    CHECK(Group(inversion_family_spec(1)).order() == 40);
    CHECK(Group(inversion_family_spec(2)).order() == 200);
    CHECK_THROWS_AS(inversion_family_spec(0), DomainError);
}

TEST_CASE("inversion family closed form")
{
    CHECK(inversion_family_closed_form(1).entries
          == Entries{{1, 1}, {2, 5}, {4, 2}, {5, 4}, {10, 20}, {20, 8}});
    CHECK(inversion_family_closed_form(2).entries
          == Entries{{1, 1}, {2, 5}, {4, 2}, {5, 4}, {10, 20}, {20, 8},
                     {25, 20}, {50, 100}, {100, 40}});
    CHECK_THROWS_AS(inversion_family_closed_form(0), DomainError);

    // sum identity and symbolic POS verdict, no enumeration
    std::uint64_t order = 8;
    for (std::uint64_t n = 1; n <= 12; ++n) {
        order *= 5;
        const OrderSpectrum s = inversion_family_closed_form(n);
        CHECK(s.group_order == order);
        std::uint64_t total = 0;
        for (const auto& [d, c] : s.entries) {
            (void)d;
            total += c;
        }
        CHECK(total == order);
        CHECK(pos_check(s).is_pos);
        CHECK_FALSE(is_power_of_two(order));
        CHECK(order % 3 != 0);
    }
}

TEST_CASE("closed form matches brute force")
{
    for (std::uint64_t n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(brute(inversion_family_spec(n)) == inversion_family_closed_form(n));
        CHECK(verify_inversion_family(n));
    }
    CHECK(verify_inversion_family(2, 4)); // parallel oracle run
    CHECK_THROWS_AS(verify_inversion_family(4, 1, 500), SizeLimitError);
}

TEST_CASE("frobenius specs")
{
    CHECK(frobenius_spec(5) == GroupSpec::semidirect(5, 4, 2));
    CHECK(frobenius_spec(7) == GroupSpec::semidirect(7, 6, 3));
    CHECK(frobenius_spec(3) == GroupSpec::semidirect(3, 2, 2));
    CHECK_THROWS_AS(frobenius_spec(4), NotPrimeError);
    CHECK_THROWS_AS(frobenius_spec(1), NotPrimeError);
    CHECK_THROWS_AS(frobenius_spec(2), DomainError);

    CHECK(brute(frobenius_spec(5)).entries == Entries{{1, 1}, {2, 5}, {4, 10}, {5, 4}});
    CHECK(pos_check(brute(frobenius_spec(5))).is_pos);
    CHECK(pos_check(brute(frobenius_spec(7))).is_pos);
    // p = 3 degenerates to the symmetric group on three points
    CHECK(brute(frobenius_spec(3)).entries == Entries{{1, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("frobenius POS verdict equals the divisor-totient criterion")
{
    // The spectrum of Z_p x| Z_{p-1} is c_1 = 1, c_p = p-1, and
    // c_d = p*phi(d) for d | p-1, d > 1. Dividing p(p-1) then comes down to
    // phi(d) | p-1 for every d, which fails already at p = 11 (d = 5).
    std::vector<std::uint64_t> pos_primes, non_pos_primes;
    for (std::uint64_t p = 3; p <= 97; ++p) {
        if (!is_prime(p))
            continue;
        bool arithmetic = true;
        for (std::uint64_t d : divisors(p - 1))
            if ((p - 1) % euler_phi(d) != 0)
                arithmetic = false;
        const bool verdict = pos_check(brute(frobenius_spec(p))).is_pos;
        CAPTURE(p);
        CHECK(verdict == arithmetic);
        (verdict ? pos_primes : non_pos_primes).push_back(p);
    }
    CHECK(pos_primes
          == std::vector<std::uint64_t>{3, 5, 7, 13, 17, 19, 37, 73, 97});
    CHECK(non_pos_primes
          == std::vector<std::uint64_t>{11, 23, 29, 31, 41, 43, 47, 53, 59, 61, 67,
                                        71, 79, 83, 89});
}

TEST_CASE("fermat family specs")
{
    CHECK(fermat_family_spec(3, 1, 1) == GroupSpec::semidirect(3, 2, 2));
    CHECK(fermat_family_spec(3, 2, 1) == GroupSpec::semidirect(9, 2, 8));
    CHECK(fermat_family_spec(5, 1, 2) == GroupSpec::semidirect(5, 4, 2));
    CHECK(fermat_family_spec(5, 2, 2) == GroupSpec::semidirect(25, 4, 7));
    CHECK(fermat_family_spec(17, 1, 4) == GroupSpec::semidirect(17, 16, 3));

    CHECK_THROWS_AS(fermat_family_spec(7, 1, 3), DomainError);   // not a Fermat prime
    CHECK_THROWS_AS(fermat_family_spec(5, 0, 2), DomainError);   // k < 1
    CHECK_THROWS_AS(fermat_family_spec(5, 1, 1), DomainError);   // 2^1 < 4
    CHECK_THROWS_AS(fermat_family_spec(257, 1, 7), DomainError); // 2^7 < 256
    CHECK_NOTHROW(fermat_family_spec(257, 1, 8));

    // the chosen unit is always a valid action of the right order
    for (auto [p, k, l] : {std::array<std::uint64_t, 3>{3, 1, 1}, {3, 2, 1}, {3, 3, 2},
                           {5, 1, 2}, {5, 2, 3}, {17, 1, 4}, {17, 2, 5}, {257, 1, 8}}) {
        CAPTURE(p);
        CAPTURE(k);
        CAPTURE(l);
        const GroupSpec spec = fermat_family_spec(p, k, l);
        CHECK_NOTHROW(Group{spec});
        const auto& sd = std::get<SemidirectSpec>(spec.node);
        CHECK(multiplicative_order(sd.u, sd.a) == p - 1);
    }
}

TEST_CASE("fermat family instances are POS by brute force")
{
    const std::vector<std::array<std::uint64_t, 3>> params = {
        {3, 1, 1}, {3, 2, 1}, {5, 1, 2}, {5, 2, 2}, {17, 1, 4}};
    const std::vector<Entries> expected = {
        {{1, 1}, {2, 3}, {3, 2}},
        {{1, 1}, {2, 9}, {3, 2}, {9, 6}},
        {{1, 1}, {2, 5}, {4, 10}, {5, 4}},
        {{1, 1}, {2, 25}, {4, 50}, {5, 4}, {25, 20}},
        {{1, 1}, {2, 17}, {4, 34}, {8, 68}, {16, 136}, {17, 16}},
    };
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto [p, k, l] = params[i];
        CAPTURE(p);
        CAPTURE(k);
        const OrderSpectrum s = brute(fermat_family_spec(p, k, l));
        CHECK(s.entries == expected[i]);
        CHECK(pos_check(s).is_pos);
    }
}
