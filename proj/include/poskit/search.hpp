#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "poskit/group.hpp"
#include "poskit/spectrum.hpp"

namespace poskit {

// Isomorphism class of a finite abelian group in primary decomposition:
// primary[p] is the partition e1 >= e2 >= ... encoding Z_{p^e1} x Z_{p^e2} x ...
struct AbelianShape {
    std::map<std::uint64_t, std::vector<std::uint32_t>> primary;

    bool operator==(const AbelianShape&) const = default;

    std::uint64_t order() const;
    // One entry p^e per primary cyclic factor, primes ascending, exponents
    // descending within a prime.
    std::vector<std::uint64_t> cyclic_factors() const;
    GroupSpec to_spec() const;
};

struct SearchHit {
    GroupSpec spec;
    std::uint64_t order = 0;
    OrderSpectrum spectrum;
    bool is_pos = false;
    bool order_is_power_of_2 = false;
    bool order_divisible_by_3 = false;

    // "order|d:c;d:c;..." - groups with equal signature are indistinguishable
    // to this tool (same order and spectrum), though possibly non-isomorphic.
    std::string signature() const;
};

struct SearchOptions {
    unsigned jobs = 1;
    std::uint64_t max_group_order = Group::default_max_order;
};

// Exact spectrum of an abelian group without enumeration. The number of
// solutions of x^e = 1 in a product of cyclic groups of orders n_i is
// prod gcd(e, n_i); Moebius inversion over divisors turns that into exact
// order counts.
OrderSpectrum abelian_spectrum(const AbelianShape& shape);

// One hit per isomorphism class of abelian groups of order <= max_order,
// sorted by (order, cyclic factor list descending). Includes the trivial
// group at order 1.
void enumerate_abelian(std::uint64_t max_order,
                       const std::function<void(const AbelianShape&, const SearchHit&)>& emit);
std::vector<SearchHit> enumerate_abelian(std::uint64_t max_order);

// All semidirect triples (a, b, u) with a*b <= max_order, a, b >= 2,
// 2 <= u < a, gcd(u, a) = 1, u^b = 1 mod a, emitted in (order, a, b, u)
// order with brute-force spectra. u = 1 is skipped (that is the direct
// product, covered by the abelian enumeration). No isomorphism merging.
void enumerate_semidirect(std::uint64_t max_order,
                          const std::function<void(const SearchHit&)>& emit,
                          const SearchOptions& opts = {});
std::vector<SearchHit> enumerate_semidirect(std::uint64_t max_order,
                                            const SearchOptions& opts = {});

// POS-groups from both enumerations whose order is neither a power of 2 nor
// divisible by 3, sorted by order (abelian hits before semidirect within an
// order).
std::vector<SearchHit> find_counterexamples(std::uint64_t max_order,
                                            const SearchOptions& opts = {});

} // namespace poskit
