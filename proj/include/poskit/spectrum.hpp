#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "poskit/group.hpp"

namespace poskit {

// Order spectrum: for each element order d, the number of elements of that
// exact order. entries only holds d with a nonzero count.
struct OrderSpectrum {
    std::map<std::uint64_t, std::uint64_t> entries;
    std::uint64_t group_order = 0;

    bool operator==(const OrderSpectrum&) const = default;

    std::uint64_t count(std::uint64_t d) const
    {
        auto it = entries.find(d);
        return it == entries.end() ? 0 : it->second;
    }
};

struct PosVerdict {
    std::uint64_t order = 0;
    std::uint64_t count = 0;
    bool divides = false;

    bool operator==(const PosVerdict&) const = default;
};

struct PosReport {
    bool is_pos = false;
    std::vector<PosVerdict> verdicts;          // ascending by order
    std::vector<std::uint64_t> witnesses;      // orders d with count(d) not dividing |G|

    bool operator==(const PosReport&) const = default;
};

// Exhaustive spectrum over the dense index range. The range is split into
// contiguous chunks, one per worker; per-worker histograms are merged by
// summation, so the result does not depend on jobs. jobs = 0 means one
// worker per available hardware thread.
OrderSpectrum order_spectrum(const Group& g, unsigned jobs = 1);

PosReport pos_check(const OrderSpectrum& s);

// lcm of all occurring orders; divides group_order.
std::uint64_t exponent(const OrderSpectrum& s);

// Lagrange exclusion: true means no subgroup (or quotient) of size sub_order
// can exist because sub_order does not divide g_order. False only means the
// criterion is silent.
bool order_divisibility_excludes(std::uint64_t sub_order, std::uint64_t g_order);

} // namespace poskit
