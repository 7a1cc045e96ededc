#include "poskit/spectrum.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#include "poskit/numtheory.hpp"

namespace poskit {

namespace {

// Every element order divides |G|, so histogram slots are indexed by the
// position of the order in the sorted divisor list.
void count_range(const Group& g, const std::vector<std::uint64_t>& divs,
                 std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& slots)
{
    for (std::uint64_t i = lo; i < hi; ++i) {
        const std::uint64_t d = g.element_order(g.element_at(i));
        const auto it = std::lower_bound(divs.begin(), divs.end(), d);
        slots[static_cast<std::size_t>(it - divs.begin())] += 1;
    }
}

} // namespace

OrderSpectrum order_spectrum(const Group& g, unsigned jobs)
{
    if (jobs == 0) {
        jobs = std::thread::hardware_concurrency();
        if (jobs == 0)
            jobs = 1;
    }
    const std::uint64_t n = g.order();
    if (jobs > n)
        jobs = static_cast<unsigned>(n);

    const std::vector<std::uint64_t> divs = divisors(n);
    std::vector<std::vector<std::uint64_t>> hist(jobs,
        std::vector<std::uint64_t>(divs.size(), 0));

    if (jobs == 1) {
        count_range(g, divs, 0, n, hist[0]);
    } else {
        const std::uint64_t chunk = (n + jobs - 1) / jobs;
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            const std::uint64_t lo = chunk * w;
            const std::uint64_t hi = std::min(n, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    count_range(g, divs, lo, hi, hist[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool)
            t.join();
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    OrderSpectrum s;
    s.group_order = n;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        std::uint64_t total = 0;
        for (unsigned w = 0; w < jobs; ++w)
            total += hist[w][i];
        if (total)
            s.entries.emplace(divs[i], total);
    }
    return s;
}

PosReport pos_check(const OrderSpectrum& s)
{
    PosReport r;
    r.is_pos = true;
    for (const auto& [d, c] : s.entries) {
        const bool ok = s.group_order % c == 0;
        r.verdicts.push_back(PosVerdict{d, c, ok});
        if (!ok) {
            r.is_pos = false;
            r.witnesses.push_back(d);
        }
    }
    return r;
}

std::uint64_t exponent(const OrderSpectrum& s)
{
    std::uint64_t e = 1;
    for (const auto& [d, c] : s.entries) {
        (void)c;
        e = std::lcm(e, d);
    }
    return e;
}

bool order_divisibility_excludes(std::uint64_t sub_order, std::uint64_t g_order)
{
    return g_order % sub_order != 0;
}

} // namespace poskit
