#include "poskit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <numeric>
#include <thread>
#include <utility>

#include "poskit/errors.hpp"
#include "poskit/numtheory.hpp"

namespace poskit {

std::uint64_t AbelianShape::order() const
{
    std::uint64_t n = 1;
    for (const auto& [p, part] : primary)
        for (std::uint32_t e : part)
            for (std::uint32_t i = 0; i < e; ++i)
                n = checked_mul(n, p);
    return n;
}

std::vector<std::uint64_t> AbelianShape::cyclic_factors() const
{
    std::vector<std::uint64_t> out;
    for (const auto& [p, part] : primary)
        for (std::uint32_t e : part) {
            std::uint64_t f = 1;
            for (std::uint32_t i = 0; i < e; ++i)
                f = checked_mul(f, p);
            out.push_back(f);
        }
    return out;
}

GroupSpec AbelianShape::to_spec() const
{
    const std::vector<std::uint64_t> factors = cyclic_factors();
    if (factors.empty())
        return GroupSpec::cyclic(1);
    if (factors.size() == 1)
        return GroupSpec::cyclic(factors.front());
    std::vector<GroupSpec> specs;
    specs.reserve(factors.size());
    for (std::uint64_t f : factors)
        specs.push_back(GroupSpec::cyclic(f));
    return GroupSpec::product(std::move(specs));
}

std::string SearchHit::signature() const
{
    std::string s = std::to_string(order);
    s += '|';
    bool first = true;
    for (const auto& [d, c] : spectrum.entries) {
        if (!first)
            s += ';';
        first = false;
        s += std::to_string(d);
        s += ':';
        s += std::to_string(c);
    }
    return s;
}

OrderSpectrum abelian_spectrum(const AbelianShape& shape)
{
    const std::vector<std::uint64_t> factors = shape.cyclic_factors();

    // exponent = lcm of the cyclic factor orders; every element order
    // divides it
    std::uint64_t expo = 1;
    for (std::uint64_t f : factors)
        expo = std::lcm(expo, f);

    const std::vector<std::uint64_t> divs = divisors(expo);
    auto dividing = [&](std::uint64_t e) {
        // #{x : x^e = 1} in the product
        std::uint64_t c = 1;
        for (std::uint64_t f : factors)
            c = checked_mul(c, std::gcd(e, f));
        return c;
    };

    OrderSpectrum s;
    s.group_order = shape.order();
    for (std::uint64_t d : divs) {
        std::int64_t count = 0;
        for (std::uint64_t e : divisors(d)) {
            const int mu = mobius(d / e);
            if (mu)
                count += mu * static_cast<std::int64_t>(dividing(e));
        }
        if (count > 0)
            s.entries.emplace(d, static_cast<std::uint64_t>(count));
    }
    return s;
}

namespace {

SearchHit make_hit(GroupSpec spec, std::uint64_t order, OrderSpectrum spectrum)
{
    SearchHit hit;
    hit.spec = std::move(spec);
    hit.order = order;
    hit.spectrum = std::move(spectrum);
    hit.is_pos = pos_check(hit.spectrum).is_pos;
    hit.order_is_power_of_2 = is_power_of_two(order);
    hit.order_divisible_by_3 = order % 3 == 0;
    return hit;
}

void partitions_of(std::uint32_t s, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                   const std::function<void(const std::vector<std::uint32_t>&)>& emit)
{
    if (s == 0) {
        emit(cur);
        return;
    }
    for (std::uint32_t part = std::min(s, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(s - part, part, cur, emit);
        cur.pop_back();
    }
}

void gen_shapes(std::uint64_t min_p, std::uint64_t order_acc, std::uint64_t max_order,
                AbelianShape& cur, std::vector<AbelianShape>& out)
{
    out.push_back(cur);
    for (std::uint64_t p = min_p; order_acc <= max_order / p; ++p) {
        if (!is_prime(p))
            continue;
        std::uint64_t pe = 1;
        std::uint32_t s = 0;
        while (order_acc <= max_order / (pe * p)) {
            pe *= p;
            ++s;
            std::vector<std::uint32_t> scratch;
            partitions_of(s, s, scratch, [&](const std::vector<std::uint32_t>& part) {
                cur.primary[p] = part;
                gen_shapes(p + 1, order_acc * pe, max_order, cur, out);
                cur.primary.erase(p);
            });
        }
    }
}

} // namespace

void enumerate_abelian(std::uint64_t max_order,
                       const std::function<void(const AbelianShape&, const SearchHit&)>& emit)
{
    if (max_order < 1)
        return;
    std::vector<AbelianShape> shapes;
    AbelianShape scratch;
    gen_shapes(2, 1, max_order, scratch, shapes);
    std::sort(shapes.begin(), shapes.end(), [](const AbelianShape& x, const AbelianShape& y) {
        const std::uint64_t ox = x.order(), oy = y.order();
        if (ox != oy)
            return ox < oy;
        // more-cyclic shapes first: compare factor lists descending
        return x.cyclic_factors() > y.cyclic_factors();
    });
    for (const AbelianShape& shape : shapes)
        emit(shape, make_hit(shape.to_spec(), shape.order(), abelian_spectrum(shape)));
}

std::vector<SearchHit> enumerate_abelian(std::uint64_t max_order)
{
    std::vector<SearchHit> hits;
    enumerate_abelian(max_order, [&](const AbelianShape&, const SearchHit& hit) {
        hits.push_back(hit);
    });
    return hits;
}

void enumerate_semidirect(std::uint64_t max_order,
                          const std::function<void(const SearchHit&)>& emit,
                          const SearchOptions& opts)
{
    if (max_order > opts.max_group_order)
        throw SizeLimitError("search bound exceeds the group order cap of "
                             + std::to_string(opts.max_group_order));

    struct Triple {
        std::uint64_t a, b, u;
    };
    std::vector<Triple> candidates;
    for (std::uint64_t n = 4; n <= max_order; ++n)
        for (std::uint64_t a = 2; a <= n / 2; ++a) {
            if (n % a != 0)
                continue;
            const std::uint64_t b = n / a;
            for (std::uint64_t u = 2; u < a; ++u)
                if (std::gcd(u, a) == 1 && pow_mod(u, b, a) == 1)
                    candidates.push_back({a, b, u});
        }

    std::vector<SearchHit> hits(candidates.size());
    auto compute = [&](std::size_t i) {
        const auto [a, b, u] = candidates[i];
        GroupSpec spec = GroupSpec::semidirect(a, b, u);
        const Group g(spec, opts.max_group_order);
        hits[i] = make_hit(std::move(spec), g.order(), order_spectrum(g, 1));
    };

    unsigned jobs = opts.jobs;
    if (jobs == 0) {
        jobs = std::thread::hardware_concurrency();
        if (jobs == 0)
            jobs = 1;
    }
    if (jobs <= 1 || candidates.size() < 2) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            compute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next.fetch_add(1); i < candidates.size();
                         i = next.fetch_add(1))
                        compute(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    // candidates were collected in (order, a, b, u) order already
    for (const SearchHit& hit : hits)
        emit(hit);
}

std::vector<SearchHit> enumerate_semidirect(std::uint64_t max_order, const SearchOptions& opts)
{
    std::vector<SearchHit> hits;
    enumerate_semidirect(max_order, [&](const SearchHit& hit) { hits.push_back(hit); }, opts);
    return hits;
}

std::vector<SearchHit> find_counterexamples(std::uint64_t max_order, const SearchOptions& opts)
{
    std::vector<SearchHit> out;
    auto keep = [&](const SearchHit& hit) {
        if (hit.is_pos && !hit.order_is_power_of_2 && !hit.order_divisible_by_3)
            out.push_back(hit);
    };
    enumerate_abelian(max_order, [&](const AbelianShape&, const SearchHit& hit) { keep(hit); });
    enumerate_semidirect(max_order, keep, opts);
    std::stable_sort(out.begin(), out.end(),
                     [](const SearchHit& x, const SearchHit& y) { return x.order < y.order; });
    return out;
}

} // namespace poskit
