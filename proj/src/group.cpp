#include "poskit/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "poskit/errors.hpp"
#include "poskit/numtheory.hpp"

namespace poskit {

GroupSpec GroupSpec::cyclic(std::uint64_t n)
{
    return GroupSpec{CyclicSpec{n}};
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors)
{
    return GroupSpec{ProductSpec{std::move(factors)}};
}

GroupSpec GroupSpec::semidirect(std::uint64_t a, std::uint64_t b, std::uint64_t u)
{
    return GroupSpec{SemidirectSpec{a, b, u}};
}

GroupSpec GroupSpec::symmetric(std::uint64_t n)
{
    return GroupSpec{SymmetricSpec{n}};
}

namespace {

constexpr std::uint32_t max_symmetric_degree = 8;

std::uint64_t factorial(std::uint32_t n)
{
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

Group::Group(GroupSpec spec, std::uint64_t max_order)
    : spec_(std::move(spec))
{
    compile(spec_, max_order);
    offsets_.resize(parts_.size());
    std::size_t off = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        offsets_[i] = off;
        off += part_width(parts_[i]);
    }
    coord_count_ = off;
    order_factors_ = factorize(order_);
}

void Group::compile(const GroupSpec& node, std::uint64_t max_order)
{
    auto grow_order = [&](std::uint64_t factor) {
        std::uint64_t next;
        if (__builtin_mul_overflow(order_, factor, &next) || next > max_order)
            throw SizeLimitError("group order exceeds the cap of "
                                 + std::to_string(max_order));
        order_ = next;
    };

    if (const auto* c = std::get_if<CyclicSpec>(&node.node)) {
        if (c->n < 1)
            throw DomainError("cyclic order must be >= 1");
        grow_order(c->n);
        parts_.push_back(CyclicPart{c->n});
    } else if (const auto* d = std::get_if<ProductSpec>(&node.node)) {
        if (d->factors.empty())
            throw DomainError("direct product needs at least one factor");
        for (const auto& f : d->factors)
            compile(f, max_order);
    } else if (const auto* s = std::get_if<SemidirectSpec>(&node.node)) {
        if (s->a < 1 || s->b < 1)
            throw DomainError("semidirect factors must be >= 1");
        const std::uint64_t u = s->u % s->a;
        if (std::gcd(u, s->a) != 1)
            throw InvalidActionError("u = " + std::to_string(s->u)
                                     + " is not a unit mod " + std::to_string(s->a));
        if (pow_mod(u, s->b, s->a) != 1 % s->a)
            throw InvalidActionError("u^b != 1 (mod a) for (a, b, u) = ("
                                     + std::to_string(s->a) + ", " + std::to_string(s->b)
                                     + ", " + std::to_string(s->u) + ")");
        grow_order(s->a);
        grow_order(s->b);
        SemidirectPart part{s->a, s->b, u, {}};
        const std::uint64_t ord = multiplicative_order(u, s->a);
        part.upow.reserve(ord);
        std::uint64_t pw = 1 % s->a;
        for (std::uint64_t j = 0; j < ord; ++j) {
            part.upow.push_back(pw);
            pw = mul_mod(pw, u, s->a);
        }
        parts_.push_back(std::move(part));
    } else {
        const auto& y = std::get<SymmetricSpec>(node.node);
        if (y.n < 1 || y.n > max_symmetric_degree)
            throw DomainError("symmetric degree must be in [1, "
                              + std::to_string(max_symmetric_degree) + "]");
        const auto n = static_cast<std::uint32_t>(y.n);
        grow_order(factorial(n));
        parts_.push_back(SymmetricPart{n, factorial(n)});
    }
}

std::uint64_t Group::part_order(const Part& part) const
{
    if (const auto* c = std::get_if<CyclicPart>(&part))
        return c->n;
    if (const auto* s = std::get_if<SemidirectPart>(&part))
        return s->a * s->b;
    return std::get<SymmetricPart>(part).order;
}

std::size_t Group::part_width(const Part& part) const
{
    if (std::holds_alternative<CyclicPart>(part))
        return 1;
    if (std::holds_alternative<SemidirectPart>(part))
        return 2;
    return std::get<SymmetricPart>(part).n;
}

Element Group::identity() const
{
    std::vector<std::uint64_t> coords(coord_count_, 0);
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (const auto* s = std::get_if<SymmetricPart>(&parts_[i]))
            for (std::uint32_t j = 0; j < s->n; ++j)
                coords[offsets_[i] + j] = j;
    return Element(std::move(coords));
}

bool Group::is_identity(const Element& p) const
{
    return p == identity();
}

bool Group::is_valid(const Element& p) const
{
    if (p.size() != coord_count_)
        return false;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const std::size_t off = offsets_[i];
        if (const auto* c = std::get_if<CyclicPart>(&parts_[i])) {
            if (p[off] >= c->n)
                return false;
        } else if (const auto* s = std::get_if<SemidirectPart>(&parts_[i])) {
            if (p[off] >= s->a || p[off + 1] >= s->b)
                return false;
        } else {
            const auto& y = std::get<SymmetricPart>(parts_[i]);
            std::uint32_t seen = 0;
            for (std::uint32_t j = 0; j < y.n; ++j) {
                const std::uint64_t img = p[off + j];
                if (img >= y.n || (seen & (1u << img)))
                    return false;
                seen |= 1u << img;
            }
        }
    }
    return true;
}

Element Group::multiply(const Element& p, const Element& q) const
{
    std::vector<std::uint64_t> out(coord_count_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const std::size_t off = offsets_[i];
        if (const auto* c = std::get_if<CyclicPart>(&parts_[i])) {
            out[off] = (p[off] + q[off]) % c->n;
        } else if (const auto* s = std::get_if<SemidirectPart>(&parts_[i])) {
            const std::uint64_t twist = s->upow[p[off + 1] % s->upow.size()];
            out[off] = (p[off] + mul_mod(twist, q[off], s->a)) % s->a;
            out[off + 1] = (p[off + 1] + q[off + 1]) % s->b;
        } else {
            // composition applies q first, then p
            const auto& y = std::get<SymmetricPart>(parts_[i]);
            for (std::uint32_t j = 0; j < y.n; ++j)
                out[off + j] = p[off + q[off + j]];
        }
    }
    return Element(std::move(out));
}

Element Group::inverse(const Element& p) const
{
    std::vector<std::uint64_t> out(coord_count_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const std::size_t off = offsets_[i];
        if (const auto* c = std::get_if<CyclicPart>(&parts_[i])) {
            out[off] = (c->n - p[off]) % c->n;
        } else if (const auto* s = std::get_if<SemidirectPart>(&parts_[i])) {
            const std::uint64_t yinv = (s->b - p[off + 1]) % s->b;
            const std::uint64_t twist = s->upow[yinv % s->upow.size()];
            out[off] = (s->a - mul_mod(twist, p[off], s->a)) % s->a;
            out[off + 1] = yinv;
        } else {
            const auto& y = std::get<SymmetricPart>(parts_[i]);
            for (std::uint32_t j = 0; j < y.n; ++j)
                out[off + p[off + j]] = j;
        }
    }
    return Element(std::move(out));
}

Element Group::power(const Element& p, std::uint64_t k) const
{
    Element acc = identity();
    Element base = p;
    while (k) {
        if (k & 1)
            acc = multiply(acc, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return acc;
}

std::uint64_t Group::element_order(const Element& p) const
{
    const Element id = identity();
    std::uint64_t e = order_;
    for (const auto& [q, mult] : order_factors_) {
        (void)mult;
        while (e % q == 0 && power(p, e / q) == id)
            e /= q;
    }
    return e;
}

std::uint64_t Group::index_of(const Element& p) const
{
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const std::size_t off = offsets_[i];
        std::uint64_t sub = 0;
        if (std::holds_alternative<CyclicPart>(parts_[i])) {
            sub = p[off];
        } else if (const auto* s = std::get_if<SemidirectPart>(&parts_[i])) {
            sub = p[off] * s->b + p[off + 1];
        } else {
            // Lehmer rank of the permutation
            const auto& y = std::get<SymmetricPart>(parts_[i]);
            for (std::uint32_t j = 0; j < y.n; ++j) {
                std::uint32_t smaller = 0;
                for (std::uint32_t k = j + 1; k < y.n; ++k)
                    if (p[off + k] < p[off + j])
                        ++smaller;
                sub = sub * (y.n - j) + smaller;
            }
        }
        index = index * part_order(parts_[i]) + sub;
    }
    return index;
}

Element Group::element_at(std::uint64_t index) const
{
    std::vector<std::uint64_t> coords(coord_count_);
    for (std::size_t i = parts_.size(); i-- > 0;) {
        const std::size_t off = offsets_[i];
        const std::uint64_t n = part_order(parts_[i]);
        std::uint64_t sub = index % n;
        index /= n;
        if (std::holds_alternative<CyclicPart>(parts_[i])) {
            coords[off] = sub;
        } else if (const auto* s = std::get_if<SemidirectPart>(&parts_[i])) {
            coords[off] = sub / s->b;
            coords[off + 1] = sub % s->b;
        } else {
            // Lehmer unrank
            const auto& y = std::get<SymmetricPart>(parts_[i]);
            std::uint64_t code[max_symmetric_degree];
            for (std::uint32_t j = y.n; j-- > 0;) {
                code[j] = sub % (y.n - j);
                sub /= y.n - j;
            }
            std::vector<std::uint64_t> pool(y.n);
            std::iota(pool.begin(), pool.end(), 0);
            for (std::uint32_t j = 0; j < y.n; ++j) {
                coords[off + j] = pool[code[j]];
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(code[j]));
            }
        }
    }
    return Element(std::move(coords));
}

} // namespace poskit
