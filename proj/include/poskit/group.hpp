#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace poskit {

struct GroupSpec;

/// Z_n under addition mod n.
struct CyclicSpec {
    std::uint64_t n = 1;
    bool operator==(const CyclicSpec&) const = default;
};

/// Direct product of the listed factors, in order.
struct ProductSpec {
    std::vector<GroupSpec> factors;
    bool operator==(const ProductSpec&) const = default;
};

/// Z_a x| Z_b on pairs (x, y) with
///   (x1, y1) * (x2, y2) = (x1 + u^y1 * x2 mod a, y1 + y2 mod b).
/// Requires gcd(u, a) = 1 and u^b = 1 (mod a) so that y -> (x -> u^y x)
/// is a homomorphism Z_b -> Aut(Z_a). u = a - 1 is the inversion action.
struct SemidirectSpec {
    std::uint64_t a = 1;
    std::uint64_t b = 1;
    std::uint64_t u = 0;
    bool operator==(const SemidirectSpec&) const = default;
};

/// Symmetric group on {0, ..., n-1}; n is capped at 8 when a group is built.
struct SymmetricSpec {
    std::uint64_t n = 1;
    bool operator==(const SymmetricSpec&) const = default;
};

/// Compositional description of a finite group. Semantic validation
/// (cyclic n >= 1, unit condition, symmetric degree cap) happens when a
/// Group is built, not here, so any syntactically well-formed tree can be
/// represented and round-tripped through the text grammar.
struct GroupSpec {
    std::variant<CyclicSpec, ProductSpec, SemidirectSpec, SymmetricSpec> node;

    static GroupSpec cyclic(std::uint64_t n);
    static GroupSpec product(std::vector<GroupSpec> factors);
    static GroupSpec semidirect(std::uint64_t a, std::uint64_t b, std::uint64_t u);
    static GroupSpec symmetric(std::uint64_t n);

    bool operator==(const GroupSpec&) const = default;
};

/// One group element in canonical coordinates. The layout is owned by the
/// Group that produced it: one residue per cyclic part, an (x, y) pair per
/// semidirect part, n images per symmetric part, concatenated.
class Element {
public:
    Element() = default;
    explicit Element(std::vector<std::uint64_t> coords)
        : c_(std::move(coords))
    {
    }

    std::span<const std::uint64_t> coords() const { return c_; }
    std::size_t size() const { return c_.size(); }
    std::uint64_t operator[](std::size_t i) const { return c_[i]; }

    bool operator==(const Element&) const = default;

private:
    friend class Group;
    std::vector<std::uint64_t> c_;
};

/// A finite group built from a GroupSpec: exact arithmetic plus a dense
/// index <-> element bijection on [0, order). Immutable after construction;
/// all member functions are const and safe to call concurrently.
class Group {
public:
    static constexpr std::uint64_t default_max_order = 10'000'000;

    /// Validates the spec and compiles it into a flat direct-product
    /// decomposition. Throws DomainError / InvalidActionError on invalid
    /// specs and SizeLimitError when the order exceeds max_order.
    explicit Group(GroupSpec spec, std::uint64_t max_order = default_max_order);

    const GroupSpec& spec() const { return spec_; }
    std::uint64_t order() const { return order_; }
    std::size_t coord_count() const { return coord_count_; }

    Element identity() const;
    bool is_identity(const Element& p) const;
    /// True iff every coordinate is canonical for this group's layout.
    bool is_valid(const Element& p) const;

    Element multiply(const Element& p, const Element& q) const;
    Element inverse(const Element& p) const;
    Element power(const Element& p, std::uint64_t k) const;

    /// Smallest k >= 1 with p^k = identity. Starts from the group order and
    /// repeatedly divides out primes q while p^(e/q) stays trivial.
    std::uint64_t element_order(const Element& p) const;

    std::uint64_t index_of(const Element& p) const;
    Element element_at(std::uint64_t index) const;

private:
    struct CyclicPart {
        std::uint64_t n;
    };
    struct SemidirectPart {
        std::uint64_t a, b, u;
        std::vector<std::uint64_t> upow; // u^j mod a for j < ord(u)
    };
    struct SymmetricPart {
        std::uint32_t n;
        std::uint64_t order; // n!
    };
    using Part = std::variant<CyclicPart, SemidirectPart, SymmetricPart>;

    void compile(const GroupSpec& node, std::uint64_t max_order);
    std::uint64_t part_order(const Part& part) const;
    std::size_t part_width(const Part& part) const;

    GroupSpec spec_;
    std::uint64_t order_ = 1;
    std::size_t coord_count_ = 0;
    std::vector<Part> parts_;
    std::vector<std::size_t> offsets_; // coord offset of each part
    std::vector<std::pair<std::uint64_t, int>> order_factors_;
};

} // namespace poskit
