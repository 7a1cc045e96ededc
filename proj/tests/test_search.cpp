#include "doctest.h"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "poskit/errors.hpp"
#include "poskit/numtheory.hpp"
#include "poskit/search.hpp"
#include "poskit/spec_parser.hpp"

using namespace poskit;

namespace {

using Entries = std::map<std::uint64_t, std::uint64_t>;

std::set<std::pair<std::string, std::uint64_t>> keys(const std::vector<SearchHit>& hits)
{
    std::set<std::pair<std::string, std::uint64_t>> out;
    for (const SearchHit& h : hits)
        out.emplace(print_spec(h.spec), h.order);
    return out;
}

} // namespace

TEST_CASE("abelian shape basics")
{
    const AbelianShape trivial;
    CHECK(trivial.order() == 1);
    CHECK(trivial.cyclic_factors().empty());
    CHECK(trivial.to_spec() == GroupSpec::cyclic(1));

    const AbelianShape z4{{{2, {2}}}};
    CHECK(z4.order() == 4);
    CHECK(z4.to_spec() == GroupSpec::cyclic(4));

    const AbelianShape mixed{{{2, {2, 1}}, {3, {1}}}};
    CHECK(mixed.order() == 24);
    CHECK(mixed.cyclic_factors() == std::vector<std::uint64_t>{4, 2, 3});
    CHECK(mixed.to_spec()
          == GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(2),
                                 GroupSpec::cyclic(3)}));
}

TEST_CASE("abelian spectrum examples")
{
    CHECK(abelian_spectrum(AbelianShape{{{2, {1, 1}}}}).entries == Entries{{1, 1}, {2, 3}});
    CHECK(abelian_spectrum(AbelianShape{{{2, {2, 1}}}}).count(4) == 4);
    CHECK(abelian_spectrum(AbelianShape{{{2, {1}}, {3, {1}}}}).count(3) == 2);
    CHECK(abelian_spectrum(AbelianShape{{{3, {2}}}}).entries
          == Entries{{1, 1}, {3, 2}, {9, 6}});
}

TEST_CASE("abelian closed form equals brute force up to order 60")
{
    std::size_t classes = 0;
    enumerate_abelian(60, [&](const AbelianShape& shape, const SearchHit& hit) {
        ++classes;
        CAPTURE(print_spec(hit.spec));
        CHECK(hit.spectrum == order_spectrum(Group(shape.to_spec())));
        CHECK(hit.order == shape.order());
    });
    CHECK(classes > 60); // at least one class per order, more at 4, 8, 9, ...
}

TEST_CASE("abelian enumeration lists isomorphism classes once")
{
    const std::vector<SearchHit> hits = enumerate_abelian(4);
    REQUIRE(hits.size() == 5);
    std::vector<std::string> specs;
    std::vector<std::uint64_t> orders;
    std::vector<bool> pos;
    for (const SearchHit& h : hits) {
        specs.push_back(print_spec(h.spec));
        orders.push_back(h.order);
        pos.push_back(h.is_pos);
    }
    CHECK(specs
          == std::vector<std::string>{"Z(1)", "Z(2)", "Z(3)", "Z(4)", "Z(2) x Z(2)"});
    CHECK(orders == std::vector<std::uint64_t>{1, 2, 3, 4, 4});
    CHECK(pos == std::vector<bool>{true, true, false, true, false});

    // class counts: partitions of the exponent multiset; 11 classes up to 8
    CHECK(enumerate_abelian(8).size() == 11);
    CHECK(enumerate_abelian(1).size() == 1);
}

TEST_CASE("semidirect enumeration basics")
{
    const std::vector<SearchHit> small = enumerate_semidirect(6);
    REQUIRE(small.size() == 1);
    CHECK(print_spec(small[0].spec) == "Sd(3,2,2)");
    CHECK(small[0].is_pos);
    CHECK(small[0].order == 6);
    CHECK(small[0].signature() == "6|1:1;2:3;3:2");

    // u = 1 rows never appear; every action is a genuine unit of order > 1
    for (const SearchHit& h : enumerate_semidirect(40)) {
        const auto& sd = std::get<SemidirectSpec>(h.spec.node);
        CHECK(sd.u >= 2);
        CHECK(sd.u < sd.a);
        CHECK(pow_mod(sd.u, sd.b, sd.a) == 1);
        CHECK(h.order == sd.a * sd.b);
    }
}

TEST_CASE("semidirect POS hits up to order 40")
{
    std::vector<std::pair<std::string, std::uint64_t>> pos_hits;
    for (const SearchHit& h : enumerate_semidirect(40))
        if (h.is_pos)
            pos_hits.emplace_back(print_spec(h.spec), h.order);
    const std::vector<std::pair<std::string, std::uint64_t>> expected = {
        {"Sd(3,2,2)", 6},   {"Sd(3,4,2)", 12},  {"Sd(9,2,8)", 18},
        {"Sd(5,4,2)", 20},  {"Sd(5,4,3)", 20},  {"Sd(5,4,4)", 20},
        {"Sd(3,8,2)", 24},  {"Sd(6,4,5)", 24},  {"Sd(9,4,8)", 36},
        {"Sd(4,10,3)", 40}, {"Sd(5,8,2)", 40},  {"Sd(5,8,3)", 40},
        {"Sd(5,8,4)", 40},  {"Sd(20,2,11)", 40},
    };
    CHECK(pos_hits == expected);
}

TEST_CASE("hit flags and verdicts recompute from their fields")
{
    auto check_hit = [](const SearchHit& h) {
        CHECK(h.order_is_power_of_2 == is_power_of_two(h.order));
        CHECK(h.order_divisible_by_3 == (h.order % 3 == 0));
        CHECK(h.is_pos == pos_check(h.spectrum).is_pos);
        CHECK(h.spectrum.group_order == h.order);
    };
    for (const SearchHit& h : enumerate_semidirect(40))
        check_hit(h);
    for (const SearchHit& h : enumerate_abelian(40))
        check_hit(h);
}

TEST_CASE("counterexample scan fixtures")
{
    // order 20 = 2^2 * 5 is the smallest: three actions of Z_4 on Z_5
    const std::vector<SearchHit> at20 = find_counterexamples(20);
    REQUIRE(at20.size() == 3);
    CHECK(print_spec(at20[0].spec) == "Sd(5,4,2)");
    CHECK(print_spec(at20[1].spec) == "Sd(5,4,3)");
    CHECK(print_spec(at20[2].spec) == "Sd(5,4,4)");
    for (const SearchHit& h : at20) {
        CHECK(h.is_pos);
        CHECK_FALSE(h.order_is_power_of_2);
        CHECK_FALSE(h.order_divisible_by_3);
        CHECK(h.order == 20);
    }
    CHECK(at20[0].spectrum.entries == Entries{{1, 1}, {2, 5}, {4, 10}, {5, 4}});
    CHECK(at20[2].spectrum.entries
          == Entries{{1, 1}, {2, 1}, {4, 10}, {5, 4}, {10, 4}});

    // nothing new appears between 20 and 40
    CHECK(keys(find_counterexamples(39)) == keys(at20));

    const std::vector<SearchHit> at40 = find_counterexamples(40);
    CHECK(keys(at40)
          == std::set<std::pair<std::string, std::uint64_t>>{
              {"Sd(5,4,2)", 20},  {"Sd(5,4,3)", 20}, {"Sd(5,4,4)", 20},
              {"Sd(4,10,3)", 40}, {"Sd(5,8,2)", 40}, {"Sd(5,8,3)", 40},
              {"Sd(5,8,4)", 40},  {"Sd(20,2,11)", 40}});
}

TEST_CASE("counterexample properties")
{
    SearchOptions opts;
    opts.jobs = 4;
    const std::vector<SearchHit> hits = find_counterexamples(100, opts);

    // subset of the enumerations, closed under the three predicates
    const auto enumerated = keys(enumerate_semidirect(100, opts));
    for (const SearchHit& h : hits) {
        CHECK(h.is_pos);
        CHECK_FALSE(h.order_is_power_of_2);
        CHECK_FALSE(h.order_divisible_by_3);
        CHECK(enumerated.count({print_spec(h.spec), h.order}) == 1);
    }

    // sorted by order, monotone in the bound
    for (std::size_t i = 1; i < hits.size(); ++i)
        CHECK(hits[i - 1].order <= hits[i].order);
    const auto at40 = keys(find_counterexamples(40, opts));
    const auto at100 = keys(hits);
    for (const auto& k : at40)
        CHECK(at100.count(k) == 1);
}

TEST_CASE("no abelian counterexamples up to order 1000")
{
    std::size_t found = 0;
    for (const SearchHit& h : enumerate_abelian(1000))
        if (h.is_pos && !h.order_is_power_of_2 && !h.order_divisible_by_3)
            ++found;
    CHECK(found == 0);
}

TEST_CASE("full scan to the CI bound")
{
    SearchOptions opts;
    opts.jobs = 4;
    const std::vector<SearchHit> hits = find_counterexamples(400, opts);
    std::map<std::uint64_t, std::size_t> by_order;
    for (const SearchHit& h : hits)
        ++by_order[h.order];
    CHECK(by_order
          == std::map<std::uint64_t, std::size_t>{{20, 3}, {40, 5}, {80, 3}, {100, 3},
                                                  {160, 3}, {200, 5}, {272, 12},
                                                  {320, 3}, {400, 3}});
    const auto all = keys(hits);
    CHECK(all.count({"Sd(4,50,3)", 200}) == 1);
    CHECK(all.count({"Sd(100,2,51)", 200}) == 1);
    CHECK(all.count({"Sd(17,16,3)", 272}) == 1);
    CHECK(all.count({"Sd(25,16,7)", 400}) == 1);
}

TEST_CASE("enumeration is deterministic across worker counts")
{
    SearchOptions serial;
    serial.jobs = 1;
    SearchOptions wide;
    wide.jobs = 4;
    const std::vector<SearchHit> a = enumerate_semidirect(60, serial);
    const std::vector<SearchHit> b = enumerate_semidirect(60, wide);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].spec == b[i].spec);
        CHECK(a[i].spectrum == b[i].spectrum);
        CHECK(a[i].signature() == b[i].signature());
    }
}

TEST_CASE("search bound respects the size cap")
{
    SearchOptions opts;
    opts.max_group_order = 50;
    CHECK_THROWS_AS(enumerate_semidirect(100, opts), SizeLimitError);
    CHECK_THROWS_AS(find_counterexamples(100, opts), SizeLimitError);
    CHECK_NOTHROW(enumerate_semidirect(50, opts));
}
