#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "poskit/errors.hpp"
#include "poskit/families.hpp"
#include "poskit/group.hpp"
#include "poskit/numtheory.hpp"
#include "poskit/search.hpp"
#include "poskit/spec_parser.hpp"
#include "poskit/spectrum.hpp"

namespace {

using nlohmann::ordered_json;
using poskit::Group;
using poskit::GroupSpec;
using poskit::OrderSpectrum;
using poskit::PosReport;
using poskit::SearchHit;

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* truefalse(bool b) { return b ? "true" : "false"; }

// shared by spectrum, pos, and (per selection) search
struct Common {
    std::string format = "text";
    unsigned jobs = 0;
    std::uint64_t cap = Group::default_max_order;
    bool verbose = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads, 0 = all cores")
        ->capture_default_str();
    sub->add_option("--max-group-order", c.cap, "reject groups larger than this")
        ->envname("POSKIT_MAX_ORDER")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--verbose", c.verbose, "print run metadata to stderr");
}

void verbose_note(const Common& c)
{
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - c.start)
                        .count();
    std::cerr << "jobs=" << c.jobs << " max-group-order=" << c.cap
              << " elapsed_ms=" << ms << "\n";
}

ordered_json spectrum_json(const OrderSpectrum& s)
{
    ordered_json arr = ordered_json::array();
    for (const auto& [d, cnt] : s.entries)
        arr.push_back({{"order", d}, {"count", cnt}});
    return arr;
}

ordered_json report_json(const std::string& spec_text, const OrderSpectrum& s,
                         const PosReport& r)
{
    ordered_json j;
    j["spec"] = spec_text;
    j["order"] = s.group_order;
    j["spectrum"] = spectrum_json(s);
    j["is_pos"] = r.is_pos;
    j["witnesses"] = r.witnesses;
    return j;
}

// spectrum and pos differ only in the text/csv body; both carry the POS
// verdict in the exit status
int run_report(const std::string& spec_text, const Common& c, bool pos_view)
{
    const GroupSpec spec = poskit::parse_spec(spec_text);
    const Group g(spec, c.cap);
    const OrderSpectrum s = poskit::order_spectrum(g, c.jobs);
    const PosReport r = poskit::pos_check(s);
    const std::string canon = poskit::print_spec(spec);

    if (c.format == "json") {
        std::cout << report_json(canon, s, r).dump(2) << "\n";
    } else if (c.format == "csv") {
        if (pos_view) {
            std::cout << "order,count,divides\n";
            for (const auto& v : r.verdicts)
                std::cout << v.order << "," << v.count << "," << truefalse(v.divides)
                          << "\n";
        } else {
            std::cout << "order,count\n";
            for (const auto& [d, cnt] : s.entries)
                std::cout << d << "," << cnt << "\n";
        }
    } else {
        std::cout << "spec: " << canon << "\n";
        std::cout << "order: " << g.order() << "\n";
        if (pos_view) {
            for (const auto& v : r.verdicts)
                std::cout << "  order " << v.order << ": count " << v.count
                          << (v.divides ? " divides " : " does not divide ")
                          << g.order() << "\n";
        } else {
            std::cout << "spectrum:\n";
            for (const auto& [d, cnt] : s.entries)
                std::cout << "  " << d << ": " << cnt << "\n";
        }
        std::cout << "pos: " << yesno(r.is_pos) << "\n";
        if (!r.witnesses.empty()) {
            std::cout << "witnesses:";
            for (std::uint64_t w : r.witnesses)
                std::cout << " " << w;
            std::cout << "\n";
        }
    }
    if (c.verbose)
        verbose_note(c);
    return r.is_pos ? 0 : 1;
}

int run_verify_paper(std::uint64_t n_max, const Common& c, bool corrupt)
{
    struct Check {
        std::uint64_t n;
        bool pass;
    };
    constexpr std::uint64_t symbolic_n_max = 12;

    auto closed_form = [&](std::uint64_t n) {
        OrderSpectrum s = poskit::inversion_family_closed_form(n);
        if (corrupt)
            s.entries[2] += 1;
        return s;
    };

    std::vector<Check> symbolic;
    for (std::uint64_t n = 1; n <= symbolic_n_max; ++n) {
        const OrderSpectrum s = closed_form(n);
        std::uint64_t total = 0;
        for (const auto& [d, cnt] : s.entries) {
            (void)d;
            total += cnt;
        }
        const std::uint64_t expect = s.group_order;
        const bool pass = total == expect && poskit::pos_check(s).is_pos
            && !poskit::is_power_of_two(expect) && expect % 3 != 0;
        symbolic.push_back({n, pass});
    }

    std::vector<Check> oracle;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const OrderSpectrum closed = poskit::inversion_family_closed_form(n);
        if (closed.group_order > c.cap)
            throw poskit::SizeLimitError(
                "family order " + std::to_string(closed.group_order) + " at n="
                + std::to_string(n) + " exceeds the cap of " + std::to_string(c.cap));
        const Group g(poskit::inversion_family_spec(n), c.cap);
        const OrderSpectrum brute = poskit::order_spectrum(g, c.jobs);
        const bool pass = brute == closed_form(n) && poskit::pos_check(brute).is_pos;
        oracle.push_back({n, pass});
    }

    std::size_t sym_ok = 0, ora_ok = 0;
    for (const Check& k : symbolic)
        sym_ok += k.pass;
    for (const Check& k : oracle)
        ora_ok += k.pass;
    const bool all = sym_ok == symbolic.size() && ora_ok == oracle.size();

    if (c.format == "json") {
        ordered_json j;
        j["symbolic"] = ordered_json::array();
        for (const Check& k : symbolic)
            j["symbolic"].push_back({{"n", k.n}, {"pass", k.pass}});
        j["oracle"] = ordered_json::array();
        for (const Check& k : oracle)
            j["oracle"].push_back({{"n", k.n}, {"pass", k.pass}});
        j["all_pass"] = all;
        std::cout << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << "check,n,pass\n";
        for (const Check& k : symbolic)
            std::cout << "symbolic," << k.n << "," << truefalse(k.pass) << "\n";
        for (const Check& k : oracle)
            std::cout << "oracle," << k.n << "," << truefalse(k.pass) << "\n";
    } else {
        for (const Check& k : symbolic)
            std::cout << "symbolic n=" << k.n
                      << (k.pass ? ": ok (sum identity, all counts divide, order not a"
                                   " 2-power, order not divisible by 3)"
                                 : ": FAIL")
                      << "\n";
        for (const Check& k : oracle)
            std::cout << "oracle n=" << k.n
                      << (k.pass ? ": ok (closed form matches brute force, POS)"
                                 : ": MISMATCH")
                      << "\n";
        std::cout << (all ? "verified: " : "FAILED: ") << ora_ok << "/" << oracle.size()
                  << " oracle matches, " << sym_ok << "/" << symbolic.size()
                  << " symbolic checks\n";
    }
    if (c.verbose)
        verbose_note(c);
    return all ? 0 : 1;
}

int run_search(std::uint64_t max_order, const std::string& family, bool counterexamples,
               const Common& c)
{
    if (max_order > c.cap)
        throw poskit::SizeLimitError("search bound exceeds the group order cap of "
                                     + std::to_string(c.cap));
    poskit::SearchOptions opts;
    opts.jobs = c.jobs;
    opts.max_group_order = c.cap;

    std::vector<SearchHit> hits;
    const bool want_abelian = family == "abelian" || family == "all";
    const bool want_semidirect = family == "semidirect" || family == "all";
    if (counterexamples && want_abelian && want_semidirect) {
        hits = poskit::find_counterexamples(max_order, opts);
    } else {
        if (want_abelian)
            hits = poskit::enumerate_abelian(max_order);
        if (want_semidirect) {
            std::vector<SearchHit> sd = poskit::enumerate_semidirect(max_order, opts);
            hits.insert(hits.end(), std::make_move_iterator(sd.begin()),
                        std::make_move_iterator(sd.end()));
        }
        if (counterexamples) {
            std::erase_if(hits, [](const SearchHit& h) {
                return !h.is_pos || h.order_is_power_of_2 || h.order_divisible_by_3;
            });
            std::stable_sort(hits.begin(), hits.end(),
                             [](const SearchHit& x, const SearchHit& y) {
                                 return x.order < y.order;
                             });
        }
    }

    if (c.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const SearchHit& h : hits) {
            ordered_json j;
            j["spec"] = poskit::print_spec(h.spec);
            j["order"] = h.order;
            j["spectrum"] = spectrum_json(h.spectrum);
            j["is_pos"] = h.is_pos;
            j["order_is_power_of_2"] = h.order_is_power_of_2;
            j["order_divisible_by_3"] = h.order_divisible_by_3;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << "spec,order,is_pos,pow2,div3,signature\n";
        for (const SearchHit& h : hits)
            std::cout << "\"" << poskit::print_spec(h.spec) << "\"," << h.order << ","
                      << truefalse(h.is_pos) << "," << truefalse(h.order_is_power_of_2)
                      << "," << truefalse(h.order_divisible_by_3) << ","
                      << h.signature() << "\n";
    } else {
        for (const SearchHit& h : hits)
            std::cout << poskit::print_spec(h.spec) << " order=" << h.order
                      << " pos=" << yesno(h.is_pos)
                      << " pow2=" << yesno(h.order_is_power_of_2)
                      << " div3=" << yesno(h.order_divisible_by_3)
                      << " spectrum=" << h.signature() << "\n";
        std::cout << "hits: " << hits.size() << "\n";
    }
    if (c.verbose)
        verbose_note(c);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"finite group order spectra and perfect order subsets"};
    app.require_subcommand(1);

    std::string spectrum_text;
    Common spectrum_common;
    CLI::App* cmd_spectrum =
        app.add_subcommand("spectrum", "order spectrum of a group expression");
    cmd_spectrum->add_option("spec", spectrum_text, "group spec, e.g. \"Sd(4,10,3)\"")
        ->required();
    add_common(cmd_spectrum, spectrum_common);

    std::string pos_text;
    Common pos_common;
    CLI::App* cmd_pos =
        app.add_subcommand("pos", "perfect order subsets verdict (exit 0 = POS)");
    cmd_pos->add_option("spec", pos_text, "group spec, e.g. \"S(3)\"")->required();
    add_common(cmd_pos, pos_common);

    std::uint64_t n_max = 3;
    bool corrupt = false;
    Common verify_common;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify-paper", "check the published closed-form table for Sd(4,2*5^n,3)");
    cmd_verify->add_option("--n-max", n_max, "largest n verified by brute force")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_verify->add_flag("--corrupt-closed-form", corrupt)->group("");
    add_common(cmd_verify, verify_common);

    std::uint64_t max_order = 40;
    std::string family = "all";
    bool counterexamples = false;
    Common search_common;
    CLI::App* cmd_search =
        app.add_subcommand("search", "enumerate families and report POS groups");
    cmd_search->add_option("--max-order", max_order, "largest group order to scan")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_search->add_option("--family", family, "which families to enumerate")
        ->check(CLI::IsMember({"abelian", "semidirect", "all"}))
        ->capture_default_str();
    cmd_search->add_flag("--counterexamples", counterexamples,
                         "only POS groups whose order is neither a 2-power nor"
                         " divisible by 3");
    add_common(cmd_search, search_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_spectrum->parsed())
            return run_report(spectrum_text, spectrum_common, false);
        if (cmd_pos->parsed())
            return run_report(pos_text, pos_common, true);
        if (cmd_verify->parsed())
            return run_verify_paper(n_max, verify_common, corrupt);
        return run_search(max_order, family, counterexamples, search_common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
