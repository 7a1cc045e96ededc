#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "poskit/errors.hpp"
#include "poskit/families.hpp"
#include "poskit/group.hpp"
#include "poskit/search.hpp"
#include "poskit/spec_parser.hpp"
#include "poskit/spectrum.hpp"

namespace py = pybind11;

namespace {

constexpr std::uint64_t default_cap = poskit::Group::default_max_order;

py::dict spectrum_dict(const poskit::OrderSpectrum& s)
{
    py::dict d;
    for (const auto& [order, count] : s.entries)
        d[py::int_(order)] = count;
    return d;
}

py::dict report_dict(const std::string& spec_text, const poskit::OrderSpectrum& s,
                     const poskit::PosReport& r)
{
    py::dict d;
    d["spec"] = spec_text;
    d["order"] = s.group_order;
    d["spectrum"] = spectrum_dict(s);
    d["is_pos"] = r.is_pos;
    d["witnesses"] = r.witnesses;
    return d;
}

py::dict hit_dict(const poskit::SearchHit& h)
{
    py::dict d;
    d["spec"] = poskit::print_spec(h.spec);
    d["order"] = h.order;
    d["spectrum"] = spectrum_dict(h.spectrum);
    d["is_pos"] = h.is_pos;
    d["order_is_power_of_2"] = h.order_is_power_of_2;
    d["order_divisible_by_3"] = h.order_divisible_by_3;
    return d;
}

std::uint64_t checked_index(const poskit::Group& g, std::uint64_t i)
{
    if (i >= g.order())
        throw std::out_of_range("element index " + std::to_string(i)
                                + " out of range for a group of order "
                                + std::to_string(g.order()));
    return i;
}

py::dict run_pos_check(const poskit::GroupSpec& spec, unsigned jobs, std::uint64_t max_order)
{
    const poskit::Group g(spec, max_order);
    const poskit::OrderSpectrum s = poskit::order_spectrum(g, jobs);
    return report_dict(poskit::print_spec(spec), s, poskit::pos_check(s));
}

poskit::AbelianShape shape_from_dict(const py::dict& primary)
{
    poskit::AbelianShape shape;
    for (const auto& item : primary) {
        const auto p = item.first.cast<std::uint64_t>();
        auto part = item.second.cast<std::vector<std::uint32_t>>();
        shape.primary[p] = std::move(part);
    }
    return shape;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "finite group order spectra and perfect order subsets";

    py::register_exception<poskit::SpecSyntaxError>(m, "SpecSyntaxError", PyExc_ValueError);
    py::register_exception<poskit::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<poskit::InvalidActionError>(m, "InvalidActionError",
                                                       PyExc_ValueError);
    py::register_exception<poskit::SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
    py::register_exception<poskit::NotPrimeError>(m, "NotPrimeError", PyExc_ValueError);
    py::register_exception<poskit::IntegerOverflowError>(m, "IntegerOverflowError",
                                                         PyExc_OverflowError);

    py::class_<poskit::GroupSpec>(m, "GroupSpec")
        .def_static("cyclic", &poskit::GroupSpec::cyclic, py::arg("n"))
        .def_static("product", &poskit::GroupSpec::product, py::arg("factors"))
        .def_static("semidirect", &poskit::GroupSpec::semidirect, py::arg("a"),
                    py::arg("b"), py::arg("u"))
        .def_static("symmetric", &poskit::GroupSpec::symmetric, py::arg("n"))
        .def("__eq__",
             [](const poskit::GroupSpec& x, const poskit::GroupSpec& y) { return x == y; },
             py::is_operator())
        .def("__repr__", [](const poskit::GroupSpec& s) { return poskit::print_spec(s); })
        .def("__str__", [](const poskit::GroupSpec& s) { return poskit::print_spec(s); });

    py::class_<poskit::Group>(m, "Group")
        .def(py::init([](const poskit::GroupSpec& spec, std::uint64_t max_order) {
                 return poskit::Group(spec, max_order);
             }),
             py::arg("spec"), py::arg("max_order") = default_cap)
        .def(py::init([](const std::string& text, std::uint64_t max_order) {
                 return poskit::Group(poskit::parse_spec(text), max_order);
             }),
             py::arg("spec"), py::arg("max_order") = default_cap)
        .def_property_readonly("order", &poskit::Group::order)
        .def_property_readonly("spec", &poskit::Group::spec)
        .def("identity", [](const poskit::Group& g) { return g.index_of(g.identity()); })
        .def("multiply",
             [](const poskit::Group& g, std::uint64_t i, std::uint64_t j) {
                 return g.index_of(g.multiply(g.element_at(checked_index(g, i)),
                                              g.element_at(checked_index(g, j))));
             },
             py::arg("i"), py::arg("j"))
        .def("inverse",
             [](const poskit::Group& g, std::uint64_t i) {
                 return g.index_of(g.inverse(g.element_at(checked_index(g, i))));
             },
             py::arg("i"))
        .def("element_order",
             [](const poskit::Group& g, std::uint64_t i) {
                 return g.element_order(g.element_at(checked_index(g, i)));
             },
             py::arg("i"))
        .def("__len__", &poskit::Group::order)
        .def("__repr__", [](const poskit::Group& g) {
            return "Group(" + poskit::print_spec(g.spec()) + ", order="
                 + std::to_string(g.order()) + ")";
        });

    m.def("parse_spec", [](const std::string& text) { return poskit::parse_spec(text); },
          py::arg("text"));
    m.def("print_spec", &poskit::print_spec, py::arg("spec"));

    m.def(
        "order_spectrum",
        [](const poskit::GroupSpec& spec, unsigned jobs, std::uint64_t max_order) {
            return spectrum_dict(poskit::order_spectrum(poskit::Group(spec, max_order), jobs));
        },
        py::arg("spec"), py::arg("jobs") = 1, py::arg("max_order") = default_cap);
    m.def(
        "order_spectrum",
        [](const std::string& text, unsigned jobs, std::uint64_t max_order) {
            return spectrum_dict(
                poskit::order_spectrum(poskit::Group(poskit::parse_spec(text), max_order), jobs));
        },
        py::arg("spec"), py::arg("jobs") = 1, py::arg("max_order") = default_cap);

    m.def("pos_check", &run_pos_check, py::arg("spec"), py::arg("jobs") = 1,
          py::arg("max_order") = default_cap);
    m.def(
        "pos_check",
        [](const std::string& text, unsigned jobs, std::uint64_t max_order) {
            return run_pos_check(poskit::parse_spec(text), jobs, max_order);
        },
        py::arg("spec"), py::arg("jobs") = 1, py::arg("max_order") = default_cap);

    m.def(
        "exponent",
        [](const std::string& text, unsigned jobs, std::uint64_t max_order) {
            return poskit::exponent(
                poskit::order_spectrum(poskit::Group(poskit::parse_spec(text), max_order), jobs));
        },
        py::arg("spec"), py::arg("jobs") = 1, py::arg("max_order") = default_cap);
    m.def("order_divisibility_excludes", &poskit::order_divisibility_excludes,
          py::arg("sub_order"), py::arg("g_order"));

    m.def("inversion_family_spec", &poskit::inversion_family_spec, py::arg("n"));
    m.def(
        "inversion_family_closed_form",
        [](std::uint64_t n) { return spectrum_dict(poskit::inversion_family_closed_form(n)); },
        py::arg("n"));
    m.def("verify_inversion_family", &poskit::verify_inversion_family, py::arg("n"),
          py::arg("jobs") = 1, py::arg("max_order") = default_cap);
    m.def("frobenius_spec", &poskit::frobenius_spec, py::arg("p"));
    m.def("fermat_family_spec", &poskit::fermat_family_spec, py::arg("p"), py::arg("k"),
          py::arg("l"));

    m.def(
        "abelian_spectrum",
        [](const py::dict& primary) {
            return spectrum_dict(poskit::abelian_spectrum(shape_from_dict(primary)));
        },
        py::arg("primary"));
    m.def(
        "enumerate_abelian",
        [](std::uint64_t max_order) {
            py::list out;
            for (const poskit::SearchHit& h : poskit::enumerate_abelian(max_order))
                out.append(hit_dict(h));
            return out;
        },
        py::arg("max_order"));
    m.def(
        "enumerate_semidirect",
        [](std::uint64_t max_order, unsigned jobs, std::uint64_t max_group_order) {
            poskit::SearchOptions opts{jobs, max_group_order};
            py::list out;
            for (const poskit::SearchHit& h : poskit::enumerate_semidirect(max_order, opts))
                out.append(hit_dict(h));
            return out;
        },
        py::arg("max_order"), py::arg("jobs") = 1, py::arg("max_group_order") = default_cap);
    m.def(
        "find_counterexamples",
        [](std::uint64_t max_order, unsigned jobs, std::uint64_t max_group_order) {
            poskit::SearchOptions opts{jobs, max_group_order};
            py::list out;
            for (const poskit::SearchHit& h : poskit::find_counterexamples(max_order, opts))
                out.append(hit_dict(h));
            return out;
        },
        py::arg("max_order"), py::arg("jobs") = 1, py::arg("max_group_order") = default_cap);
}
