#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pocka/error.hpp"
#include "pocka/guarded.hpp"
#include "pocka/litmus.hpp"
#include "pocka/render.hpp"
#include "pocka/semantics.hpp"
#include "pocka/syntax.hpp"

namespace py = pybind11;
using namespace pocka;

namespace {

std::vector<std::string> state_texts(const std::vector<State>& ss) {
    std::vector<std::string> out;
    for (const auto& s : ss) out.push_back(render_state(s));
    return out;
}

} // namespace

PYBIND11_MODULE(_pocka, m) {
    m.doc() = "Bindings for the POCKA library; values cross the boundary in their text forms.";

    auto usage = py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);
    (void)usage;

    py::class_<Universe>(m, "Universe")
        .def(py::init<std::vector<Var>, std::vector<Val>>(), py::arg("vars"), py::arg("vals"))
        .def_property_readonly("vars", &Universe::vars)
        .def_property_readonly("vals", &Universe::vals)
        .def("states", [](const Universe& u) { return state_texts(u.states()); })
        .def("__eq__", [](const Universe& a, const Universe& b) { return a == b; })
        .def("__repr__", [](const Universe& u) {
            return "Universe(" + py::repr(py::cast(u.vars())).cast<std::string>() + ", " +
                   py::repr(py::cast(u.vals())).cast<std::string>() + ")";
        });

    py::class_<Bounds>(m, "Bounds")
        .def(py::init([](std::size_t star, std::size_t pad, std::size_t split, std::size_t guard) {
                 Bounds b;
                 b.star_bound = star;
                 b.pad_bound = pad;
                 b.split_bound = split;
                 b.node_guard = guard;
                 return b;
             }),
             py::arg("star_bound") = Bounds{}.star_bound, py::arg("pad_bound") = Bounds{}.pad_bound,
             py::arg("split_bound") = Bounds{}.split_bound, py::arg("node_guard") = Bounds{}.node_guard)
        .def_readwrite("star_bound", &Bounds::star_bound)
        .def_readwrite("pad_bound", &Bounds::pad_bound)
        .def_readwrite("split_bound", &Bounds::split_bound)
        .def_readwrite("node_guard", &Bounds::node_guard)
        .def("to_json", [](const Bounds& b) { return bounds_json(b).dump(); });

    m.def("format_term", [](const std::string& s) { return render_term(parse_term(s)); }, py::arg("text"));
    m.def("format_obs", [](const std::string& s) { return render_obs(parse_obs(s)); }, py::arg("text"));
    m.def("format_pomset", [](const std::string& s) { return render_pomset(parse_pomset(s)); }, py::arg("text"));

    m.def(
        "normal_form", [](const std::string& p, const Universe& u) { return state_texts(normal_form(parse_obs(p), u)); },
        py::arg("obs"), py::arg("universe"));
    m.def(
        "obs_equiv", [](const std::string& p, const std::string& q, const Universe& u) {
            return obs_equiv(parse_obs(p), parse_obs(q), u);
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("universe"));
    m.def(
        "obs_leq", [](const std::string& p, const std::string& q, const Universe& u) {
            return obs_leq(parse_obs(p), parse_obs(q), u);
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("universe"));

    m.def(
        "sem_unclosed",
        [](const std::string& e, const Universe& u, const Bounds& b) {
            return sorted_texts(sem_unclosed(parse_term(e), u, b));
        },
        py::arg("term"), py::arg("universe"), py::arg("bounds") = Bounds{});
    m.def(
        "sem", [](const std::string& e, const Universe& u, const Bounds& b) {
            return sorted_texts(sem_pocka(parse_term(e), u, b));
        },
        py::arg("term"), py::arg("universe"), py::arg("bounds") = Bounds{});
    m.def(
        "member",
        [](const std::string& p, const std::string& e, const Universe& u, const Bounds& b) {
            return closed_member(parse_pomset(p), parse_term(e), u, b);
        },
        py::arg("pomset"), py::arg("term"), py::arg("universe"), py::arg("bounds") = Bounds{});

    m.def(
        "guarded_json",
        [](const std::string& p, bool derive) {
            Pomset u = parse_pomset(p);
            GuardVerdict v = check_guarded(u);
            if (derive && v.guarded) v.derivation = derive_guarded(u);
            return verdict_json(u, v).dump();
        },
        py::arg("pomset"), py::arg("derive") = false);
    m.def(
        "enumerate_guarded",
        [](const Universe& u, std::size_t n) { return sorted_texts(enumerate_guarded(u, n)); }, py::arg("universe"),
        py::arg("n"));
    m.def(
        "to_dot",
        [](const std::string& p, bool violations) {
            Pomset u = parse_pomset(p);
            return render_dot(u, violations ? check_guarded(u).violations : std::vector<Violation>{});
        },
        py::arg("pomset"), py::arg("violations") = true);
    m.def(
        "property_p", [](const std::string& p) { return check_property_p(parse_pomset(p)).holds; }, py::arg("pomset"));

    m.def(
        "litmus_json",
        [](const std::string& text, const Bounds& b, bool swap, const std::optional<Universe>& u) {
            return litmus_json(run_litmus(parse_litmus(text, u), b, swap), b).dump();
        },
        py::arg("spec"), py::arg("bounds") = Bounds{}, py::arg("swap") = false, py::arg("universe") = std::nullopt);
}
